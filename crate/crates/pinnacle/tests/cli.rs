//! Black-box tests of the command-line binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinnacle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn stats_reports_pinnacles_and_peaks() {
    let out = run(&["stats", "--perm", "1 8 5 2 4 3 7 6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pinnacles: {4,7,8}"), "{text}");
    assert!(text.contains("peaks: {2,5,7}"), "{text}");
}

#[test]
fn count_agrees_with_brute_force() {
    let fast = run(&["count", "--set", "4,7,9", "--n", "9", "--algo", "dale"]);
    let brute = run(&["count", "--set", "4,7,9", "--n", "9", "--algo", "brute"]);
    assert!(fast.status.success() && brute.status.success());
    assert_eq!(stdout(&fast), stdout(&brute));
    assert!(stdout(&fast).trim().parse::<u64>().unwrap() > 0);
}

#[test]
fn count_honors_every_algorithm() {
    let mut results = Vec::new();
    for algo in ["dale", "comp", "vale", "brute"] {
        let out = run(&["count", "--set", "3,5", "--n", "7", "--algo", algo]);
        assert!(out.status.success(), "algo = {algo}");
        results.push(stdout(&out).trim().to_string());
    }
    assert!(results.iter().all(|r| r == &results[0]), "{results:?}");
    let closed = run(&["count", "--set", "3,5", "--n", "7", "--algo", "closed"]);
    assert_eq!(stdout(&closed).trim(), results[0]);
}

#[test]
fn count_by_ordering_flag() {
    let out = run(&["count", "--set", "3,5", "--n", "5", "--ordering", "3,5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn orderings_lists_and_counts() {
    let out = run(&["orderings", "--set", "3,5,7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("count: 4"), "{text}");
    for line in ["3 5 7", "5 3 7", "7 3 5", "7 5 3"] {
        assert!(text.lines().any(|l| l == line), "missing {line}: {text}");
    }
    let check = run(&["orderings", "--set", "3,5,7", "--ordering", "3,7,5"]);
    assert!(stdout(&check).contains("admissible: false"));
}

#[test]
fn json_output_uses_decimal_strings() {
    let out = run(&["count", "--set", "3", "--n", "10", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], serde_json::json!("256"));
    assert!(v["count"].is_string());
}

#[test]
fn valesets_enumerates_family() {
    let out = run(&["valesets", "--set", "4", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("{1,2}") && text.contains("{1,3}"), "{text}");
    assert!(text.contains("count: 2"), "{text}");
}

#[test]
fn domain_error_exits_one() {
    let out = run(&["count", "--set", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("not admissible"), "{err}");
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["count", "--set", "3", "--n", "5", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn guard_refusal_and_override() {
    let guarded = run(&["count", "--set", "3", "--n", "10", "--algo", "brute"]);
    assert_eq!(guarded.status.code(), Some(1));
    let overridden = run(&[
        "count",
        "--set",
        "3",
        "--n",
        "10",
        "--algo",
        "brute",
        "--override-guards",
    ]);
    assert!(overridden.status.success());
    assert_eq!(stdout(&overridden).trim(), "256");
}

#[test]
fn selftest_passes_small() {
    let out = run(&["selftest", "--max-n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn bench_emits_csv() {
    let out = run(&[
        "bench", "--set", "3,5", "--n", "20", "--algo", "comp", "--algo", "vale", "--reps", "1",
        "--warmup", "0",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "set,algo,n,reps,mean_s,min_s,count");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r.starts_with("\"3,5\",")));
    let count = rows[0].rsplit(',').next().unwrap();
    assert!(rows[1].ends_with(count));
}
