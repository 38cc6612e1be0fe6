//! Command-line surface for the pinnacle-set toolkit.
//!
//! Exit codes: 0 on success, 1 on a domain error (the message names the
//! violated precondition), 2 on a usage error.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num::bigint::BigUint;

use pinnacle::admissible::{count_admissible, enumerate_admissible, is_admissible};
use pinnacle::bench::{run_benchmark, Algorithm, BenchSpec};
use pinnacle::counting::{
    count_by_ordering, count_closed, count_composition, count_dale, count_vale, count_vale_sets,
    enumerate_vale_sets,
};
use pinnacle::oracle::{self, brute_count_with_guard, distribution_with_guard};
use pinnacle::orderings::{count_orderings, enumerate_orderings, is_admissible_ordering};
use pinnacle::perm::DEFAULT_PERM_GUARD;
use pinnacle::{Boundary, Error, Permutation, ValueSet};

#[derive(Parser)]
#[command(
    name = "pinnacle",
    about = "Exact counting and statistics for pinnacle sets of permutations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit machine-readable JSON (counts as decimal strings).
    #[arg(long, global = true)]
    json: bool,
    /// Lift the size guards that protect against runaway sweeps.
    #[arg(long, global = true)]
    override_guards: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Pinnacle, peak, and vale statistics of one permutation.
    Stats {
        /// Permutation in one-line notation, e.g. "1 8 5 2 4 3 7 6".
        #[arg(long)]
        perm: String,
        #[command(flatten)]
        common: Common,
    },
    /// Test a set for admissibility as a pinnacle set.
    Admissible {
        /// Comma-separated set, e.g. 4,7,9.
        #[arg(long)]
        set: String,
        #[command(flatten)]
        common: Common,
    },
    /// List every admissible pinnacle set inside [n].
    Enumerate {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Count permutations of [n] with the given pinnacle set.
    Count {
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: u32,
        /// Counting algorithm.
        #[arg(long, default_value = "dale", value_parser = ["dale", "comp", "vale", "closed", "brute"])]
        algo: String,
        /// Restrict to permutations whose pinnacles appear in this order,
        /// e.g. --ordering 5,3 (ignores --algo).
        #[arg(long)]
        ordering: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Count and list the admissible orderings of a pinnacle set.
    Orderings {
        #[arg(long)]
        set: String,
        /// Test one specific ordering instead of listing all of them.
        #[arg(long)]
        ordering: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Enumerate the admissible vale sets V_n(S).
    Valesets {
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Time the counting algorithms against each other.
    Bench {
        /// Sets to benchmark (repeatable); defaults to four spread patterns
        /// with ten pinnacles each.
        #[arg(long = "set")]
        sets: Vec<String>,
        #[arg(long, default_value_t = 1000)]
        n: u32,
        /// Algorithms to compare (repeatable); defaults to composition and
        /// vale.
        #[arg(long = "algo")]
        algos: Vec<String>,
        #[arg(long, default_value_t = 3)]
        reps: u32,
        #[arg(long, default_value_t = 1)]
        warmup: u32,
        /// Write the report as CSV to this path.
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Cross-check every formula against the brute-force oracle.
    Selftest {
        /// Largest n for the oracle sweep.
        #[arg(long, default_value_t = 7)]
        max_n: u32,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors
            e.exit();
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn parse_set(text: &str) -> Result<ValueSet, Error> {
    text.parse()
}

fn parse_ordering(text: &str) -> Result<Vec<u32>, Error> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad ordering entry {t:?}")))
        })
        .collect()
}

fn print_json(value: serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("serializable")
    );
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Stats { perm, common } => {
            let p = Permutation::from_str(&perm)?;
            let pins = p.pinnacle_set();
            let peaks = p.peak_set();
            let vales = p.vale_set(Boundary::Sentinel);
            if common.json {
                print_json(serde_json::json!({
                    "permutation": p.to_string(),
                    "n": p.n(),
                    "pinnacles": pins.to_string(),
                    "peaks": peaks.to_string(),
                    "vales_sentinel": vales.to_string(),
                    "vales_interior": p.vale_set(Boundary::Interior).to_string(),
                }));
            } else {
                println!("permutation: {p}");
                println!("pinnacles: {{{pins}}}");
                println!("peaks: {{{peaks}}}");
                println!("vales (sentinel): {{{vales}}}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Admissible { set, common } => {
            let s = parse_set(&set)?;
            let ok = is_admissible(&s);
            if common.json {
                print_json(serde_json::json!({
                    "set": s.to_string(),
                    "admissible": ok,
                }));
            } else {
                println!("{{{s}}} admissible: {ok}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, common } => {
            if n == 0 {
                return Err(Error::Domain("n must be positive".into()));
            }
            let sets = enumerate_admissible(n);
            if common.json {
                print_json(serde_json::json!({
                    "n": n,
                    "count": count_admissible(n)?.to_string(),
                    "sets": sets.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                }));
            } else {
                for s in &sets {
                    println!("{{{s}}}");
                }
                println!("total: {}", sets.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count {
            set,
            n,
            algo,
            ordering,
            common,
        } => {
            let s = parse_set(&set)?;
            let count: BigUint = match &ordering {
                Some(text) => {
                    let sigma = parse_ordering(text)?;
                    count_by_ordering(&s, n, &sigma)?
                }
                None => match algo.as_str() {
                    "dale" => count_dale(&s, n)?,
                    "comp" => count_composition(&s, n)?,
                    "vale" => count_vale(&s, n)?,
                    "closed" => count_closed(&s, n)?,
                    "brute" => {
                        let guard = if common.override_guards {
                            DEFAULT_PERM_GUARD
                        } else {
                            oracle::DEFAULT_ORACLE_GUARD
                        };
                        brute_count_with_guard(&s, n, guard)?
                    }
                    other => return Err(Error::Parse(format!("unknown algorithm {other:?}"))),
                },
            };
            if common.json {
                print_json(serde_json::json!({
                    "set": s.to_string(),
                    "n": n,
                    "algo": if ordering.is_some() { "by-ordering" } else { algo.as_str() },
                    "ordering": ordering,
                    "count": count.to_string(),
                }));
            } else {
                println!("{count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orderings {
            set,
            ordering,
            common,
        } => {
            let s = parse_set(&set)?;
            if let Some(text) = ordering {
                let sigma = parse_ordering(&text)?;
                let ok = is_admissible_ordering(&s, &sigma)?;
                if common.json {
                    print_json(serde_json::json!({
                        "set": s.to_string(),
                        "ordering": sigma,
                        "admissible": ok,
                    }));
                } else {
                    println!("admissible: {ok}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let count = count_orderings(&s)?;
            let listed = enumerate_orderings(&s)?;
            if common.json {
                print_json(serde_json::json!({
                    "set": s.to_string(),
                    "count": count.to_string(),
                    "orderings": listed,
                }));
            } else {
                for sigma in &listed {
                    let mut line = String::new();
                    for (i, v) in sigma.iter().enumerate() {
                        if i > 0 {
                            line.push(' ');
                        }
                        write!(line, "{v}").unwrap();
                    }
                    println!("{line}");
                }
                println!("count: {count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Valesets { set, n, common } => {
            let s = parse_set(&set)?;
            let count = count_vale_sets(&s, n)?;
            let family = enumerate_vale_sets(&s, n)?;
            if common.json {
                print_json(serde_json::json!({
                    "set": s.to_string(),
                    "n": n,
                    "count": count.to_string(),
                    "members": family.members().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                }));
            } else {
                for t in family.members() {
                    println!("{{{t}}}");
                }
                println!("count: {count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            sets,
            n,
            algos,
            reps,
            warmup,
            csv,
            common,
        } => {
            let sets: Vec<ValueSet> = if sets.is_empty() {
                default_bench_sets()
            } else {
                sets.iter()
                    .map(|t| parse_set(t))
                    .collect::<Result<_, _>>()?
            };
            let algorithms: Vec<Algorithm> = if algos.is_empty() {
                vec![Algorithm::Composition, Algorithm::Vale]
            } else {
                algos.iter().map(|t| t.parse()).collect::<Result<_, _>>()?
            };
            let spec = BenchSpec {
                sets,
                n,
                algorithms,
                repetitions: reps,
                warmup,
            };
            let report = run_benchmark(&spec)?;
            if let Some(path) = csv {
                std::fs::write(&path, report.to_csv())
                    .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
            }
            if common.json {
                print_json(report.to_json());
            } else {
                print!("{}", report.to_csv());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { max_n, common } => {
            let failures = selftest(max_n, common.override_guards)?;
            if failures == 0 {
                println!("selftest: all checks passed up to n = {max_n}");
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("selftest: {failures} mismatch(es)");
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Arithmetic progressions 3, 3+k, 3+2k, … with ten terms, k = 2…5: the
/// narrow-to-wide spread sweep used for algorithm comparison.
fn default_bench_sets() -> Vec<ValueSet> {
    (2u32..=5)
        .map(|step| {
            ValueSet::new((0..10).map(|i| 3 + i * step).collect()).expect("positive values")
        })
        .collect()
}

/// Oracle-equivalence sweep: every counting formula against brute force for
/// all admissible sets up to `max_n`, plus the mass check Σ p_S(n) = n!.
fn selftest(max_n: u32, override_guards: bool) -> Result<u64, Error> {
    let guard = if override_guards {
        DEFAULT_PERM_GUARD
    } else {
        oracle::DEFAULT_ORACLE_GUARD
    };
    let mut failures = 0u64;
    for n in 1..=max_n {
        let dist = distribution_with_guard(n, guard)?;
        let mut mass = BigUint::from(0u32);
        for s in enumerate_admissible(n) {
            let expect = dist.get(&s);
            let dale = count_dale(&s, n)?;
            let comp = count_composition(&s, n)?;
            let vale = count_vale(&s, n)?;
            mass += &dale;
            for (name, got) in [("dale", &dale), ("composition", &comp), ("vale", &vale)] {
                if got != &expect {
                    eprintln!("mismatch: {name}(S = {{{s}}}, n = {n}) = {got}, oracle = {expect}");
                    failures += 1;
                }
            }
            if s.len() <= 2 {
                let closed = count_closed(&s, n)?;
                if closed != expect {
                    eprintln!(
                        "mismatch: closed(S = {{{s}}}, n = {n}) = {closed}, oracle = {expect}"
                    );
                    failures += 1;
                }
            }
        }
        if mass != oracle::group_order(n) {
            eprintln!("mismatch: Σ_S p_S({n}) = {mass}, expected {n}!");
            failures += 1;
        }
        println!(
            "n = {n}: {} admissible sets checked",
            enumerate_admissible(n).len()
        );
    }
    Ok(failures)
}
