//! Wall-clock comparison of the counting algorithms on large ambient sizes.
//!
//! The harness times each (set, algorithm) pair with unrecorded warmup runs
//! followed by recorded repetitions, cross-asserts that every algorithm
//! reports the same exact count per set, and emits CSV or JSON.  Measurement
//! itself is single-threaded; timing uses the monotonic [`Instant`] clock.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num::bigint::BigUint;
use serde::Serialize;

use crate::counting::{count_closed, count_composition, count_dale, count_vale};
use crate::error::{Error, Result};
use crate::perm::ValueSet;

/// A counting algorithm selectable for benchmarking.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Dale,
    Composition,
    Vale,
    Closed,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Dale,
        Algorithm::Composition,
        Algorithm::Vale,
        Algorithm::Closed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dale => "dale",
            Algorithm::Composition => "composition",
            Algorithm::Vale => "vale",
            Algorithm::Closed => "closed",
        }
    }

    /// Run the algorithm once.
    pub fn count(self, s: &ValueSet, n: u32) -> Result<BigUint> {
        match self {
            Algorithm::Dale => count_dale(s, n),
            Algorithm::Composition => count_composition(s, n),
            Algorithm::Vale => count_vale(s, n),
            Algorithm::Closed => count_closed(s, n),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dale" => Ok(Algorithm::Dale),
            "comp" | "composition" => Ok(Algorithm::Composition),
            "vale" => Ok(Algorithm::Vale),
            "closed" => Ok(Algorithm::Closed),
            other => Err(Error::Parse(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// What to benchmark: which sets, ambient size, algorithms, and trial counts.
#[derive(Clone, Debug)]
pub struct BenchSpec {
    pub sets: Vec<ValueSet>,
    pub n: u32,
    pub algorithms: Vec<Algorithm>,
    pub repetitions: u32,
    pub warmup: u32,
}

impl BenchSpec {
    fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::Domain("repetitions must be ≥ 1".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Domain("no algorithms selected".into()));
        }
        if self.sets.is_empty() {
            return Err(Error::Domain("no sets selected".into()));
        }
        for s in &self.sets {
            // surfaces inadmissible or out-of-range sets before any timing
            crate::counting::GapProfile::new(s, self.n)?;
        }
        Ok(())
    }
}

/// One timed (set, algorithm) pair.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub set: String,
    pub algo: Algorithm,
    pub n: u32,
    pub reps: u32,
    pub mean_s: f64,
    pub min_s: f64,
    /// Exact count in decimal; identical across algorithms for a set.
    pub count: String,
}

/// The full benchmark result.
#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// Mean seconds for one (set, algorithm) pair, if present.
    pub fn mean_for(&self, set: &ValueSet, algo: Algorithm) -> Option<f64> {
        let key = set.to_string();
        self.rows
            .iter()
            .find(|r| r.set == key && r.algo == algo)
            .map(|r| r.mean_s)
    }

    /// Deterministic CSV with the fixed column order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("set,algo,n,reps,mean_s,min_s,count\n");
        for r in &self.rows {
            // sets contain commas, so the set column is quoted
            out.push_str(&format!(
                "\"{}\",{},{},{},{:.9},{:.9},{}\n",
                r.set, r.algo, r.n, r.reps, r.mean_s, r.min_s, r.count
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Time every requested algorithm on every requested set.
///
/// Warmup runs are executed and discarded, then `repetitions` timed runs are
/// recorded per pair.  All algorithms must produce the identical count for a
/// set; a mismatch aborts with an integrity error rather than emitting a
/// report that silently disagrees with itself.
pub fn run_benchmark(spec: &BenchSpec) -> Result<BenchReport> {
    spec.validate()?;
    let mut rows = Vec::new();
    for s in &spec.sets {
        let mut agreed: Option<BigUint> = None;
        for &algo in &spec.algorithms {
            for _ in 0..spec.warmup {
                algo.count(s, spec.n)?;
            }
            let mut total = 0.0f64;
            let mut min = f64::INFINITY;
            let mut count = BigUint::from(0u32);
            for _ in 0..spec.repetitions {
                let start = Instant::now();
                count = algo.count(s, spec.n)?;
                let elapsed = start.elapsed().as_secs_f64();
                total += elapsed;
                min = min.min(elapsed);
            }
            match &agreed {
                None => agreed = Some(count.clone()),
                Some(expect) if expect == &count => {}
                Some(expect) => {
                    return Err(Error::Integrity(format!(
                        "algorithms disagree on S = {s}, n = {}: {expect} vs {count} ({algo})",
                        spec.n
                    )));
                }
            }
            rows.push(BenchRow {
                set: s.to_string(),
                algo,
                n: spec.n,
                reps: spec.repetitions,
                mean_s: total / spec.repetitions as f64,
                min_s: min,
                count: count.to_string(),
            });
        }
    }
    Ok(BenchReport { rows })
}
