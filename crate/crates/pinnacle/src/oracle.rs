//! Brute-force ground truth over small symmetric groups.
//!
//! Everything here is exhaustive: counts, full distributions, ordering
//! witnesses, and vale-set families come from scanning all of `S_n`.
//! Guards keep the default sweeps at desk scale; the `*_with_guard`
//! variants override them.

use std::collections::{BTreeMap, BTreeSet};
use std::num::NonZeroUsize;

use num::bigint::BigUint;
use num::traits::Zero;

use crate::comb::factorial;
use crate::error::{Error, Result};
use crate::perm::{all_permutations_with_guard, Boundary, Permutation, ValueSet};

/// Default guard for oracle sweeps.
pub const DEFAULT_ORACLE_GUARD: u32 = 9;

/// The complete map from pinnacle set to its count over `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    n: u32,
    table: BTreeMap<ValueSet, BigUint>,
}

impl Distribution {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &BTreeMap<ValueSet, BigUint> {
        &self.table
    }

    pub fn get(&self, s: &ValueSet) -> BigUint {
        self.table.get(s).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.table.values().sum()
    }

    /// JSON object mapping canonical set strings to decimal count strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.table
                .iter()
                .map(|(s, c)| (s.to_string(), serde_json::Value::String(c.to_string())))
                .collect(),
        )
    }
}

fn worker_count() -> usize {
    let available = std::thread::available_parallelism()
        .map(NonZeroUsize::get)
        .unwrap_or(1);
    match std::env::var("PINNACLE_THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .unwrap_or(1)
            .min(available),
        Err(_) => available,
    }
}

/// Full pinnacle-set distribution over `S_n`, sharded by first letter.
pub fn distribution_with_guard(n: u32, max_n: u32) -> Result<Distribution> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if n > max_n {
        return Err(Error::Guard(format!(
            "refusing to sweep {n}! permutations (guard at n = {max_n})"
        )));
    }
    let workers = worker_count().min(n as usize);
    let shards: Vec<u32> = (1..=n).collect();
    let chunk = shards.len().div_ceil(workers);
    let tables: Vec<BTreeMap<ValueSet, u64>> = std::thread::scope(|scope| {
        shards
            .chunks(chunk)
            .map(|firsts| {
                scope.spawn(move || {
                    let mut table: BTreeMap<ValueSet, u64> = BTreeMap::new();
                    for &first in firsts {
                        sweep_with_first(n, first, &mut table);
                    }
                    table
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|h| h.join().expect("oracle shard panicked"))
            .collect()
    });
    let mut table: BTreeMap<ValueSet, BigUint> = BTreeMap::new();
    for shard in tables {
        for (k, v) in shard {
            *table.entry(k).or_insert_with(BigUint::zero) += BigUint::from(v);
        }
    }
    Ok(Distribution { n, table })
}

fn sweep_with_first(n: u32, first: u32, table: &mut BTreeMap<ValueSet, u64>) {
    use itertools::Itertools;
    let rest: Vec<u32> = (1..=n).filter(|&v| v != first).collect();
    let mut word = Vec::with_capacity(n as usize);
    if rest.is_empty() {
        *table.entry(ValueSet::empty()).or_insert(0) += 1;
        return;
    }
    for tail in rest.iter().copied().permutations(rest.len()) {
        word.clear();
        word.push(first);
        word.extend(tail);
        let p = Permutation::new(word.clone()).expect("valid by construction");
        *table.entry(p.pinnacle_set()).or_insert(0) += 1;
    }
}

/// Full distribution with the default guard.
pub fn distribution(n: u32) -> Result<Distribution> {
    distribution_with_guard(n, DEFAULT_ORACLE_GUARD)
}

/// Exhaustive `p_S(n)`.
pub fn brute_count_with_guard(s: &ValueSet, n: u32, max_n: u32) -> Result<BigUint> {
    let mut count: u64 = 0;
    for p in all_permutations_with_guard(n, max_n)? {
        if &p.pinnacle_set() == s {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Exhaustive `p_S(n)` with the default guard.
pub fn brute_count(s: &ValueSet, n: u32) -> Result<BigUint> {
    brute_count_with_guard(s, n, DEFAULT_ORACLE_GUARD)
}

/// Pinnacle orders realized by permutations of `S_m`, `m = max s`, keyed by
/// pinnacle set; one sweep covers every set with that maximum.
pub fn orderings_table_with_guard(
    m: u32,
    max_n: u32,
) -> Result<BTreeMap<ValueSet, BTreeSet<Vec<u32>>>> {
    let mut table: BTreeMap<ValueSet, BTreeSet<Vec<u32>>> = BTreeMap::new();
    for p in all_permutations_with_guard(m, max_n)? {
        let pins = p.pinnacle_set();
        let order: Vec<u32> = p
            .word()
            .iter()
            .copied()
            .filter(|&v| pins.contains(v))
            .collect();
        table.entry(pins).or_default().insert(order);
    }
    Ok(table)
}

/// The set of pinnacle orders realized for `s`, scanning `S_{max s}`.
pub fn brute_orderings_with_guard(s: &ValueSet, max_n: u32) -> Result<BTreeSet<Vec<u32>>> {
    let m = match s.max() {
        Some(m) => m,
        None => return Ok(BTreeSet::from([Vec::new()])),
    };
    let mut out = BTreeSet::new();
    for p in all_permutations_with_guard(m, max_n)? {
        let pins = p.pinnacle_set();
        if &pins != s {
            continue;
        }
        let order: Vec<u32> = p
            .word()
            .iter()
            .copied()
            .filter(|&v| pins.contains(v))
            .collect();
        out.insert(order);
    }
    Ok(out)
}

/// Realized orderings with the default guard.
pub fn brute_orderings(s: &ValueSet) -> Result<BTreeSet<Vec<u32>>> {
    brute_orderings_with_guard(s, DEFAULT_ORACLE_GUARD)
}

/// `{Val π (sentinel) | π ∈ S_n, Pin π = s}`.
pub fn brute_vale_family_with_guard(
    s: &ValueSet,
    n: u32,
    max_n: u32,
) -> Result<BTreeSet<ValueSet>> {
    let mut out = BTreeSet::new();
    for p in all_permutations_with_guard(n, max_n)? {
        if &p.pinnacle_set() == s {
            out.insert(p.vale_set(Boundary::Sentinel));
        }
    }
    Ok(out)
}

/// Sentinel vale families with the default guard (8: these scans pair with
/// per-family checks).
pub fn brute_vale_family(s: &ValueSet, n: u32) -> Result<BTreeSet<ValueSet>> {
    brute_vale_family_with_guard(s, n, 8)
}

/// `n!` for convenience in mass checks.
pub fn group_order(n: u32) -> BigUint {
    factorial(n as u64)
}
