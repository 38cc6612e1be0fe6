//! Admissible orderings of a pinnacle set: which arrangements of `S` occur
//! as the left-to-right pinnacle order of some permutation, and how many.
//!
//! An ordering `σ` of `S` is lifted to the cyclic ordering of `S ∪ {n+1}`
//! by appending the sentinel maximum; the lift is bijective because the
//! sentinel gives a unique cut point.  Everything here is independent of the
//! ambient `n`: only the gaps `n_0 … n_{d-1}` below the largest pinnacle are
//! ever consulted, so the ambient size is taken to be `max S`.

use num::bigint::BigUint;
use num::traits::Zero;

use itertools::Itertools;

use crate::comb::factorial;
use crate::counting::{dale_rank_set, DaleRank, GapProfile};
use crate::error::{Error, Result};
use crate::perm::ValueSet;

/// Default guard on `d` for exhaustive ordering enumeration.
pub const DEFAULT_ORDERING_GUARD: usize = 8;

fn gaps_for(s: &ValueSet) -> Result<Vec<u64>> {
    // ambient n = max S; admissibility upward means larger n changes nothing
    let n = s
        .max()
        .ok_or_else(|| Error::Domain("ordering operations need d ≥ 1".into()))?;
    Ok(GapProfile::new(s, n)?.gaps().to_vec())
}

fn lift_to_cyclic_indices(s: &ValueSet, sigma: &[u32]) -> Result<Vec<u32>> {
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    if sorted != s.values() {
        return Err(Error::Domain(format!(
            "ordering is not a rearrangement of {s}"
        )));
    }
    let d = s.len() as u32;
    Ok(sigma
        .iter()
        .map(|&v| s.values().binary_search(&v).unwrap() as u32 + 1)
        .chain(std::iter::once(d + 1))
        .collect())
}

/// The feasibility criterion: sorted dale ranks `r_1 ≤ … ≤ r_{d+1}` must
/// satisfy `j ≤ n_0 + n_1 + ⋯ + n_{r_j - 1}` for every `j`.
fn delta(sorted_ranks: &[u32], gaps: &[u64]) -> bool {
    let prefix: Vec<u64> = gaps
        .iter()
        .scan(0u64, |acc, &g| {
            *acc += g;
            Some(*acc)
        })
        .collect();
    sorted_ranks
        .iter()
        .enumerate()
        .all(|(j0, &r)| (j0 as u64 + 1) <= prefix[r as usize - 1])
}

/// Whether `sigma` is realized as the pinnacle order of some permutation
/// with pinnacle set `s`.
pub fn is_admissible_ordering(s: &ValueSet, sigma: &[u32]) -> Result<bool> {
    if s.is_empty() {
        return if sigma.is_empty() {
            Ok(true) // the empty ordering of the empty set
        } else {
            Err(Error::Domain(format!(
                "ordering is not a rearrangement of {s}"
            )))
        };
    }
    let gaps = gaps_for(s)?;
    let tau = lift_to_cyclic_indices(s, sigma)?;
    let dales = dale_rank_set(&tau)?;
    let ranks: Vec<u32> = dales.iter().map(|d| d.rank).collect();
    Ok(delta(&ranks, &gaps))
}

fn check_nonempty_admissible(s: &ValueSet) -> Result<usize> {
    // validates admissibility and computes d; d = 0 is handled by callers
    let d = s.len();
    if d > 0 {
        gaps_for(s)?;
    }
    Ok(d)
}

/// `#O(S)` by summing over subsets `B ⊆ D - {1_l, 1_r}` of size `d - 1`.
///
/// The multiplicity product uses the ranks of `B` alone while the
/// feasibility filter `δ` reads the ranks of `B ∪ {1_l, 1_r}`; this split is
/// validated against brute force in the tests.  `d = 0` returns 1 (the
/// empty ordering) by convention.
pub fn count_orderings(s: &ValueSet) -> Result<BigUint> {
    count_orderings_filtered(s, true)
}

/// Same sum as [`count_orderings`] with the `δ` filter dropped; always
/// totals `d!` because every cyclic ordering is then counted once.
pub fn count_orderings_unfiltered(s: &ValueSet) -> Result<BigUint> {
    count_orderings_filtered(s, false)
}

fn count_orderings_filtered(s: &ValueSet, apply_delta: bool) -> Result<BigUint> {
    let d = check_nonempty_admissible(s)?;
    if d == 0 {
        return Ok(BigUint::from(1u32));
    }
    let gaps = gaps_for(s)?;
    let mut total = BigUint::zero();
    // D' has 2(d-1) elements, ranks 2..=d
    let bits = 2 * (d - 1);
    for mask in 0u64..(1u64 << bits) {
        if mask.count_ones() as usize != d - 1 {
            continue;
        }
        let ranks: Vec<u32> = (0..bits)
            .filter(|bit| mask >> bit & 1 == 1)
            .map(|bit| bit as u32 / 2 + 2)
            .collect();
        if apply_delta {
            let mut augmented = vec![1, 1];
            augmented.extend_from_slice(&ranks);
            if !delta(&augmented, &gaps) {
                continue;
            }
        }
        // ∏_{i=0}^{d-2} (d+1-i-r_{d-1-i})
        let mut prod: u64 = 1;
        for i in 0..d - 1 {
            let factor = d as i64 + 1 - i as i64 - ranks[d - 2 - i] as i64;
            if factor <= 0 {
                prod = 0;
                break;
            }
            prod *= factor as u64;
        }
        total += BigUint::from(prod);
    }
    Ok(total)
}

/// `#O(S)` summed over compositions `α` with `d - 1` parts in `{0, 1, 2}`
/// summing to `d - 1`, each standing for `2^o` subsets; equals
/// [`count_orderings`].
pub fn count_orderings_composition(s: &ValueSet) -> Result<BigUint> {
    let d = check_nonempty_admissible(s)?;
    if d == 0 {
        return Ok(BigUint::from(1u32));
    }
    let gaps = gaps_for(s)?;
    let mut total = BigUint::zero();
    let mut parts = vec![0u8; d - 1];
    fn rec(
        i: usize,
        remaining: usize,
        ones: u32,
        d: usize,
        parts: &mut Vec<u8>,
        gaps: &[u64],
        total: &mut BigUint,
    ) {
        if i == parts.len() {
            if remaining != 0 {
                return;
            }
            // ranks of B: part j holds the multiplicity of rank j + 2
            let ranks: Vec<u32> = parts
                .iter()
                .enumerate()
                .flat_map(|(j, &p)| std::iter::repeat_n(j as u32 + 2, p as usize))
                .collect();
            let mut augmented = vec![1, 1];
            augmented.extend_from_slice(&ranks);
            if !delta(&augmented, gaps) {
                return;
            }
            let mut prod: u64 = 1;
            for i in 0..d - 1 {
                let factor = d as i64 + 1 - i as i64 - ranks[d - 2 - i] as i64;
                if factor <= 0 {
                    return;
                }
                prod *= factor as u64;
            }
            *total += BigUint::from(prod) << ones;
            return;
        }
        for p in 0u8..=2.min(remaining as u8) {
            parts[i] = p;
            rec(
                i + 1,
                remaining - p as usize,
                ones + u32::from(p == 1),
                d,
                parts,
                gaps,
                total,
            );
        }
        parts[i] = 0;
    }
    rec(0, d - 1, 0, d, &mut parts, &gaps, &mut total);
    Ok(total)
}

/// All admissible orderings of `s` in lexicographic order.
pub fn enumerate_orderings(s: &ValueSet) -> Result<Vec<Vec<u32>>> {
    let d = check_nonempty_admissible(s)?;
    if d == 0 {
        return Ok(vec![Vec::new()]);
    }
    if d > DEFAULT_ORDERING_GUARD {
        return Err(Error::Guard(format!(
            "refusing to enumerate {d}! orderings (guard at d = {DEFAULT_ORDERING_GUARD})"
        )));
    }
    let mut out = Vec::new();
    for sigma in s.values().iter().copied().permutations(d) {
        if is_admissible_ordering(s, &sigma)? {
            out.push(sigma);
        }
    }
    Ok(out)
}

/// Ranks of the dale rank set of `sigma`'s cyclic lift, sorted; exposed for
/// cross-checks with the counting module.
pub fn lifted_dale_ranks(s: &ValueSet, sigma: &[u32]) -> Result<Vec<DaleRank>> {
    let tau = lift_to_cyclic_indices(s, sigma)?;
    dale_rank_set(&tau)
}

/// `d!` as a big integer; the unfiltered sum must equal this.
pub fn total_orderings(d: usize) -> BigUint {
    factorial(d as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(s: &str) -> ValueSet {
        s.parse().unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn feasibility_examples() {
        let s = vs("3,5,7");
        assert!(is_admissible_ordering(&s, &[5, 3, 7]).unwrap());
        assert!(!is_admissible_ordering(&s, &[3, 7, 5]).unwrap());
        assert!(is_admissible_ordering(&vs("4"), &[4]).unwrap());
        assert!(is_admissible_ordering(&s, &[3, 5]).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_orderings(&vs("3,5,7")).unwrap(), big(4));
        assert_eq!(count_orderings(&vs("5")).unwrap(), big(1));
        assert_eq!(count_orderings(&vs("3,5")).unwrap(), big(2));
        assert_eq!(count_orderings(&ValueSet::empty()).unwrap(), big(1));
    }

    #[test]
    fn composition_count_examples() {
        assert_eq!(count_orderings_composition(&vs("3,5,7")).unwrap(), big(4));
        assert_eq!(count_orderings_composition(&vs("3,6")).unwrap(), big(2));
        assert_eq!(
            count_orderings_composition(&vs("3,5,7,9")).unwrap(),
            count_orderings(&vs("3,5,7,9")).unwrap()
        );
    }

    #[test]
    fn subset_and_composition_agree() {
        for n in 1..=12 {
            for s in crate::admissible::enumerate_admissible(n) {
                assert_eq!(
                    count_orderings(&s).unwrap(),
                    count_orderings_composition(&s).unwrap(),
                    "S = {s}"
                );
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let sigmas = enumerate_orderings(&vs("3,5,7")).unwrap();
        assert_eq!(
            sigmas,
            vec![vec![3, 5, 7], vec![5, 3, 7], vec![7, 3, 5], vec![7, 5, 3]]
        );
        assert_eq!(enumerate_orderings(&vs("4")).unwrap(), vec![vec![4]]);
        assert_eq!(
            enumerate_orderings(&vs("3,5")).unwrap(),
            vec![vec![3, 5], vec![5, 3]]
        );
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 1..=9 {
            for s in crate::admissible::enumerate_admissible(n) {
                let listed = enumerate_orderings(&s).unwrap();
                assert_eq!(
                    count_orderings(&s).unwrap(),
                    BigUint::from(listed.len()),
                    "S = {s}"
                );
            }
        }
    }

    #[test]
    fn dropping_delta_gives_factorial() {
        for n in 1..=13 {
            for s in crate::admissible::enumerate_admissible(n) {
                if s.len() > 6 {
                    continue;
                }
                assert_eq!(
                    count_orderings_unfiltered(&s).unwrap(),
                    total_orderings(s.len()),
                    "S = {s}"
                );
            }
        }
    }

    #[test]
    fn reversal_symmetry() {
        for n in 1..=10 {
            for s in crate::admissible::enumerate_admissible(n) {
                if s.len() > 5 {
                    continue;
                }
                use itertools::Itertools;
                for sigma in s.values().iter().copied().permutations(s.len()) {
                    let mut rev = sigma.clone();
                    rev.reverse();
                    assert_eq!(
                        is_admissible_ordering(&s, &sigma).unwrap(),
                        is_admissible_ordering(&s, &rev).unwrap(),
                        "S = {s}, σ = {sigma:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn wrong_orderings_example_357() {
        let sigmas = enumerate_orderings(&vs("3,5,7")).unwrap();
        assert!(sigmas.contains(&vec![5, 3, 7]));
        assert!(!sigmas.contains(&vec![3, 7, 5]));
    }
}
