//! Randomized invariant checks.

use proptest::prelude::*;

use num::bigint::BigUint;
use num::traits::One;

use pinnacle::admissible::{enumerate_admissible, eta, eta_inv, is_admissible};
use pinnacle::bijections::{lattice_path_from_subset, LatticePath};
use pinnacle::counting::{count_dale, count_vale_sets, enumerate_vale_sets};
use pinnacle::orderings::is_admissible_ordering;
use pinnacle::{Boundary, CyclicPermutation, Permutation, ValueSet};

fn permutation_strategy(max_n: u32) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<u32>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn admissible_set_strategy(max_n: u32) -> impl Strategy<Value = (ValueSet, u32)> {
    (3..=max_n).prop_flat_map(|n| {
        let sets = enumerate_admissible(n);
        (0..sets.len()).prop_map(move |i| (sets[i].clone(), n))
    })
}

proptest! {
    #[test]
    fn pinnacle_set_is_admissible(p in permutation_strategy(10)) {
        prop_assert!(is_admissible(&p.pinnacle_set()));
    }

    #[test]
    fn sentinel_vales_outnumber_pinnacles_by_one(p in permutation_strategy(10)) {
        prop_assert_eq!(
            p.vale_set(Boundary::Sentinel).len(),
            p.pinnacle_set().len() + 1
        );
    }

    #[test]
    fn peaks_and_pinnacles_have_equal_cardinality(p in permutation_strategy(10)) {
        prop_assert_eq!(p.peak_set().len(), p.pinnacle_set().len());
    }

    #[test]
    fn permutation_display_round_trips(p in permutation_strategy(10)) {
        let back: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn cyclic_canonicalization_is_rotation_invariant(
        p in permutation_strategy(9),
        cut in 0usize..9,
    ) {
        let w = p.word();
        let cut = cut % w.len();
        let mut rotated = w[cut..].to_vec();
        rotated.extend_from_slice(&w[..cut]);
        prop_assert_eq!(
            CyclicPermutation::from_word(rotated).unwrap(),
            CyclicPermutation::from_permutation(&p)
        );
    }

    #[test]
    fn value_set_string_round_trips(vals in proptest::collection::vec(1u32..100, 0..8)) {
        let s = ValueSet::new(vals).unwrap();
        let back: ValueSet = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn lattice_path_string_round_trips(vals in proptest::collection::vec(2u32..=12, 0..6)) {
        let a = ValueSet::new(vals).unwrap();
        let path = lattice_path_from_subset(&a, 12).unwrap();
        let back: LatticePath = path.to_string().parse().unwrap();
        prop_assert_eq!(back, path);
    }

    #[test]
    fn eta_round_trips_on_admissible_sets((s, _n) in admissible_set_strategy(14)) {
        prop_assume!(!s.is_empty());
        let m = ValueSet::max(&s).unwrap();
        prop_assert_eq!(eta(&eta_inv(&s).unwrap(), m).unwrap(), s);
    }

    #[test]
    fn every_admissible_set_is_realized((s, n) in admissible_set_strategy(14)) {
        prop_assert!(count_dale(&s, n).unwrap() >= BigUint::one());
    }

    #[test]
    fn vale_family_size_matches_formula((s, n) in admissible_set_strategy(11)) {
        let fam = enumerate_vale_sets(&s, n).unwrap();
        prop_assert_eq!(
            count_vale_sets(&s, n).unwrap(),
            BigUint::from(fam.len())
        );
        // every member contains 1 and has d + 1 elements
        for t in fam.members() {
            prop_assert!(t.contains(1));
            prop_assert_eq!(t.len(), s.len() + 1);
        }
    }

    #[test]
    fn sorted_ordering_is_always_admissible((s, _n) in admissible_set_strategy(14)) {
        // the ascending arrangement is realized by the interleaved construction
        prop_assert!(is_admissible_ordering(&s, s.values()).unwrap());
    }

    #[test]
    fn observed_pinnacle_order_is_admissible(p in permutation_strategy(9)) {
        let pins = p.pinnacle_set();
        let order: Vec<u32> = p
            .word()
            .iter()
            .copied()
            .filter(|&v| pins.contains(v))
            .collect();
        prop_assert!(is_admissible_ordering(&pins, &order).unwrap());
    }
}
