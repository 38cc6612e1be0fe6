//! Admissible pinnacle sets, their counts, and the ballot-sequence bijection.
//!
//! A set `S = {s_1 < … < s_d}` is an admissible pinnacle set exactly when
//! `s_i > 2i` for every `i`.  The number of admissible sets with maximum `m`
//! and cardinality `d` is a ballot number, and the map `η` realizes the
//! correspondence explicitly.

use std::fmt;
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::comb::{binomial, factorial};
use crate::error::{Error, Result};
use crate::perm::ValueSet;

/// Default guard on `p + q` for exhaustive ballot-sequence enumeration.
pub const DEFAULT_BALLOT_GUARD: u64 = 24;

/// True iff `s_i > 2i` for all `i`; the empty set is admissible (it is the
/// pinnacle set of the decreasing permutation).
pub fn is_admissible(s: &ValueSet) -> bool {
    s.iter()
        .enumerate()
        .all(|(i, v)| v as u64 > 2 * (i as u64 + 1))
}

/// All admissible sets `S ⊆ [3, n]`, including the empty set, in
/// lexicographic order.
pub fn enumerate_admissible(n: u32) -> Vec<ValueSet> {
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::new();
    fn extend(prefix: &mut Vec<u32>, n: u32, out: &mut Vec<ValueSet>) {
        out.push(ValueSet::new(prefix.clone()).expect("positive values"));
        let lo = prefix.last().map_or(3, |&v| v + 1);
        let next_index = prefix.len() as u32 + 1;
        for v in lo..=n {
            if v > 2 * next_index {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    extend(&mut prefix, n, &mut out);
    out
}

/// `#A_n = C(n-1, ⌊(n-1)/2⌋)`, the number of admissible sets for `S_n`.
pub fn count_admissible(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let n = n as u64;
    Ok(binomial(n - 1, (n - 1) / 2))
}

/// `p(m, d)`: the number of admissible sets with maximum `m` and
/// cardinality `d`.  Zero unless `m > 2d`; otherwise
/// `((m - 2d + 1) / (m - 1)) · C(m-1, d-1)`, computed with the division
/// last and exactness asserted.
pub fn pinnacle_count(m: u64, d: u64) -> Result<BigUint> {
    if m == 0 || d == 0 {
        return Err(Error::Domain("m and d must be positive".into()));
    }
    if m <= 2 * d {
        return Ok(BigUint::zero());
    }
    let numerator = binomial(m - 1, d - 1) * BigUint::from(m - 2 * d + 1);
    let denom = BigUint::from(m - 1);
    let (quot, rem) = num::Integer::div_rem(&numerator, &denom);
    assert!(
        rem.is_zero(),
        "pinnacle_count numerator not divisible by m-1"
    );
    Ok(quot)
}

/// The degree `d-1` polynomial `p_d(m) = ((m-2d+1)/(d-1)!) ∏_{i=2}^{d-1} (m-i)`
/// evaluated exactly as a rational.
///
/// For `d = 1` the theorem `p(m, 1) = p_1(m)` forces the constant
/// polynomial 1, which is what the forward-difference recurrence
/// `Δp_2 = p_1` needs as well.
pub fn pd_polynomial(d: u64, m: i64) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::Domain("d must be positive".into()));
    }
    if d == 1 {
        return Ok(BigRational::one());
    }
    let mut num = BigInt::from(m - 2 * d as i64 + 1);
    for i in 2..=(d as i64 - 1) {
        num *= BigInt::from(m - i);
    }
    let den = BigInt::from(factorial(d - 1));
    Ok(BigRational::new(num, den))
}

/// A precomputed table of `p(m, d)` values for `m ≤ max_m`, `d ≤ max_d`.
///
/// Entries are zero whenever `m ≤ 2d`: no admissible set has so small a
/// maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinnacleCountTable {
    max_m: u64,
    max_d: u64,
    entries: std::collections::BTreeMap<(u64, u64), BigUint>,
}

impl PinnacleCountTable {
    pub fn new(max_m: u64, max_d: u64) -> Result<Self> {
        if max_m == 0 || max_d == 0 {
            return Err(Error::Domain("table bounds must be positive".into()));
        }
        let mut entries = std::collections::BTreeMap::new();
        for m in 1..=max_m {
            for d in 1..=max_d {
                entries.insert((m, d), pinnacle_count(m, d)?);
            }
        }
        Ok(PinnacleCountTable {
            max_m,
            max_d,
            entries,
        })
    }

    /// `p(m, d)`, or `None` outside the table bounds.
    pub fn get(&self, m: u64, d: u64) -> Option<&BigUint> {
        self.entries.get(&(m, d))
    }

    pub fn max_m(&self) -> u64 {
        self.max_m
    }

    pub fn max_d(&self) -> u64 {
        self.max_d
    }
}

/// The number of `(p, q)` ballot sequences, `((p-q)/(p+q)) · C(p+q, q)`.
pub fn count_ballot(p: u64, q: u64) -> Result<BigUint> {
    if p <= q {
        return Err(Error::Domain(format!("need p > q, got p = {p}, q = {q}")));
    }
    let numerator = binomial(p + q, q) * BigUint::from(p - q);
    let denom = BigUint::from(p + q);
    let (quot, rem) = num::Integer::div_rem(&numerator, &denom);
    assert!(rem.is_zero(), "ballot numerator not divisible by p+q");
    Ok(quot)
}

/// One letter of a ballot word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

/// A word over `{X, Y}` in which every nonempty prefix has strictly more
/// X's than Y's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotSequence {
    letters: Vec<Letter>,
}

impl BallotSequence {
    /// Validates the prefix condition and `p > q`.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let mut x = 0i64;
        let mut y = 0i64;
        for (i, &l) in letters.iter().enumerate() {
            match l {
                Letter::X => x += 1,
                Letter::Y => y += 1,
            }
            if x <= y {
                return Err(Error::Domain(format!(
                    "prefix of length {} has {} X's and {} Y's",
                    i + 1,
                    x,
                    y
                )));
            }
        }
        if letters.is_empty() {
            return Err(Error::Domain("ballot sequence must be nonempty".into()));
        }
        Ok(BallotSequence { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of X's.
    pub fn p(&self) -> u64 {
        self.letters.iter().filter(|&&l| l == Letter::X).count() as u64
    }

    /// Number of Y's.
    pub fn q(&self) -> u64 {
        self.letters.iter().filter(|&&l| l == Letter::Y).count() as u64
    }
}

impl fmt::Display for BallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::X => "X",
                Letter::Y => "Y",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BallotSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| match c {
                'X' | 'x' => Ok(Letter::X),
                'Y' | 'y' => Ok(Letter::Y),
                _ => Err(Error::Parse(format!("bad ballot letter {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BallotSequence::new(letters)
    }
}

/// Every `(p, q)` ballot sequence, in lexicographic order with `X < Y`.
pub fn enumerate_ballot(p: u64, q: u64) -> Result<Vec<BallotSequence>> {
    if p <= q {
        return Err(Error::Domain(format!("need p > q, got p = {p}, q = {q}")));
    }
    if p + q > DEFAULT_BALLOT_GUARD {
        return Err(Error::Guard(format!(
            "refusing to enumerate ballot sequences of length {} (guard at {})",
            p + q,
            DEFAULT_BALLOT_GUARD
        )));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity((p + q) as usize);
    fn extend(
        word: &mut Vec<Letter>,
        xs: u64,
        ys: u64,
        p: u64,
        q: u64,
        out: &mut Vec<BallotSequence>,
    ) {
        if xs == p && ys == q {
            out.push(BallotSequence {
                letters: word.clone(),
            });
            return;
        }
        if xs < p {
            word.push(Letter::X);
            extend(word, xs + 1, ys, p, q, out);
            word.pop();
        }
        // a Y keeps the prefix strict only if xs > ys + 1
        if ys < q && xs > ys + 1 {
            word.push(Letter::Y);
            extend(word, xs, ys + 1, p, q, out);
            word.pop();
        }
    }
    extend(&mut word, 0, 0, p, q, &mut out);
    Ok(out)
}

/// `η(β) = {i | β_i = Y} ∪ {m}` for `β` of length `m - 1`; lands in the
/// admissible sets with maximum `m`.
pub fn eta(b: &BallotSequence, m: u32) -> Result<ValueSet> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    if b.len() as u32 != m - 1 {
        return Err(Error::Domain(format!(
            "ballot sequence has length {}, expected m - 1 = {}",
            b.len(),
            m - 1
        )));
    }
    let mut values: Vec<u32> = b
        .letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::Y)
        .map(|(i, _)| i as u32 + 1)
        .collect();
    values.push(m);
    let s = ValueSet::new(values)?;
    // A ballot word with only one more X than Y would put m = 2d here, and
    // no admissible set has its maximum that small.
    if !is_admissible(&s) {
        return Err(Error::Domain(format!(
            "η image {s} is not admissible (need more than q + 1 X's)"
        )));
    }
    Ok(s)
}

/// Inverse of [`eta`]: `β_i = Y` iff `i ∈ S`, of length `max S - 1`.
pub fn eta_inv(s: &ValueSet) -> Result<BallotSequence> {
    if !is_admissible(s) {
        return Err(Error::Domain(format!("{s} is not admissible")));
    }
    let m = s
        .max()
        .ok_or_else(|| Error::Domain("eta_inv requires a nonempty set".into()))?;
    let letters = (1..m)
        .map(|i| if s.contains(i) { Letter::Y } else { Letter::X })
        .collect();
    BallotSequence::new(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::ToPrimitive;

    fn vs(s: &str) -> ValueSet {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&vs("4,7,9")));
        assert!(!is_admissible(&vs("2")));
        assert!(is_admissible(&ValueSet::empty()));
        assert!(!is_admissible(&vs("3,4")));
        assert!(is_admissible(&vs("4,5")));
    }

    #[test]
    fn enumerate_admissible_examples() {
        let a3 = enumerate_admissible(3);
        assert_eq!(a3, vec![ValueSet::empty(), vs("3")]);
        assert_eq!(enumerate_admissible(1), vec![ValueSet::empty()]);
        assert_eq!(enumerate_admissible(9).len(), 70);
    }

    #[test]
    fn count_admissible_examples() {
        assert_eq!(count_admissible(9).unwrap(), BigUint::from(70u32));
        assert_eq!(count_admissible(1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_admissible(12).unwrap(), BigUint::from(462u32));
        assert_eq!(enumerate_admissible(12).len(), 462);
    }

    #[test]
    fn pinnacle_count_examples() {
        assert_eq!(pinnacle_count(7, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(pinnacle_count(5, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(pinnacle_count(9, 3).unwrap(), BigUint::from(14u32));
        assert_eq!(pinnacle_count(6, 3).unwrap(), BigUint::zero());
    }

    #[test]
    fn pd_polynomial_examples() {
        assert_eq!(pd_polynomial(4, 9).unwrap().to_integer().to_u64(), Some(14));
        for m in 3..10 {
            assert_eq!(pd_polynomial(1, m).unwrap(), BigRational::one());
        }
        let delta = pd_polynomial(3, 11).unwrap() - pd_polynomial(3, 10).unwrap();
        assert_eq!(delta, pd_polynomial(2, 10).unwrap());
    }

    #[test]
    fn count_table_matches_pointwise_formula() {
        let table = PinnacleCountTable::new(12, 5).unwrap();
        for m in 1..=12 {
            for d in 1..=5 {
                assert_eq!(table.get(m, d), Some(&pinnacle_count(m, d).unwrap()));
                if m <= 2 * d {
                    assert_eq!(table.get(m, d), Some(&BigUint::zero()));
                }
            }
        }
        assert_eq!(table.get(13, 1), None);
    }

    #[test]
    fn count_ballot_examples() {
        assert_eq!(count_ballot(2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_ballot(4, 3).unwrap(), BigUint::from(5u32));
        assert_eq!(count_ballot(5, 0).unwrap(), BigUint::from(1u32));
        assert!(count_ballot(3, 3).is_err());
    }

    #[test]
    fn enumerate_ballot_examples() {
        let b = enumerate_ballot(2, 1).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "XXY");
        assert_eq!(enumerate_ballot(3, 0).unwrap()[0].to_string(), "XXX");
        assert_eq!(enumerate_ballot(4, 3).unwrap().len(), 5);
        assert!(enumerate_ballot(20, 19).is_err());
    }

    #[test]
    fn eta_examples() {
        let b: BallotSequence = "XXXYXXYX".parse().unwrap();
        assert_eq!(eta(&b, 9).unwrap(), vs("4,7,9"));
        let b: BallotSequence = "XXXX".parse().unwrap();
        assert_eq!(eta(&b, 5).unwrap(), vs("5"));
        let b: BallotSequence = "XXYX".parse().unwrap();
        assert_eq!(eta(&b, 5).unwrap(), vs("3,5"));
        assert!(eta(&b, 9).is_err());
    }

    #[test]
    fn eta_inv_examples() {
        assert_eq!(eta_inv(&vs("4,7,9")).unwrap().to_string(), "XXXYXXYX");
        assert_eq!(eta_inv(&vs("3")).unwrap().to_string(), "XX");
        assert_eq!(eta_inv(&vs("3,5,7")).unwrap().to_string(), "XXYXYX");
        assert!(eta_inv(&vs("2")).is_err());
        assert!(eta_inv(&ValueSet::empty()).is_err());
    }

    #[test]
    fn ballot_prefix_rejected() {
        assert!("XXY".parse::<BallotSequence>().is_ok());
        assert!("XY".parse::<BallotSequence>().is_err());
        assert!("YX".parse::<BallotSequence>().is_err());
        assert!("XXYY".parse::<BallotSequence>().is_err());
    }
}
