//! Permutations, cyclic permutations, and their value statistics.
//!
//! A pinnacle of `π = π_1 π_2 … π_n` is a value `π_i` with
//! `π_{i-1} < π_i > π_{i+1}`; a peak is the position `i` of such a value and a
//! vale is a value smaller than both neighbors.  Cyclic permutations read the
//! word around a circle, so there are no boundary positions.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Default size guard for exhaustive permutation sweeps.
pub const DEFAULT_PERM_GUARD: u32 = 12;

/// A strictly increasing sequence of positive integers.
///
/// Used for pinnacle sets, peak sets, vale sets, and candidate sets in
/// general.  The textual form is comma-separated: `4,7,8`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ValueSet {
    values: Vec<u32>,
}

impl ValueSet {
    /// Builds a set from arbitrary values, sorting and deduplicating.
    /// Rejects zero.
    pub fn new(mut values: Vec<u32>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::Domain("set values must be positive".into()));
        }
        values.sort_unstable();
        values.dedup();
        Ok(ValueSet { values })
    }

    pub fn empty() -> Self {
        ValueSet { values: Vec::new() }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.values.last().copied()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.values.iter().copied()
    }
}

impl fmt::Display for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.values.iter().join(","))
    }
}

impl FromStr for ValueSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ValueSet::empty());
        }
        let values = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad set element {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ValueSet::new(values)
    }
}

/// Which convention to use for end-of-word positions when scanning for vales.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    /// Only interior positions `2 ≤ i ≤ n-1` may be vales.
    Interior,
    /// The word is padded with `+∞` on both ends, so end positions qualify.
    Sentinel,
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    /// Validates that `word` is a bijection of `[n]` with `n ≥ 1`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::Domain("permutation must be nonempty".into()));
        }
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::Domain(format!("word is not a permutation of [{n}]")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation `1 2 … n`.
    pub fn identity(n: u32) -> Result<Self> {
        Permutation::new((1..=n).collect())
    }

    fn from_word_unchecked(word: Vec<u32>) -> Self {
        Permutation { word }
    }

    pub fn n(&self) -> u32 {
        self.word.len() as u32
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Values `π_i` exceeding both neighbors, sorted.
    pub fn pinnacle_set(&self) -> ValueSet {
        let w = &self.word;
        let mut vals: Vec<u32> = (1..w.len().saturating_sub(1))
            .filter(|&i| w[i - 1] < w[i] && w[i] > w[i + 1])
            .map(|i| w[i])
            .collect();
        vals.sort_unstable();
        ValueSet { values: vals }
    }

    /// Positions `i` (1-indexed) with `π_{i-1} < π_i > π_{i+1}`.
    pub fn peak_set(&self) -> ValueSet {
        let w = &self.word;
        let vals: Vec<u32> = (1..w.len().saturating_sub(1))
            .filter(|&i| w[i - 1] < w[i] && w[i] > w[i + 1])
            .map(|i| i as u32 + 1)
            .collect();
        ValueSet { values: vals }
    }

    /// Values smaller than both neighbors, under the chosen boundary rule.
    pub fn vale_set(&self, boundary: Boundary) -> ValueSet {
        let w = &self.word;
        let n = w.len();
        let at = |i: isize| -> u64 {
            if i < 0 || i as usize >= n {
                u64::MAX // the +∞ sentinel
            } else {
                w[i as usize] as u64
            }
        };
        let range = match boundary {
            Boundary::Interior => 1..n.saturating_sub(1),
            Boundary::Sentinel => 0..n,
        };
        let mut vals: Vec<u32> = range
            .filter(|&i| {
                let i = i as isize;
                at(i - 1) > at(i) && at(i) < at(i + 1)
            })
            .map(|i| w[i])
            .collect();
        vals.sort_unstable();
        ValueSet { values: vals }
    }

    /// Appends `n+1` and passes to the cyclic class; the cyclic pinnacle set
    /// is then the linear one together with `n+1`.
    pub fn lift_to_cyclic(&self) -> CyclicPermutation {
        let mut word = self.word.clone();
        word.push(self.n() + 1);
        CyclicPermutation::from_word(word).expect("lifted word is a permutation")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad permutation entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

/// A cyclic permutation, stored as the rotation whose word begins with 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPermutation {
    representative: Permutation,
}

impl CyclicPermutation {
    /// Canonicalizes any rotation of the class.
    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        let p = Permutation::new(word)?;
        Ok(Self::from_permutation(&p))
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        let pos = p
            .word
            .iter()
            .position(|&v| v == 1)
            .expect("permutation contains 1");
        let mut word = Vec::with_capacity(p.word.len());
        word.extend_from_slice(&p.word[pos..]);
        word.extend_from_slice(&p.word[..pos]);
        CyclicPermutation {
            representative: Permutation::from_word_unchecked(word),
        }
    }

    pub fn representative(&self) -> &Permutation {
        &self.representative
    }

    pub fn n(&self) -> u32 {
        self.representative.n()
    }

    /// Pinnacle set with indices taken modulo `n`; for `n ≥ 2` the maximum
    /// `n` is always a member.
    pub fn pinnacle_set(&self) -> ValueSet {
        let w = self.representative.word();
        let n = w.len();
        let mut vals: Vec<u32> = (0..n)
            .filter(|&i| {
                let prev = w[(i + n - 1) % n];
                let next = w[(i + 1) % n];
                prev < w[i] && w[i] > next
            })
            .map(|i| w[i])
            .collect();
        vals.sort_unstable();
        vals.dedup();
        ValueSet { values: vals }
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative)
    }
}

/// All `n!` permutations of `[n]` in lexicographic order.
///
/// Refuses `n` above `max_n`; the default guard is
/// [`DEFAULT_PERM_GUARD`].
pub fn all_permutations_with_guard(
    n: u32,
    max_n: u32,
) -> Result<impl Iterator<Item = Permutation>> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if n > max_n {
        return Err(Error::Guard(format!(
            "refusing to enumerate {n}! permutations (guard at n = {max_n})"
        )));
    }
    Ok((1..=n)
        .permutations(n as usize)
        .map(Permutation::from_word_unchecked))
}

/// All `n!` permutations with the default guard.
pub fn all_permutations(n: u32) -> Result<impl Iterator<Item = Permutation>> {
    all_permutations_with_guard(n, DEFAULT_PERM_GUARD)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn vs(s: &str) -> ValueSet {
        s.parse().unwrap()
    }

    #[test]
    fn pinnacle_set_examples() {
        assert_eq!(p("1 8 5 2 4 3 7 6").pinnacle_set(), vs("4,7,8"));
        assert_eq!(p("1 2 3 4 5").pinnacle_set(), ValueSet::empty());
        assert_eq!(p("1 3 2").pinnacle_set(), vs("3"));
    }

    #[test]
    fn peak_set_examples() {
        assert_eq!(p("1 8 5 2 4 3 7 6").peak_set(), vs("2,5,7"));
        assert_eq!(p("3 2 1").peak_set(), ValueSet::empty());
        assert_eq!(p("1 3 2 4").peak_set(), vs("2"));
    }

    #[test]
    fn vale_set_examples() {
        let w = p("1 8 5 2 4 3 7 6");
        assert_eq!(w.vale_set(Boundary::Interior), vs("2,3"));
        assert_eq!(w.vale_set(Boundary::Sentinel), vs("1,2,3,6"));
        assert_eq!(p("5 4 3 2 1").vale_set(Boundary::Sentinel), vs("1"));
        assert_eq!(p("1").vale_set(Boundary::Sentinel), vs("1"));
        assert_eq!(p("1").vale_set(Boundary::Interior), ValueSet::empty());
    }

    #[test]
    fn cyclic_pinnacles() {
        let c = CyclicPermutation::from_word(vec![1, 3, 2, 4]).unwrap();
        assert_eq!(c.pinnacle_set(), vs("3,4"));
        let c = CyclicPermutation::from_word(vec![1, 2]).unwrap();
        assert_eq!(c.pinnacle_set(), vs("2"));
        let c = CyclicPermutation::from_word(vec![1]).unwrap();
        assert_eq!(c.pinnacle_set(), ValueSet::empty());
        let c = CyclicPermutation::from_word(vec![1, 2, 3, 4, 5]).unwrap();
        assert_eq!(c.pinnacle_set(), vs("5"));
    }

    #[test]
    fn canonical_rotation() {
        let a = CyclicPermutation::from_word(vec![3, 2, 4, 1]).unwrap();
        let b = CyclicPermutation::from_word(vec![1, 3, 2, 4]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.representative().word(), &[1, 3, 2, 4]);
    }

    #[test]
    fn lift_examples() {
        let c = p("1 3 2").lift_to_cyclic();
        assert_eq!(c.pinnacle_set(), vs("3,4"));
        let c = p("1").lift_to_cyclic();
        assert_eq!(c.pinnacle_set(), vs("2"));
        let c = p("1 8 5 2 4 3 7 6").lift_to_cyclic();
        assert_eq!(c.pinnacle_set(), vs("4,7,8,9"));
    }

    #[test]
    fn lift_matches_linear_pinnacles_exhaustively() {
        for n in 1..=7 {
            for perm in all_permutations(n).unwrap() {
                let mut expected: Vec<u32> = perm.pinnacle_set().values().to_vec();
                expected.push(n + 1);
                expected.sort_unstable();
                assert_eq!(perm.lift_to_cyclic().pinnacle_set().values(), &expected[..]);
            }
        }
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(all_permutations(1).unwrap().count(), 1);
        assert_eq!(all_permutations(3).unwrap().count(), 6);
        let words: std::collections::HashSet<_> =
            all_permutations(8).unwrap().map(|p| p.word).collect();
        assert_eq!(words.len(), 40320);
        assert!(all_permutations(13).is_err());
    }

    #[test]
    fn set_parsing() {
        assert_eq!(vs("9,4,7"), vs("4,7,9"));
        assert_eq!(vs("3,3,5"), vs("3,5"));
        assert!("0,3".parse::<ValueSet>().is_err());
        assert_eq!(vs("4,7,9").to_string(), "4,7,9");
    }
}
