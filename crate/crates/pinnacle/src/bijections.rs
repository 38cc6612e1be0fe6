//! Interleaved and right-canonical permutations, lattice paths, and the two
//! maps `ψ` and `φ` onto admissible pinnacle sets.
//!
//! Both maps send a subset `A ⊆ [2, n]` of size `⌊(n-1)/2⌋` to an admissible
//! set and they are equal, which is what pins down the count
//! `#A_n = C(n-1, ⌊(n-1)/2⌋)`.

use std::fmt;
use std::str::FromStr;

use crate::admissible::is_admissible;
use crate::error::{Error, Result};
use crate::perm::{Permutation, ValueSet};

fn check_subset_input(a: &ValueSet, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if a.iter().any(|v| v < 2 || v > n) {
        return Err(Error::Domain(format!("{a} is not a subset of [2, {n}]")));
    }
    let want = ((n - 1) / 2) as usize;
    if a.len() != want {
        return Err(Error::Domain(format!(
            "subset has {} elements, expected ⌊(n-1)/2⌋ = {want}",
            a.len()
        )));
    }
    Ok(())
}

/// The interleaved permutation for `A`: the first `⌊(n-1)/2⌋` even positions
/// hold `A` ascending, the remaining positions hold `[n] - A` ascending.
pub fn interleaved_from_subset(a: &ValueSet, n: u32) -> Result<Permutation> {
    check_subset_input(a, n)?;
    let mut word = vec![0u32; n as usize];
    for (k, v) in a.iter().enumerate() {
        word[2 * k + 1] = v; // position 2(k+1), 1-indexed
    }
    let mut rest = (1..=n).filter(|v| !a.contains(*v));
    for slot in word.iter_mut() {
        if *slot == 0 {
            *slot = rest.next().expect("complement covers remaining positions");
        }
    }
    Permutation::new(word)
}

/// The right-canonical permutation realizing an admissible set `S`:
/// non-pinnacles are placed right to left in decreasing runs, and each
/// pinnacle is placed as soon as a smaller element sits to its right.
/// For even `n` the last two positions are filled from the complement first.
pub fn right_canonical(s: &ValueSet, n: u32) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if !is_admissible(s) {
        return Err(Error::Domain(format!("{s} is not admissible")));
    }
    if s.max().is_some_and(|m| m > n) {
        return Err(Error::Domain(format!("{s} is not a subset of [3, {n}]")));
    }
    let mut complement: Vec<u32> = (1..=n).filter(|v| !s.contains(*v)).collect();
    let mut pinnacles: Vec<u32> = s.values().to_vec();
    let mut word = vec![0u32; n as usize];
    let mut pos = n as usize;

    let place = |word: &mut Vec<u32>, pos: &mut usize, v: u32| {
        word[*pos - 1] = v;
        *pos -= 1;
    };

    if n.is_multiple_of(2) {
        let v = complement.pop().expect("1 is never a pinnacle");
        place(&mut word, &mut pos, v);
    }
    while pos > 0 {
        match pinnacles.last().copied() {
            Some(top) => {
                // C1: decreasing run of non-pinnacles until one dips below top
                loop {
                    let v = complement
                        .pop()
                        .expect("admissibility leaves a smaller non-pinnacle");
                    let done = v < top;
                    place(&mut word, &mut pos, v);
                    if done {
                        break;
                    }
                }
                // C2: the pinnacle goes in the rightmost unused position
                pinnacles.pop();
                place(&mut word, &mut pos, top);
            }
            None => {
                let v = complement.pop().expect("counts match positions");
                place(&mut word, &mut pos, v);
            }
        }
    }
    let perm = Permutation::new(word)?;
    debug_assert_eq!(&perm.pinnacle_set(), s);
    Ok(perm)
}

/// `ψ(A) = Pin π` where `π` is the interleaved permutation for `A`.
pub fn psi(a: &ValueSet, n: u32) -> Result<ValueSet> {
    Ok(interleaved_from_subset(a, n)?.pinnacle_set())
}

/// One step of an up-down lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Up,
    Down,
}

/// An up-down lattice path starting at the origin, with steps indexed
/// `2 … n`.  Serialized as a string over `{U, D}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Steps in order; `steps()[k]` is the step with index `k + 2`.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Heights after each step, starting from 0 before the first step.
    pub fn heights(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |h, s| {
                *h += match s {
                    Step::Up => 1,
                    Step::Down => -1,
                };
                Some(*h)
            })
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::Parse(format!("bad path step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { steps })
    }
}

/// The path with `s_i = D` for `i ∈ A` and `s_i = U` otherwise, `i ∈ [2, n]`.
pub fn lattice_path_from_subset(a: &ValueSet, n: u32) -> Result<LatticePath> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    if a.iter().any(|v| v < 2 || v > n) {
        return Err(Error::Domain(format!("{a} is not a subset of [2, {n}]")));
    }
    let steps = (2..=n)
        .map(|i| if a.contains(i) { Step::Down } else { Step::Up })
        .collect();
    Ok(LatticePath { steps })
}

/// `φ(A)`: indices of up steps lying strictly below the x-axis together with
/// indices of down steps lying weakly above it.
///
/// A step is classified by the height at which it ends: a down step from 1
/// to 0 touches the axis and counts as weakly above, while an up step from
/// -1 to 0 also touches it and so is not strictly below.  This reading
/// reproduces the worked example `φ({2,3,7,9}) = {4,7,9}` and agrees with
/// `ψ` everywhere (checked exhaustively in the tests).
pub fn phi(a: &ValueSet, n: u32) -> Result<ValueSet> {
    check_subset_input(a, n)?;
    let path = lattice_path_from_subset(a, n)?;
    let mut h = 0i64;
    let mut values = Vec::new();
    for (k, &step) in path.steps().iter().enumerate() {
        let i = k as u32 + 2;
        match step {
            Step::Up => {
                h += 1;
                if h < 0 {
                    values.push(i);
                }
            }
            Step::Down => {
                h -= 1;
                if h >= 0 {
                    values.push(i);
                }
            }
        }
    }
    ValueSet::new(values)
}
