//! Four exact algorithms for `p_S(n)`, the number of permutations of `[n]`
//! with pinnacle set `S`, plus the per-ordering refinement and the vale-set
//! machinery backing the vale-based algorithm.
//!
//! The dale algorithm runs inclusion–exclusion over subsets of the master
//! dale rank set `D = {1_l, 1_r, …, d_l, d_r}`; the composition algorithm
//! compresses those subsets into length-`d` compositions with parts in
//! `{0, 1, 2}`; closed forms cover `|S| ≤ 2`; and the vale algorithm sums
//! over the admissible vale sets `V_n(S)`.  All intermediate sums are signed
//! arbitrary precision and the final counts are asserted nonnegative.

use std::fmt;

use num::bigint::{BigInt, BigUint, Sign};
use num::traits::{One, Zero};

use crate::admissible::is_admissible;
use crate::comb::{binomial, pow2};
use crate::error::{Error, Result};
use crate::perm::ValueSet;

/// Side marker of a dale relative to its smaller pinnacle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

/// One element of the master dale rank set, e.g. `3_l`.
///
/// Ordered rank-first with `l < r`, matching
/// `1_l < 1_r < 2_l < 2_r < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DaleRank {
    pub rank: u32,
    pub side: Side,
}

impl DaleRank {
    pub fn left(rank: u32) -> Self {
        DaleRank {
            rank,
            side: Side::Left,
        }
    }

    pub fn right(rank: u32) -> Self {
        DaleRank {
            rank,
            side: Side::Right,
        }
    }
}

impl fmt::Display for DaleRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{}",
            self.rank,
            match self.side {
                Side::Left => "l",
                Side::Right => "r",
            }
        )
    }
}

/// Gap vector of an admissible set inside `[n]`:
/// `n_i = s_{i+1} - s_i - 1` with the conventions `s_0 = 0`, `s_{d+1} = n+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile {
    s: ValueSet,
    n: u32,
    gaps: Vec<u64>,
}

impl GapProfile {
    pub fn new(s: &ValueSet, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        if !is_admissible(s) {
            return Err(Error::Domain(format!("{s} is not admissible")));
        }
        if s.max().is_some_and(|m| m > n) {
            return Err(Error::Domain(format!("{s} is not a subset of [3, {n}]")));
        }
        let mut fenced: Vec<u64> = Vec::with_capacity(s.len() + 2);
        fenced.push(0);
        fenced.extend(s.iter().map(u64::from));
        fenced.push(n as u64 + 1);
        let gaps = fenced.windows(2).map(|w| w[1] - w[0] - 1).collect();
        Ok(GapProfile {
            s: s.clone(),
            n,
            gaps,
        })
    }

    pub fn set(&self) -> &ValueSet {
        &self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.s.len()
    }

    /// `n_0 … n_d`.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }
}

/// A subset `B` of the master dale rank set together with its derived
/// parameters: `b = #B`, the sorted rank vector `r_1 ≤ … ≤ r_b`, and
/// `b_i` = number of members with rank at least `i` (for `i ∈ [d+1]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaleSelection {
    members: Vec<DaleRank>,
    d: u32,
    r: Vec<u32>,
    bvec: Vec<u32>,
}

impl DaleSelection {
    pub fn new(mut members: Vec<DaleRank>, d: u32) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|m| m.rank == 0 || m.rank > d) {
            return Err(Error::Domain(format!("dale ranks must lie in [1, {d}]")));
        }
        let r: Vec<u32> = members.iter().map(|m| m.rank).collect();
        let bvec = suffix_counts(&r, d);
        Ok(DaleSelection {
            members,
            d,
            r,
            bvec,
        })
    }

    pub fn members(&self) -> &[DaleRank] {
        &self.members
    }

    pub fn b(&self) -> usize {
        self.members.len()
    }

    /// `r_1 ≤ r_2 ≤ … ≤ r_b`.
    pub fn ranks(&self) -> &[u32] {
        &self.r
    }

    /// `b_1, b_2, …, b_{d+1}`.
    pub fn rank_suffix_counts(&self) -> &[u32] {
        &self.bvec
    }
}

/// `b_i` for `i ∈ [d+1]` from a sorted rank list.
fn suffix_counts(ranks: &[u32], d: u32) -> Vec<u32> {
    (1..=d + 1)
        .map(|i| ranks.iter().filter(|&&r| r >= i).count() as u32)
        .collect()
}

/// A length-`d` composition with parts in `{0, 1, 2}`; `α_i` is the number
/// of selected dales of rank `i`.  Stands in for `2^o` subsets of `D`,
/// where `o` counts the parts equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapComposition {
    parts: Vec<u8>,
}

impl GapComposition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.iter().any(|&p| p > 2) {
            return Err(Error::Domain("composition parts must be in [0, 2]".into()));
        }
        let total: usize = parts.iter().map(|&p| p as usize).sum();
        if total > parts.len() {
            return Err(Error::Domain(
                "composition must have |α| ≤ d for membership in C(d)".into(),
            ));
        }
        Ok(GapComposition { parts })
    }

    /// The composition of a dale selection: part `i` is the number of
    /// members with rank `i`.
    pub fn from_dale_selection(sel: &DaleSelection) -> Self {
        let mut parts = vec![0u8; sel.d as usize];
        for m in sel.members() {
            parts[m.rank as usize - 1] += 1;
        }
        GapComposition { parts }
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    /// `b = |α|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts equal to 1.
    pub fn o(&self) -> u32 {
        self.parts.iter().filter(|&&p| p == 1).count() as u32
    }

    /// The sorted rank vector `r_1 ≤ … ≤ r_b` this composition encodes.
    pub fn ranks(&self) -> Vec<u32> {
        let mut r = Vec::with_capacity(self.weight());
        for (i, &p) in self.parts.iter().enumerate() {
            for _ in 0..p {
                r.push(i as u32 + 1);
            }
        }
        r
    }
}

/// The dale rank set `D_[τ]` of a cyclic ordering of `[d+1]`: each
/// cyclically adjacent pair contributes the smaller index, marked `l` or
/// `r` by whether the dale sits left or right of that pinnacle.
pub fn dale_rank_set(tau: &[u32]) -> Result<Vec<DaleRank>> {
    let k = tau.len();
    if k == 0 {
        return Err(Error::Domain("ordering must be nonempty".into()));
    }
    let mut seen = vec![false; k];
    for &v in tau {
        if v == 0 || v as usize > k || seen[v as usize - 1] {
            return Err(Error::Domain(format!(
                "ordering is not a permutation of [{k}]"
            )));
        }
        seen[v as usize - 1] = true;
    }
    if k == 1 {
        return Ok(Vec::new()); // a single pinnacle has no dales
    }
    let mut dales: Vec<DaleRank> = (0..k)
        .map(|i| {
            let a = tau[i];
            let b = tau[(i + 1) % k];
            if a < b {
                DaleRank::right(a) // dale sits right of the smaller pinnacle
            } else {
                DaleRank::left(b)
            }
        })
        .collect();
    dales.sort_unstable();
    dales.dedup();
    Ok(dales)
}

/// Per-gap powers `v^{n_i}` for the inner products of the summation
/// formulas; bases never exceed `d + 1` in absolute value.
struct PowTable {
    pows: Vec<Vec<BigUint>>,
}

impl PowTable {
    fn new(gaps: &[u64], d: usize) -> Self {
        let pows = gaps
            .iter()
            .map(|&e| {
                (0..=d as u64 + 1)
                    .map(|v| BigUint::from(v).pow(e as u32))
                    .collect()
            })
            .collect();
        PowTable { pows }
    }
}

/// `∏_{i=0}^{d} (d+1-i-b_{i+1})^{n_i}` with sign tracked separately.
/// Returns zero as soon as a base vanishes.
fn inner_product(d: usize, bvec: &[u32], gaps: &[u64], pows: &PowTable) -> BigInt {
    let mut negative = false;
    let mut acc = BigUint::one();
    for i in 0..=d {
        let base = d as i64 + 1 - i as i64 - bvec[i] as i64;
        if base == 0 && gaps[i] > 0 {
            return BigInt::zero();
        }
        if base < 0 && gaps[i] % 2 == 1 {
            negative = !negative;
        }
        acc *= &pows.pows[i][base.unsigned_abs() as usize];
    }
    BigInt::from_biguint(if negative { Sign::Minus } else { Sign::Plus }, acc)
}

/// `(d-b)! ∏_{i=0}^{b-1} (d+1-i-r_{b-i})`: the number of cyclic orderings
/// whose dale rank set contains a selection with sorted ranks `r`.
fn ordering_multiplicity(d: usize, ranks: &[u32]) -> i128 {
    let b = ranks.len();
    let mut prod: i128 = 1;
    for i in 0..b {
        prod *= d as i128 + 1 - i as i128 - ranks[b - 1 - i] as i128;
        if prod == 0 {
            return 0;
        }
    }
    let mut fact: i128 = 1;
    for j in 2..=(d - b) as i128 {
        fact *= j;
    }
    prod * fact
}

fn finish(sum: BigInt, n: u32, d: usize) -> BigUint {
    let shifted = sum << (n as usize - 2 * d - 1);
    let (sign, mag) = shifted.into_parts();
    assert_ne!(sign, Sign::Minus, "count must be nonnegative");
    mag
}

/// `p_S(n)` by inclusion–exclusion over subsets `B ⊆ D` with `|B| ≤ d`.
pub fn count_dale(s: &ValueSet, n: u32) -> Result<BigUint> {
    let gp = GapProfile::new(s, n)?;
    let d = gp.d();
    if d == 0 {
        return Ok(pow2(n as u64 - 1));
    }
    let gaps = gp.gaps();
    let pows = PowTable::new(gaps, d);
    let mut total = BigInt::zero();
    let mut ranks: Vec<u32> = Vec::with_capacity(d);
    let mut bvec: Vec<u32> = vec![0; d + 1];
    for mask in 0u64..(1u64 << (2 * d)) {
        let b = mask.count_ones() as usize;
        if b > d {
            continue;
        }
        ranks.clear();
        for bit in 0..2 * d {
            if mask >> bit & 1 == 1 {
                ranks.push(bit as u32 / 2 + 1);
            }
        }
        let mult = ordering_multiplicity(d, &ranks);
        if mult == 0 {
            continue;
        }
        fill_suffix_counts(&ranks, d, &mut bvec);
        let inner = inner_product(d, &bvec, gaps, &pows);
        if inner.is_zero() {
            continue;
        }
        let term = inner * BigInt::from(mult);
        if b.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(finish(total, n, d))
}

fn fill_suffix_counts(ranks: &[u32], d: usize, bvec: &mut [u32]) {
    bvec.fill(0);
    for &r in ranks {
        bvec[r as usize - 1] += 1; // per-rank multiplicity first
    }
    // convert to suffix sums: bvec[i-1] = #{ranks ≥ i}
    for i in (0..d - 1).rev() {
        bvec[i] += bvec[i + 1];
    }
    bvec[d] = 0;
}

/// `p_S(n)` summed over compositions `α ∈ C(d)` instead of subsets,
/// weighting each by `2^o`; identical value to [`count_dale`] with at most
/// `3^d` terms.
pub fn count_composition(s: &ValueSet, n: u32) -> Result<BigUint> {
    let gp = GapProfile::new(s, n)?;
    let d = gp.d();
    if d == 0 {
        return Ok(pow2(n as u64 - 1));
    }
    let gaps = gp.gaps();
    let pows = PowTable::new(gaps, d);
    let mut total = BigInt::zero();
    let mut parts: Vec<u8> = vec![0; d];
    let mut ranks: Vec<u32> = Vec::with_capacity(d);
    let mut bvec: Vec<u32> = vec![0; d + 1];

    // depth-first over parts in {0,1,2} with running weight ≤ d
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        weight: usize,
        ones: u32,
        d: usize,
        parts: &mut Vec<u8>,
        ranks: &mut Vec<u32>,
        bvec: &mut Vec<u32>,
        gaps: &[u64],
        pows: &PowTable,
        total: &mut BigInt,
    ) {
        if i == d {
            ranks.clear();
            for (idx, &p) in parts.iter().enumerate() {
                for _ in 0..p {
                    ranks.push(idx as u32 + 1);
                }
            }
            let mult = ordering_multiplicity(d, ranks);
            if mult == 0 {
                return;
            }
            fill_suffix_counts(ranks, d, bvec);
            let inner = inner_product(d, bvec, gaps, pows);
            if inner.is_zero() {
                return;
            }
            let term = inner * BigInt::from(mult << ones);
            if weight.is_multiple_of(2) {
                *total += term;
            } else {
                *total -= term;
            }
            return;
        }
        for p in 0u8..=2 {
            if weight + p as usize > d {
                break;
            }
            parts[i] = p;
            rec(
                i + 1,
                weight + p as usize,
                ones + u32::from(p == 1),
                d,
                parts,
                ranks,
                bvec,
                gaps,
                pows,
                total,
            );
        }
        parts[i] = 0;
    }
    rec(
        0, 0, 0, d, &mut parts, &mut ranks, &mut bvec, gaps, &pows, &mut total,
    );
    Ok(finish(total, n, d))
}

/// Closed forms for `p_S(n)` when `|S| ≤ 2`.
pub fn count_closed(s: &ValueSet, n: u32) -> Result<BigUint> {
    if s.len() > 2 {
        return Err(Error::Unsupported(format!(
            "closed form only covers |S| ≤ 2, got |S| = {}",
            s.len()
        )));
    }
    let gp = GapProfile::new(s, n)?; // validates admissibility and range
    let n = gp.n() as u64;
    match gp.set().values() {
        [] => Ok(pow2(n - 1)),
        &[l] => {
            let l = l as u64;
            Ok(pow2(n - 2) * (pow2(l - 2) - BigUint::one()))
        }
        &[l, m] => {
            let (l, m) = (l as u64, m as u64);
            let inner =
                BigInt::from(3u32).pow(l as u32 - 1) - BigInt::from(pow2(l)) + BigInt::one();
            let first = BigInt::from(pow2(n + m - l - 5)) * inner;
            let second = BigInt::from(pow2(n - 3)) * (BigInt::from(pow2(l - 2)) - BigInt::one());
            let (sign, mag) = (first - second).into_parts();
            assert_ne!(sign, Sign::Minus, "closed form must be nonnegative");
            Ok(mag)
        }
        _ => unreachable!(),
    }
}

/// Number of permutations of `[n]` with pinnacle set `s` whose pinnacles
/// appear left to right in the order `sigma`.
///
/// `sigma` is lifted to the cyclic ordering of `S ∪ {n+1}` (the sentinel is
/// appended, making the cut point unique) and the placement sum is evaluated
/// over subsets of that ordering's dale rank set.
pub fn count_by_ordering(s: &ValueSet, n: u32, sigma: &[u32]) -> Result<BigUint> {
    let gp = GapProfile::new(s, n)?;
    let d = gp.d();
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    if sorted != s.values() {
        return Err(Error::Domain(format!(
            "ordering is not a rearrangement of {s}"
        )));
    }
    if d == 0 {
        return Ok(pow2(n as u64 - 1));
    }
    let tau: Vec<u32> = sigma
        .iter()
        .map(|&v| s.values().binary_search(&v).unwrap() as u32 + 1)
        .chain(std::iter::once(d as u32 + 1))
        .collect();
    let dales = dale_rank_set(&tau)?;
    let gaps = gp.gaps();
    let pows = PowTable::new(gaps, d);
    let mut total = BigInt::zero();
    let mut ranks: Vec<u32> = Vec::with_capacity(d + 1);
    let mut bvec: Vec<u32> = vec![0; d + 1];
    for mask in 0u64..(1u64 << dales.len()) {
        ranks.clear();
        for (bit, dale) in dales.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                ranks.push(dale.rank);
            }
        }
        fill_suffix_counts(&ranks, d, &mut bvec);
        let inner = inner_product(d, &bvec, gaps, &pows);
        if ranks.len().is_multiple_of(2) {
            total += inner;
        } else {
            total -= inner;
        }
    }
    Ok(finish(total, n, d))
}

/// Which per-pinnacle factor the vale algorithm uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PinnacleFactor {
    /// `N(N-1)`, the variant that matches the brute-force oracle.
    FallingFactorial,
    /// `C(N, 2)`, the factor as printed in the source formula; kept callable
    /// for comparison but it undercounts by `2^d` on every oracle-checked
    /// case.
    Binomial,
}

/// The family `V_n(S)` of admissible vale sets: every `T` with `1 ∈ T`,
/// `|T| = d + 1`, realizable as the sentinel vale set of some permutation
/// with pinnacle set `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValeSetFamily {
    s: ValueSet,
    members: Vec<ValueSet>,
}

impl ValeSetFamily {
    pub fn set(&self) -> &ValueSet {
        &self.s
    }

    pub fn members(&self) -> &[ValueSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Visits every `T ∈ V_n(S)` as a sorted slice, without materializing the
/// family.  `T = {1} ∪ (α_1 values from [2, s_1 - 1]) ∪ (α_i values from
/// (s_{i-1}, s_i))` for each composition `α ∈ K(d)`.
fn for_each_vale_set(gp: &GapProfile, mut f: impl FnMut(&[u32])) {
    let d = gp.d();
    if d == 0 {
        f(&[1]);
        return;
    }
    let s = gp.set().values();
    // pools[i]: candidate values for part i+1 of the composition
    let pools: Vec<(u32, u32)> = (0..d)
        .map(|i| {
            if i == 0 {
                (2, s[0] - 1)
            } else {
                (s[i - 1] + 1, s[i] - 1)
            }
        })
        .collect();
    let mut chosen: Vec<u32> = Vec::with_capacity(d + 1);
    chosen.push(1);

    fn pick(
        gap: usize,
        remaining: usize,
        pools: &[(u32, u32)],
        chosen: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]),
    ) {
        if gap == pools.len() {
            if remaining == 0 {
                f(chosen);
            }
            return;
        }
        let (lo, hi) = pools[gap];
        // prefix-sum constraint: after gap i (1-based), at least i values chosen
        let already = chosen.len() - 1;
        let need = (gap + 1).saturating_sub(already);
        let pool_len = (hi + 1).saturating_sub(lo) as usize;
        for take in need..=pool_len.min(remaining) {
            combos(lo, hi, take, gap, remaining, pools, chosen, f);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn combos(
        lo: u32,
        hi: u32,
        take: usize,
        gap: usize,
        remaining: usize,
        pools: &[(u32, u32)],
        chosen: &mut Vec<u32>,
        f: &mut impl FnMut(&[u32]),
    ) {
        if take == 0 {
            pick(gap + 1, remaining, pools, chosen, f);
            return;
        }
        let mut v = lo;
        while v + take as u32 - 1 <= hi {
            chosen.push(v);
            combos(v + 1, hi, take - 1, gap, remaining - 1, pools, chosen, f);
            chosen.pop();
            v += 1;
        }
    }

    pick(0, d, &pools, &mut chosen, &mut f);
}

/// Materializes `V_n(S)`.
pub fn enumerate_vale_sets(s: &ValueSet, n: u32) -> Result<ValeSetFamily> {
    let gp = GapProfile::new(s, n)?;
    let mut members = Vec::new();
    for_each_vale_set(&gp, |t| {
        members.push(ValueSet::new(t.to_vec()).expect("vale values are positive"));
    });
    Ok(ValeSetFamily {
        s: s.clone(),
        members,
    })
}

/// `#V_n(S) = Σ_{α ∈ K(d)} C(n_0 - 1, α_1) ∏_{i=2}^{d} C(n_{i-1}, α_i)`.
pub fn count_vale_sets(s: &ValueSet, n: u32) -> Result<BigUint> {
    let gp = GapProfile::new(s, n)?;
    let d = gp.d();
    if d == 0 {
        return Ok(BigUint::one());
    }
    let gaps = gp.gaps();
    fn rec(i: usize, prefix: usize, remaining: usize, d: usize, gaps: &[u64]) -> BigUint {
        if i > d {
            return if remaining == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let pool = if i == 1 { gaps[0] - 1 } else { gaps[i - 1] };
        let mut sum = BigUint::zero();
        for a in 0..=remaining {
            if prefix + a < i {
                continue;
            }
            let w = binomial(pool, a as u64);
            if w.is_zero() {
                continue;
            }
            sum += w * rec(i + 1, prefix + a, remaining - a, d, gaps);
        }
        sum
    }
    Ok(rec(1, 0, d, d, gaps))
}

/// `p_S(n)` via the vale-set sum, with the stated per-pinnacle factor.
pub fn count_vale_with(s: &ValueSet, n: u32, factor: PinnacleFactor) -> Result<BigUint> {
    let gp = GapProfile::new(s, n)?;
    let d = gp.d();
    if d == 0 {
        return Ok(pow2(n as u64 - 1));
    }
    let s_vals = gp.set().values();
    let top = *s_vals.last().unwrap();
    let mut in_s = vec![false; top as usize + 1];
    for &v in s_vals {
        in_s[v as usize] = true;
    }
    let mut total = BigUint::zero();
    for_each_vale_set(&gp, |t| {
        // Product of N_ST over [n] - (S ⊎ T); values above max S have
        // N = (d+1) - d = 1 and contribute nothing.
        let mut acc: u128 = 1;
        let mut big: Option<BigUint> = None;
        let mut t_iter = t.iter().copied().peekable();
        let mut t_below = 0i64;
        let mut s_below = 0i64;
        for v in 1..=top {
            let is_t = t_iter.peek() == Some(&v);
            if is_t {
                t_iter.next();
            }
            let npt = (t_below - s_below) as u128;
            let factor_v = if in_s[v as usize] {
                s_below += 1;
                match factor {
                    PinnacleFactor::FallingFactorial => npt * (npt - 1),
                    PinnacleFactor::Binomial => npt * (npt - 1) / 2,
                }
            } else if is_t {
                t_below += 1;
                1
            } else {
                npt
            };
            if factor_v != 1 {
                match acc.checked_mul(factor_v) {
                    Some(next) => acc = next,
                    None => {
                        let b = big.get_or_insert_with(BigUint::one);
                        *b *= BigUint::from(acc);
                        acc = factor_v;
                    }
                }
            }
        }
        let term = match big {
            Some(mut b) => {
                b *= BigUint::from(acc);
                b
            }
            None => BigUint::from(acc),
        };
        total += term;
    });
    Ok(total << (n as usize - 2 * d - 1))
}

/// `p_S(n)` via the vale-set sum with the oracle-validated `N(N-1)` factor.
pub fn count_vale(s: &ValueSet, n: u32) -> Result<BigUint> {
    count_vale_with(s, n, PinnacleFactor::FallingFactorial)
}
