//! Exact-arithmetic toolkit for pinnacle sets of permutations.
//!
//! A pinnacle of a permutation is a value larger than both of its neighbors
//! in one-line notation.  This crate provides:
//!
//! - permutation statistics (pinnacles, peaks, vales) and cyclic lifts
//!   ([`perm`]);
//! - admissibility tests, enumeration, and counting of pinnacle sets,
//!   including ballot-sequence bijections ([`admissible`]);
//! - the interleaved / right-canonical constructions and the lattice-path
//!   map onto admissible sets ([`bijections`]);
//! - four exact algorithms for `p_S(n)`, the number of permutations of
//!   `[n]` with pinnacle set `S`, plus per-ordering refinements and
//!   vale-set machinery ([`counting`]);
//! - admissible pinnacle orderings and their counts ([`orderings`]);
//! - brute-force oracles over small symmetric groups ([`oracle`]);
//! - a wall-clock benchmark harness comparing the algorithms ([`bench`]).
//!
//! All counts are exact big integers; nothing here rounds.

pub mod admissible;
pub mod bench;
pub mod bijections;
pub mod comb;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod orderings;
pub mod perm;

pub use error::{Error, Result};
pub use perm::{Boundary, CyclicPermutation, Permutation, ValueSet};
