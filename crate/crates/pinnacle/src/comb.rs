//! Small exact-arithmetic helpers used throughout the crate.

use num::bigint::{BigInt, BigUint};
use num::traits::{One, Zero};

/// Binomial coefficient `C(n, k)` computed exactly.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// `n!` computed exactly.
pub fn factorial(n: u64) -> BigUint {
    let mut res = BigUint::one();
    for i in 2..=n {
        res *= BigUint::from(i);
    }
    res
}

/// `2^e` as an unsigned big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e as usize
}

/// `base^exp` for a signed small base, exact.
pub fn signed_pow(base: i64, exp: u64) -> BigInt {
    BigInt::from(base).pow(exp as u32)
}
