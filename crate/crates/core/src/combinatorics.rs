//! Exact integer and rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(s + j)! / (j! (s - j)!)` for `0 <= j <= s`, zero for `j > s`.
///
/// This is the coefficient of `(2x)^{-j}` in the finite expansion of
/// `K_{s+1/2}(x)`.
pub fn half_order_ratio(s: u64, j: u64) -> BigInt {
    if j > s {
        return BigInt::zero();
    }
    // (s+j)!/(s-j)! / j!
    let mut num = BigInt::one();
    for f in (s - j + 1)..=(s + j) {
        num *= f;
    }
    num / factorial(j)
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)` over the rationals.
pub fn pochhammer(x: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}
