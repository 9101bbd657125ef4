//! Exact coefficient families of the closed form.
//!
//! Expanding `cosh^mu t` (or `sinh^{2n} t`) into `cosh(j t)` terms and applying
//!
//! ```text
//! ∫₀^∞ cosh((a-b)t) K_{a+b}(2x cosh t) dt = K_a(x) K_b(x) / 2
//! ```
//!
//! turns each integral into a finite sum of products of two half-integer
//! order `K` at argument `z/2`. Each product is a polynomial in `1/z`; the
//! per-`k` product coefficients are the convolutions below, and the binomially
//! weighted sums over `k` give the tables `C_p`, `D_p`, `Ĉ_p`, `D̂_p`.
//!
//! | case                 | second order            | family |
//! |----------------------|-------------------------|--------|
//! | `mu = 2n`,   `m >= n` | `m-n+k+1/2`             | `c_p`  |
//! | `mu = 2n`,   `m <  n` | flipped for `k < n-m`   | `d_p`  |
//! | `mu = 2n+1`, `m >  n` | `m-n+k-1/2`             | `ĉ_p`  |
//! | `mu = 2n+1`, `m <= n` | flipped for `k <= n-m`  | `d̂_p`  |
//!
//! All arithmetic is exact. Factorial ratios with an out-of-range index are
//! zero so every convolution may run over a rectangular range.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{binomial, factorial, half_order_ratio, pochhammer, pow2};
use crate::error::{domain, Result};
use crate::spec::{IntegralSpec, Kernel, ParityCase};

fn non_negative(name: &str, v: i64) -> Result<u64> {
    u64::try_from(v).map_err(|_| domain(format!("{name} must be non-negative, got {v}")))
}

fn check_k(n: u64, k: u64) -> Result<()> {
    if k > n {
        return Err(domain(format!(
            "k must satisfy 0 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(())
}

/// Ratio `(s+j)!/(j!(s-j)!)` with a signed order `s`; `s < 0` is an error.
fn ratio_signed(order: i64, j: u64) -> Result<BigInt> {
    let order =
        u64::try_from(order).map_err(|_| domain(format!("factorial order {order} is negative")))?;
    Ok(half_order_ratio(order, j))
}

/// `a_r = (m+n-k+r)! / (r! (m+n-k-r)!)`, zero for `r > m+n-k`.
pub fn a_coeff(m: i64, n: i64, k: i64, r: i64) -> Result<BigInt> {
    let (m, n, k, r) = (
        non_negative("m", m)?,
        non_negative("n", n)?,
        non_negative("k", k)?,
        non_negative("r", r)?,
    );
    check_k(n, k)?;
    Ok(half_order_ratio(m + n - k, r))
}

/// `b_s = (m-n+k+s)! / (s! (m-n+k-s)!)`, zero for `s > m-n+k`.
pub fn b_coeff(m: i64, n: i64, k: i64, s: i64) -> Result<BigInt> {
    non_negative("m", m)?;
    let nu = non_negative("n", n)?;
    let ku = non_negative("k", k)?;
    let su = non_negative("s", s)?;
    check_k(nu, ku)?;
    let order = m - n + k;
    if order < 0 {
        return Err(domain(format!(
            "m-n+k = {order} is negative; use bhat_coeff for this branch"
        )));
    }
    ratio_signed(order, su)
}

/// Order index of the second factor in the even-`mu`, `m < n` case after
/// applying `K_{-v} = K_v`.
fn even_flipped_order(m: i64, n: i64, k: i64) -> i64 {
    if k < n - m {
        n - m - k - 1
    } else {
        m - n + k
    }
}

/// Same as [`even_flipped_order`] with `k` replaced by `k - 1`.
fn odd_flipped_order(m: i64, n: i64, k: i64) -> i64 {
    if k <= n - m {
        n - m - k
    } else {
        m - n + k - 1
    }
}

/// `b̂_s` for even `mu` with `m < n`: the second-factor coefficient with the
/// order flipped when it would be negative.
pub fn bhat_coeff(m: i64, n: i64, k: i64, s: i64) -> Result<BigInt> {
    let nu = non_negative("n", n)?;
    non_negative("m", m)?;
    let ku = non_negative("k", k)?;
    let su = non_negative("s", s)?;
    check_k(nu, ku)?;
    if m >= n {
        return Err(domain(format!(
            "bhat_coeff requires m < n, got m={m}, n={n}"
        )));
    }
    ratio_signed(even_flipped_order(m, n, k), su)
}

/// `Σ_{r+s=p} a_r β_s` with `β` a second-factor sequence of the given order.
fn convolve(first_order: i64, second_order: i64, p: u64) -> Result<BigRational> {
    let mut acc = BigInt::zero();
    for r in 0..=p {
        let a = ratio_signed(first_order, r)?;
        if a.is_zero() {
            continue;
        }
        acc += a * ratio_signed(second_order, p - r)?;
    }
    Ok(BigRational::from_integer(acc))
}

struct Checked {
    m: i64,
    n: i64,
    k: i64,
    p: u64,
}

fn checked(m: i64, n: i64, k: i64, p: i64) -> Result<Checked> {
    let nu = non_negative("n", n)?;
    non_negative("m", m)?;
    let ku = non_negative("k", k)?;
    let p = non_negative("p", p)?;
    check_k(nu, ku)?;
    Ok(Checked { m, n, k, p })
}

/// `c_p(k; m, n) = Σ_{r+s=p} a_r b_s` (even `mu`, `m >= n`, `p <= 2m`).
pub fn convolve_cp(m: i64, n: i64, k: i64, p: i64) -> Result<BigRational> {
    let c = checked(m, n, k, p)?;
    if c.m < c.n {
        return Err(domain("c_p requires m >= n"));
    }
    if c.p > 2 * c.m as u64 {
        return Err(domain(format!("c_p requires p <= 2m, got p={}", c.p)));
    }
    convolve(c.m + c.n - c.k, c.m - c.n + c.k, c.p)
}

/// `d_p(k; m, n) = Σ_{r+s=p} a_r b̂_s` (even `mu`, `m < n`, `p <= 2n-1`).
pub fn convolve_dp(m: i64, n: i64, k: i64, p: i64) -> Result<BigRational> {
    let c = checked(m, n, k, p)?;
    if c.m >= c.n {
        return Err(domain("d_p requires m < n"));
    }
    if c.p > (2 * c.n - 1) as u64 {
        return Err(domain(format!("d_p requires p <= 2n-1, got p={}", c.p)));
    }
    convolve(c.m + c.n - c.k, even_flipped_order(c.m, c.n, c.k), c.p)
}

/// `ĉ_p(k; m, n)` (odd `mu`, `m > n`, `p <= 2m`).
pub fn convolve_chat_p(m: i64, n: i64, k: i64, p: i64) -> Result<BigRational> {
    let c = checked(m, n, k, p)?;
    if c.m <= c.n {
        return Err(domain("ĉ_p requires m > n"));
    }
    if c.p > 2 * c.m as u64 {
        return Err(domain(format!("ĉ_p requires p <= 2m, got p={}", c.p)));
    }
    convolve(c.m + c.n - c.k, c.m - c.n + c.k - 1, c.p)
}

/// `d̂_p(k; m, n)` (odd `mu`, `m <= n`, `p <= 2n`).
///
/// At `k = n - m` the second order is exactly `-1/2`; it is flipped to `+1/2`
/// whose expansion is the single term 1.
pub fn convolve_dhat_p(m: i64, n: i64, k: i64, p: i64) -> Result<BigRational> {
    let c = checked(m, n, k, p)?;
    if c.m > c.n {
        return Err(domain("d̂_p requires m <= n"));
    }
    if c.p > 2 * c.n as u64 {
        return Err(domain(format!("d̂_p requires p <= 2n, got p={}", c.p)));
    }
    convolve(c.m + c.n - c.k, odd_flipped_order(c.m, c.n, c.k), c.p)
}

/// Which coefficient family a table is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    C,
    D,
    CHat,
    DHat,
}

impl Family {
    pub fn of(case: ParityCase) -> Family {
        match case {
            ParityCase::EvenMu { n, m } if m >= n => Family::C,
            ParityCase::EvenMu { .. } => Family::D,
            ParityCase::OddMu { n, m } if m > n => Family::CHat,
            ParityCase::OddMu { .. } => Family::DHat,
        }
    }
}

/// Polynomial degree implied by the convolution ranges.
pub fn expected_degree(case: ParityCase) -> u32 {
    match (Family::of(case), case) {
        (Family::C, ParityCase::EvenMu { m, .. }) => 2 * m,
        (Family::D, ParityCase::EvenMu { n, .. }) => 2 * n - 1,
        (Family::CHat, ParityCase::OddMu { m, .. }) => 2 * m - 1,
        (_, case) => 2 * case.n(),
    }
}

/// Degree as stated in the summary table of results: `2m`, `2n-1`, `2m`, `2n`.
///
/// Differs from [`expected_degree`] for odd `mu` with `m > n`, where the
/// product `K_{m+n-k+1/2} K_{m-n+k-1/2}` only reaches `z^{-(2m-1)}`.
pub fn stated_degree(case: ParityCase) -> u32 {
    match case {
        ParityCase::EvenMu { n, m } if m >= n => 2 * m,
        ParityCase::EvenMu { n, .. } => 2 * n - 1,
        ParityCase::OddMu { n, m } if m > n => 2 * m,
        ParityCase::OddMu { n, .. } => 2 * n,
    }
}

/// Exact coefficients of the polynomial in `1/z` for one integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    spec: IntegralSpec,
    coeffs: Vec<BigRational>,
    prefactor_pow2: u32,
}

impl CoeffTable {
    pub fn spec(&self) -> &IntegralSpec {
        &self.spec
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn prefactor_pow2(&self) -> u32 {
        self.prefactor_pow2
    }

    pub fn family(&self) -> Family {
        Family::of(self.spec.case())
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }
}

/// Builds the full coefficient table of `spec`.
pub fn coeff_table(spec: &IntegralSpec) -> CoeffTable {
    let case = spec.case();
    let (n, m) = (i64::from(case.n()), i64::from(case.m()));
    let family = Family::of(case);
    let degree = expected_degree(case) as i64;
    let sinh = spec.kernel() == Kernel::Sinh;
    let half = BigRational::new(1.into(), 2.into());

    let mut coeffs = vec![BigRational::zero(); degree as usize + 1];
    for k in 0..=n {
        let mut weight = match case {
            ParityCase::EvenMu { .. } => {
                let mut w = BigRational::from_integer(binomial(2 * n as u64, k as u64));
                if k == n {
                    w *= &half;
                }
                w
            }
            ParityCase::OddMu { .. } => {
                BigRational::from_integer(binomial(2 * n as u64 + 1, k as u64))
            }
        };
        if sinh && k % 2 == 1 {
            weight = -weight;
        }
        for (p, slot) in coeffs.iter_mut().enumerate() {
            let p = p as i64;
            let term = match family {
                Family::C => convolve_cp(m, n, k, p),
                Family::D => convolve_dp(m, n, k, p),
                Family::CHat => convolve_chat_p(m, n, k, p),
                Family::DHat => convolve_dhat_p(m, n, k, p),
            }
            .expect("indices are within the family's range");
            if !term.is_zero() {
                *slot += &weight * term;
            }
        }
    }
    CoeffTable {
        spec: *spec,
        coeffs,
        prefactor_pow2: spec.prefactor_pow2(),
    }
}

/// Leading coefficient from its closed form rather than from the table.
///
/// Cosh kernel, even `mu`: `2^{2n} - n! / (2 (1/2)_n) C(2n, n)`.
/// Cosh kernel, odd `mu`: `2^{2n}`.
/// Sinh kernel: the alternating primed sum `Σ' (-1)^k C(2n, k) = (1-1)^{2n} / 2`,
/// which is `0` for `n >= 1` and `1/2` for `n = 0` (where `sinh^0 = cosh^0`).
pub fn leading_coeff_closed(spec: &IntegralSpec) -> BigRational {
    let n = u64::from(spec.case().n());
    match (spec.kernel(), spec.case()) {
        (Kernel::Cosh, ParityCase::EvenMu { .. }) => {
            let half = BigRational::new(1.into(), 2.into());
            let two = BigRational::from_integer(2.into());
            let central = BigRational::from_integer(binomial(2 * n, n));
            let correction =
                BigRational::from_integer(factorial(n)) / (two * pochhammer(&half, n)) * central;
            BigRational::from_integer(pow2(2 * n as u32)) - correction
        }
        (Kernel::Cosh, ParityCase::OddMu { .. }) => BigRational::from_integer(pow2(2 * n as u32)),
        (Kernel::Sinh, _) => {
            if n == 0 {
                BigRational::new(1.into(), 2.into())
            } else {
                BigRational::zero()
            }
        }
    }
}

/// True when every entry times two is an integer.
pub fn is_half_integral(r: &BigRational) -> bool {
    (r * BigRational::from_integer(2.into())).is_integer()
}
