//! Modified Bessel functions `K_{s+1/2}` of half-integer order.
//!
//! For integer `s >= 0`,
//!
//! ```text
//! K_{s+1/2}(x) = sqrt(pi / (2x)) e^{-x} sum_{k=0}^{s} (s+k)! / (k! (s-k)!) (2x)^{-k}
//! ```
//!
//! [`HalfOrderPoly`] stores the polynomial in `1/x` with the `2^{-k}` folded
//! into the coefficients.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::closed_form::horner;
use crate::combinatorics::{half_order_ratio, pow2};
use crate::error::{domain, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfOrderPoly {
    s: u32,
    coeffs: Vec<BigRational>,
}

impl HalfOrderPoly {
    /// `s` such that the order is `s + 1/2`.
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Coefficients of `x^{-k}`, `k = 0..=s`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Evaluates `K_{s+1/2}(x)` for `Re x > 0` (principal square root).
    pub fn eval(&self, x: Complex64) -> Result<Complex64> {
        check_right_half_plane(x)?;
        let c: Vec<f64> = self.coeffs.iter().map(rational_to_f64).collect();
        let poly = horner(&c, x.inv());
        Ok((Complex64::from(PI) / (2.0 * x)).sqrt() * (-x).exp() * poly)
    }
}

pub(crate) fn check_right_half_plane(x: Complex64) -> Result<()> {
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(domain(format!("argument must be finite, got {x}")));
    }
    if x.re <= 0.0 {
        return Err(domain(format!("argument must satisfy Re > 0, got {x}")));
    }
    Ok(())
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact expansion of `K_{s+1/2}`.
pub fn k_half_poly(s: i64) -> Result<HalfOrderPoly> {
    let s = u32::try_from(s).map_err(|_| domain(format!("s must be non-negative, got {s}")))?;
    let coeffs = (0..=u64::from(s))
        .map(|k| BigRational::new(half_order_ratio(u64::from(s), k), pow2(k as u32)))
        .collect();
    Ok(HalfOrderPoly { s, coeffs })
}

/// `K_{s+1/2}(x)` from the closed form.
pub fn eval_k_half(s: i64, x: Complex64) -> Result<Complex64> {
    k_half_poly(s)?.eval(x)
}

/// Coefficients `c_p` with
/// `K_{s1+1/2}(z/2) K_{s2+1/2}(z/2) = (pi/z) e^{-z} sum_p c_p z^{-p}`.
///
/// At argument `z/2` each `x^{-k}` becomes `2^k z^{-k}`, which cancels the
/// `2^{-k}` stored in [`HalfOrderPoly`]; the result is integral.
pub fn product_poly(s1: u32, s2: u32) -> Vec<BigRational> {
    let in_inv_z = |s: u32| -> Vec<BigRational> {
        let poly = k_half_poly(i64::from(s)).expect("non-negative order");
        poly.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigRational::from_integer(pow2(k as u32)))
            .collect()
    };
    let left = in_inv_z(s1);
    let right = in_inv_z(s2);
    let mut out = vec![BigRational::zero(); left.len() + right.len() - 1];
    for (i, l) in left.iter().enumerate() {
        for (j, r) in right.iter().enumerate() {
            out[i + j] += l * r;
        }
    }
    out
}

/// Last coefficient of the half-order expansion in closed form: `(2s)! / (s! 2^s)`.
pub fn last_coeff_closed(s: u32) -> BigRational {
    use crate::combinatorics::factorial;
    let s = u64::from(s);
    BigRational::new(
        factorial(2 * s),
        factorial(s) * BigInt::from(2u8).pow(s as u32),
    )
}
