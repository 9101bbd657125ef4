//! Closed-form evaluation of `F(mu, nu; z)` and `G(2n, 2m+1; z)`.
//!
//! Both integrals equal `pi e^{-z} / (2^q z) * P(1/z)` where `P` has the
//! exact coefficients of [`coeff_table`].

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::coeffs::{coeff_table, CoeffTable};
use crate::error::Result;
use crate::half_order::{check_right_half_plane, rational_to_f64};
use crate::spec::{IntegralSpec, Kernel};

/// Horner evaluation of `Σ coeffs[p] w^p`.
pub fn horner(coeffs: &[f64], w: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, &c| acc * w + c)
}

/// Polynomial in `1/z` together with its prefactor power of two.
///
/// The represented value is `pi e^{-z} / (2^prefactor_pow2 z) * Σ coeffs[p] z^{-p}`.
/// Coefficients are kept exactly as produced by the tables, never rescaled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyInvZ {
    coeffs: Vec<BigRational>,
    prefactor_pow2: u32,
}

/// A [`PolyInvZ`] rewritten as `scale * pi e^{-z} / z * (1 + ...)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPolyInvZ {
    pub scale: BigRational,
    pub coeffs: Vec<BigRational>,
}

impl PolyInvZ {
    pub fn new(coeffs: Vec<BigRational>, prefactor_pow2: u32) -> Self {
        PolyInvZ {
            coeffs,
            prefactor_pow2,
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn prefactor_pow2(&self) -> u32 {
        self.prefactor_pow2
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    /// Divides through by the constant term. `None` when it is zero
    /// (sinh kernel with `n >= 1`).
    pub fn monic(&self) -> Option<MonicPolyInvZ> {
        let lead = self.coeffs.first()?;
        if lead.is_zero() {
            return None;
        }
        let pow = BigRational::from_integer(crate::combinatorics::pow2(self.prefactor_pow2));
        Some(MonicPolyInvZ {
            scale: lead / pow,
            coeffs: self.coeffs.iter().map(|c| c / lead).collect(),
        })
    }

    /// Evaluates the full closed form at `z`, `Re z > 0`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_right_half_plane(z)?;
        let c: Vec<f64> = self.coeffs.iter().map(rational_to_f64).collect();
        let poly = horner(&c, z.inv());
        let prefactor = PI * (-z).exp() / z * 0.5f64.powi(self.prefactor_pow2 as i32);
        Ok(prefactor * poly)
    }
}

impl From<CoeffTable> for PolyInvZ {
    fn from(t: CoeffTable) -> Self {
        let q = t.prefactor_pow2();
        PolyInvZ::new(t.into_coeffs(), q)
    }
}

pub fn polynomial_for(spec: &IntegralSpec) -> PolyInvZ {
    coeff_table(spec).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: Complex64,
    pub spec: IntegralSpec,
    pub z: Complex64,
}

fn eval_kernel(kernel: Kernel, mu: i64, nu: i64, z: Complex64) -> Result<EvalResult> {
    let spec = IntegralSpec::new(kernel, mu, nu)?;
    check_right_half_plane(z)?;
    let value = polynomial_for(&spec).eval(z)?;
    Ok(EvalResult { value, spec, z })
}

/// `F(mu, nu; z) = ∫₀^∞ cosh^mu t K_nu(z cosh t) dt` for integer `mu >= 0`
/// and integer `nu` of opposite parity, `Re z > 0`.
///
/// `e^{-z}` underflows for `Re z` beyond about 745; no scaled variant is provided.
pub fn eval_f(mu: i64, nu: i64, z: Complex64) -> Result<EvalResult> {
    eval_kernel(Kernel::Cosh, mu, nu, z)
}

/// `G(mu, nu; z) = ∫₀^∞ sinh^mu t K_nu(z cosh t) dt` for even `mu`, odd `nu`.
pub fn eval_g(mu: i64, nu: i64, z: Complex64) -> Result<EvalResult> {
    eval_kernel(Kernel::Sinh, mu, nu, z)
}
