//! Direct numerical evaluation of `K_nu`, `F` and `G` by quadrature.
//!
//! `K_nu` comes from `K_nu(x) = ∫₀^∞ e^{-x cosh u} cosh(nu u) du`; `F` and `G`
//! nest that inside an outer integral over `t`. Nothing here touches the
//! closed-form code paths.

use std::cell::Cell;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::half_order::check_right_half_plane;
use crate::quadrature::{integrate_tail, Integral, TailRule};
use crate::spec::Kernel;

/// Inner `K_nu` tolerance used by the nested oracles when the outer
/// tolerance is at least [`INNER_TOL_SWITCH`]. Fixed so that the inner values
/// do not depend on the outer tolerance.
const INNER_TOL: f64 = 1e-12;
const INNER_TOL_FINE: f64 = 1e-13;
const INNER_TOL_SWITCH: f64 = 1e-11;
const PANEL: f64 = 0.5;
const MAX_PANELS: usize = 400;
const MAX_SUBDIVISIONS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadConfig {
    /// Relative tolerance.
    pub tol: f64,
    /// Maximum bisection depth of any initial panel.
    pub max_depth: u32,
    /// Relative cutoff for truncating the semi-infinite range.
    pub truncation_eps: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            tol: 1e-10,
            max_depth: 30,
            truncation_eps: 1e-18,
        }
    }
}

impl QuadConfig {
    pub fn with_tol(tol: f64) -> Self {
        QuadConfig {
            tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(domain(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if !(self.truncation_eps >= 0.0 && self.truncation_eps < self.tol) {
            return Err(domain(format!(
                "truncation_eps must satisfy 0 <= eps < tol, got {}",
                self.truncation_eps
            )));
        }
        Ok(())
    }

    fn rule(&self) -> TailRule {
        TailRule {
            tol: self.tol,
            max_depth: self.max_depth,
            truncation_eps: self.truncation_eps,
            panel: PANEL,
            max_panels: MAX_PANELS,
            max_subdivisions: MAX_SUBDIVISIONS,
        }
    }

    fn inner(&self) -> QuadConfig {
        let tol = if self.tol >= INNER_TOL_SWITCH {
            INNER_TOL
        } else {
            INNER_TOL_FINE
        };
        QuadConfig {
            tol,
            max_depth: self.max_depth,
            truncation_eps: self.truncation_eps.min(tol * 1e-4),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: Complex64,
    pub est_error: f64,
    /// Total integrand evaluations, inner ones included.
    pub evaluations: u64,
}

fn finish(r: Integral, extra_err: f64, evaluations: u64, tol: f64) -> Result<OracleResult> {
    let est_error = r.err + extra_err;
    if !r.converged || !(est_error <= tol * r.value.norm() || est_error == 0.0) {
        return Err(Error::Convergence {
            estimate_re: r.value.re,
            estimate_im: r.value.im,
            est_error,
        });
    }
    Ok(OracleResult {
        value: r.value,
        est_error,
        evaluations,
    })
}

fn check_order(nu: f64) -> Result<f64> {
    if !nu.is_finite() {
        return Err(domain(format!("order must be finite, got {nu}")));
    }
    Ok(nu.abs())
}

/// `cosh(nu u) e^{-x cosh u}` without forming `cosh(nu u)` on its own.
fn k_integrand(nu: f64, x: Complex64, u: f64) -> Complex64 {
    let base = -x * u.cosh();
    0.5 * ((base + nu * u).exp() + (base - nu * u).exp())
}

fn k_nu_raw(nu: f64, x: Complex64, cfg: &QuadConfig) -> Integral {
    let a = x.re;
    integrate_tail(
        |u| k_integrand(nu, x, u),
        |u| k_integrand(nu, Complex64::new(a, 0.0), u).re,
        |u| a * u.sinh() > nu,
        &cfg.rule(),
    )
}

/// `K_nu(x)` for real `nu` and `Re x > 0` by adaptive quadrature.
pub fn k_nu_numeric(nu: f64, x: Complex64, cfg: &QuadConfig) -> Result<OracleResult> {
    cfg.validate()?;
    check_right_half_plane(x)?;
    let nu = check_order(nu)?;
    let r = k_nu_raw(nu, x, cfg);
    finish(r, 0.0, r.evaluations, cfg.tol)
}

/// `∫₀^∞ weight(t) K_nu(z cosh t) dt`, with `|weight(t)| <= growth` bound
/// `e^{growth t}` used to decide when the tail can be cut.
fn nested<W>(
    weight: W,
    growth: f64,
    nu: f64,
    z: Complex64,
    cfg: &QuadConfig,
) -> Result<OracleResult>
where
    W: Fn(f64) -> f64,
{
    cfg.validate()?;
    check_right_half_plane(z)?;
    let nu = check_order(nu)?;
    let inner = cfg.inner();
    let a = z.re;
    let inner_evals = Cell::new(0u64);
    let worst_inner = Cell::new(0.0f64);
    let outer = integrate_tail(
        |t| {
            let w = weight(t);
            if w == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            let k = k_nu_raw(nu, z * t.cosh(), &inner);
            inner_evals.set(inner_evals.get() + k.evaluations);
            let norm = k.value.norm();
            if norm > 0.0 {
                worst_inner.set(worst_inner.get().max(k.err / norm));
            }
            k.value * w
        },
        |t| {
            let k = k_nu_raw(nu, Complex64::new(a * t.cosh(), 0.0), &inner);
            inner_evals.set(inner_evals.get() + k.evaluations);
            weight(t).abs() * k.value.re
        },
        |t| a * t.sinh() >= growth + 1.0,
        &cfg.rule(),
    );
    let extra = worst_inner.get() * outer.value.norm();
    finish(outer, extra, outer.evaluations + inner_evals.get(), cfg.tol)
}

fn check_mu(mu: i64) -> Result<i32> {
    i32::try_from(mu)
        .ok()
        .filter(|m| *m >= 0)
        .ok_or_else(|| domain(format!("mu must be a non-negative integer, got {mu}")))
}

/// `F(mu, nu; z) = ∫₀^∞ cosh^mu t K_nu(z cosh t) dt` by nested quadrature.
/// `nu` may be any real.
pub fn oracle_f(mu: i64, nu: f64, z: Complex64, cfg: &QuadConfig) -> Result<OracleResult> {
    let mu = check_mu(mu)?;
    nested(|t| t.cosh().powi(mu), f64::from(mu), nu, z, cfg)
}

/// `G(mu, nu; z) = ∫₀^∞ sinh^mu t K_nu(z cosh t) dt` by nested quadrature.
pub fn oracle_g(mu: i64, nu: f64, z: Complex64, cfg: &QuadConfig) -> Result<OracleResult> {
    let mu = check_mu(mu)?;
    nested(|t| t.sinh().powi(mu), f64::from(mu), nu, z, cfg)
}

pub fn oracle(
    kernel: Kernel,
    mu: i64,
    nu: f64,
    z: Complex64,
    cfg: &QuadConfig,
) -> Result<OracleResult> {
    match kernel {
        Kernel::Cosh => oracle_f(mu, nu, z, cfg),
        Kernel::Sinh => oracle_g(mu, nu, z, cfg),
    }
}

/// Relative residual of
/// `∫₀^∞ cosh((a-b)t) K_{a+b}(2x cosh t) dt = K_a(x) K_b(x) / 2`,
/// both sides by quadrature.
pub fn product_identity_check(a: f64, b: f64, x: Complex64, cfg: &QuadConfig) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain("orders must be finite"));
    }
    let c = a - b;
    let lhs = nested(|t| (c * t).cosh(), c.abs(), a + b, 2.0 * x, cfg)?;
    let ka = k_nu_numeric(a, x, cfg)?;
    let kb = k_nu_numeric(b, x, cfg)?;
    let rhs = 0.5 * ka.value * kb.value;
    Ok((lhs.value - rhs).norm() / rhs.norm())
}
