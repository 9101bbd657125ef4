//! Closed-form evaluation of
//!
//! ```text
//! F(mu, nu; z) = ∫₀^∞ cosh^mu t K_nu(z cosh t) dt
//! G(mu, nu; z) = ∫₀^∞ sinh^mu t K_nu(z cosh t) dt
//! ```
//!
//! for non-negative integers `mu`, `nu` of opposite parity and `Re z > 0`.
//! Each integral is `pi e^{-z} / (2^q z)` times a polynomial in `1/z` whose
//! coefficients are computed exactly ([`coeffs`]). An independent nested
//! quadrature ([`oracle`]) and a verification harness ([`validation`]) check
//! the closed forms.

pub mod cli;
pub mod closed_form;
pub mod coeffs;
pub mod combinatorics;
pub mod error;
pub mod half_order;
pub mod oracle;
mod quadrature;
pub mod spec;
pub mod validation;

pub use closed_form::{eval_f, eval_g, polynomial_for, EvalResult, PolyInvZ};
pub use coeffs::{coeff_table, leading_coeff_closed, CoeffTable};
pub use error::{Error, Result};
pub use half_order::{eval_k_half, k_half_poly, product_poly, HalfOrderPoly};
pub use oracle::{
    k_nu_numeric, oracle_f, oracle_g, product_identity_check, OracleResult, QuadConfig,
};
pub use spec::{IntegralSpec, Kernel, ParityCase};
pub use validation::{verify_grid, verify_paper_tables, VerifyReport};
