use besselint::coeffs::is_half_integral;
use besselint::validation::{verify_grid, Status};
use besselint::{
    coeff_table, eval_f, eval_k_half, k_nu_numeric, leading_coeff_closed, product_poly,
    IntegralSpec, QuadConfig, VerifyReport,
};
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn even_mu() -> impl Strategy<Value = (i64, i64)> {
    (0..=12i64, 0..=12i64).prop_map(|(n, m)| (2 * n, 2 * m + 1))
}

fn odd_mu() -> impl Strategy<Value = (i64, i64)> {
    (0..=12i64, 0..=12i64).prop_map(|(n, m)| (2 * n + 1, 2 * m))
}

proptest! {
    #[test]
    fn cosh_tables_positive_with_closed_leading((mu, nu) in prop_oneof![even_mu(), odd_mu()]) {
        let spec = IntegralSpec::cosh(mu, nu).unwrap();
        let t = coeff_table(&spec);
        prop_assert!(t.coeffs().iter().all(|c| c.is_positive()));
        prop_assert_eq!(&t.coeffs()[0], &leading_coeff_closed(&spec));
        if mu % 2 == 0 {
            prop_assert!(t.coeffs().iter().all(is_half_integral));
        } else {
            prop_assert!(t.coeffs().iter().all(|c| c.is_integer()));
        }
    }

    #[test]
    fn sinh_tables_alternate_to_zero((mu, nu) in even_mu()) {
        let spec = IntegralSpec::sinh(mu, nu).unwrap();
        let t = coeff_table(&spec);
        prop_assert_eq!(&t.coeffs()[0], &leading_coeff_closed(&spec));
        let n = (mu / 2) as usize;
        prop_assert!(t.coeffs()[..n].iter().all(|c| c.is_zero()));
        prop_assert!(t.coeffs()[n].is_positive());
    }

    #[test]
    fn product_poly_is_symmetric(s1 in 0u32..15, s2 in 0u32..15) {
        let p = product_poly(s1, s2);
        prop_assert_eq!(p.len() as u32, s1 + s2 + 1);
        prop_assert_eq!(&p, &product_poly(s2, s1));
        prop_assert!(p.iter().all(|c| c.is_integer() && c.is_positive()));
    }

    #[test]
    fn negative_nu_is_equivalent((mu, nu) in prop_oneof![even_mu(), odd_mu()], re in 0.1f64..20.0, im in -5.0f64..5.0) {
        let z = Complex64::new(re, im);
        prop_assert_eq!(eval_f(mu, nu, z).unwrap().value, eval_f(mu, -nu, z).unwrap().value);
    }

    #[test]
    fn conjugate_symmetry((mu, nu) in even_mu(), re in 0.1f64..20.0, im in -5.0f64..5.0) {
        let z = Complex64::new(re, im);
        let a = eval_f(mu, nu, z).unwrap().value;
        let b = eval_f(mu, nu, z.conj()).unwrap().value;
        prop_assert!((a - b.conj()).norm() <= 1e-13 * a.norm());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn half_order_matches_quadrature(s in 0i64..8, re in 0.2f64..15.0, im in -3.0f64..3.0) {
        let x = Complex64::new(re, im);
        let exact = eval_k_half(s, x).unwrap();
        let numeric = k_nu_numeric(s as f64 + 0.5, x, &QuadConfig::default()).unwrap().value;
        prop_assert!((exact - numeric).norm() <= 1e-9 * exact.norm());
    }
}

#[test]
fn report_round_trips_through_json() {
    let report = verify_grid(1, 1, &[Complex64::new(1.0, 0.0)], &QuadConfig::default()).unwrap();
    assert!(report.all_passed());
    let text = serde_json::to_string(&report).unwrap();
    let back: VerifyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.summary.total, back.summary.pass + back.summary.fail);
    assert!(back
        .entries
        .iter()
        .all(|e| e.max_residual.is_finite() && e.status == Status::Pass));
}

#[test]
fn grid_is_deterministic() {
    let zs = [Complex64::new(2.0, 1.0)];
    let a = verify_grid(2, 2, &zs, &QuadConfig::default()).unwrap();
    let b = verify_grid(2, 2, &zs, &QuadConfig::default()).unwrap();
    assert_eq!(a, b);
}
