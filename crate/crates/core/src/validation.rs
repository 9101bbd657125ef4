//! Verification harness: published tables, structural laws, and closed form
//! against quadrature over parameter grids.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::polynomial_for;
use crate::coeffs::{coeff_table, expected_degree, is_half_integral, leading_coeff_closed};
use crate::error::Result;
use crate::oracle::{oracle, product_identity_check, QuadConfig};
use crate::spec::{IntegralSpec, Kernel, ParityCase};

/// Relative agreement required between closed form and quadrature.
pub const ORACLE_COMPARE_TOL: f64 = 1e-8;
/// Relative residual allowed for the Bessel product identity.
pub const PRODUCT_IDENTITY_TOL: f64 = 1e-9;

pub fn default_z_grid() -> Vec<Complex64> {
    [0.5, 1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|&x| Complex64::new(x, 0.0))
        .chain(std::iter::once(Complex64::new(2.0, 1.0)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check: String,
    pub params: String,
    pub status: Status,
    pub max_residual: f64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn from_entries(entries: Vec<CheckEntry>) -> Self {
        let pass = entries.iter().filter(|e| e.status == Status::Pass).count();
        let summary = Summary {
            total: entries.len(),
            pass,
            fail: entries.len() - pass,
        };
        VerifyReport { entries, summary }
    }

    pub fn merge(self, other: VerifyReport) -> Self {
        let mut entries = self.entries;
        entries.extend(other.entries);
        Self::from_entries(entries)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }
}

fn exact_entry(check: &str, params: String, expected: String, actual: String) -> CheckEntry {
    let ok = expected == actual;
    CheckEntry {
        check: check.to_string(),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        max_residual: if ok { 0.0 } else { 1.0 },
        expected,
        actual,
    }
}

fn join(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub(crate) fn format_complex(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

fn spec_params(spec: &IntegralSpec) -> String {
    format!("kernel={} mu={} nu={}", spec.kernel(), spec.mu(), spec.nu())
}

/// An expected coefficient list, either raw (`normalized = false`) or divided
/// by its constant term (`normalized = true`, with the overall `scale` of
/// `pi e^{-z} / z`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedTable {
    pub mu: i64,
    pub nu: i64,
    #[serde(default = "default_kernel")]
    pub variant: Kernel,
    #[serde(default)]
    pub normalized: bool,
    #[serde(default)]
    pub scale: Option<String>,
    pub coeffs: Vec<String>,
}

fn default_kernel() -> Kernel {
    Kernel::Cosh
}

fn owned(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Published coefficient lists and their normalized polynomial displays.
pub fn published_tables() -> Vec<ExpectedTable> {
    vec![
        // F(4,7): m=3, n=2, C_p for p = 0..6
        ExpectedTable {
            mu: 4,
            nu: 7,
            variant: Kernel::Cosh,
            normalized: false,
            scale: None,
            coeffs: owned(&["8", "208", "2520", "17880", "76800", "184320", "184320"]),
        },
        // F(4,3): m=1, n=2, D_p for p = 0..3
        ExpectedTable {
            mu: 4,
            nu: 3,
            variant: Kernel::Cosh,
            normalized: false,
            scale: None,
            coeffs: owned(&["8", "48", "120", "120"]),
        },
        // F(4,7;z) = pi e^{-z}/(2z) (1 + 26/z + ... + 23040/z^6)
        ExpectedTable {
            mu: 4,
            nu: 7,
            variant: Kernel::Cosh,
            normalized: true,
            scale: Some("1/2".into()),
            coeffs: owned(&["1", "26", "315", "2235", "9600", "23040", "23040"]),
        },
        // F(4,3;z) = pi e^{-z}/(2z) (1 + 6/z + 15/z^2 + 15/z^3)
        ExpectedTable {
            mu: 4,
            nu: 3,
            variant: Kernel::Cosh,
            normalized: true,
            scale: Some("1/2".into()),
            coeffs: owned(&["1", "6", "15", "15"]),
        },
    ]
}

fn canonical(strings: &[String]) -> String {
    let parsed: Vec<String> = strings
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigRational>()
                .map(|r| r.to_string())
                .unwrap_or_else(|_| format!("<invalid {s}>"))
        })
        .collect();
    format!("[{}]", parsed.join(", "))
}

/// Checks each expected table against [`coeff_table`].
pub fn verify_tables(expected: &[ExpectedTable]) -> VerifyReport {
    let entries = expected
        .iter()
        .map(|t| {
            let params = format!("kernel={} mu={} nu={}", t.variant, t.mu, t.nu);
            let check = if t.normalized {
                "normalized_display"
            } else {
                "published_table"
            };
            let spec = match IntegralSpec::new(t.variant, t.mu, t.nu) {
                Ok(s) => s,
                Err(e) => {
                    return exact_entry(check, params, canonical(&t.coeffs), e.to_string());
                }
            };
            let poly = polynomial_for(&spec);
            if !t.normalized {
                return exact_entry(check, params, canonical(&t.coeffs), join(poly.coeffs()));
            }
            let expected = format!(
                "scale={} {}",
                t.scale
                    .as_deref()
                    .map(|x| canonical(&[x.to_string()])
                        .trim_matches(['[', ']'])
                        .to_string())
                    .unwrap_or_else(|| "?".into()),
                canonical(&t.coeffs)
            );
            let actual = match poly.monic() {
                Some(m) => format!("scale={} {}", m.scale, join(&m.coeffs)),
                None => "zero constant term".to_string(),
            };
            exact_entry(check, params, expected, actual)
        })
        .collect();
    VerifyReport::from_entries(entries)
}

pub fn verify_paper_tables() -> VerifyReport {
    verify_tables(&published_tables())
}

/// Exact structural checks on one table: degree law, closed-form leading
/// coefficient, sign and integrality.
fn structural_checks(spec: &IntegralSpec) -> Vec<CheckEntry> {
    let table = coeff_table(spec);
    let params = spec_params(spec);
    let mut out = vec![
        exact_entry(
            "degree_law",
            params.clone(),
            expected_degree(spec.case()).to_string(),
            table.degree().to_string(),
        ),
        exact_entry(
            "leading_coeff",
            params.clone(),
            leading_coeff_closed(spec).to_string(),
            table.coeffs()[0].to_string(),
        ),
    ];
    match spec.kernel() {
        Kernel::Cosh => {
            let positive = table.coeffs().iter().all(|c| c.is_positive());
            let integral = match spec.case() {
                ParityCase::EvenMu { .. } => table.coeffs().iter().all(is_half_integral),
                ParityCase::OddMu { .. } => table.coeffs().iter().all(|c| c.is_integer()),
            };
            out.push(exact_entry(
                "coeff_structure",
                params,
                "positive, 2c integral (odd mu: integral)".into(),
                if positive && integral {
                    "positive, 2c integral (odd mu: integral)".into()
                } else {
                    join(table.coeffs())
                },
            ));
        }
        Kernel::Sinh => {
            if spec.case().n() >= 1 {
                out.push(exact_entry(
                    "sinh_zero_constant",
                    params,
                    "0".into(),
                    table.coeffs()[0].to_string(),
                ));
            }
        }
    }
    out
}

fn oracle_check(spec: &IntegralSpec, z: Complex64, cfg: &QuadConfig) -> CheckEntry {
    let params = format!("{} z={}", spec_params(spec), format_complex(z));
    let check = match spec.kernel() {
        Kernel::Cosh => "closed_vs_oracle_F",
        Kernel::Sinh => "closed_vs_oracle_G",
    };
    let closed = match polynomial_for(spec).eval(z) {
        Ok(v) => v,
        Err(e) => {
            return CheckEntry {
                check: check.into(),
                params,
                status: Status::Fail,
                max_residual: f64::MAX,
                expected: e.to_string(),
                actual: String::new(),
            }
        }
    };
    let (numeric, note) = match oracle(
        spec.kernel(),
        i64::from(spec.mu()),
        f64::from(spec.nu()),
        z,
        cfg,
    ) {
        Ok(r) => (r.value, None),
        Err(crate::Error::Convergence {
            estimate_re,
            estimate_im,
            ..
        }) => (
            Complex64::new(estimate_re, estimate_im),
            Some("no convergence".to_string()),
        ),
        Err(e) => (Complex64::new(f64::NAN, f64::NAN), Some(e.to_string())),
    };
    let residual = relative(closed, numeric);
    let ok = note.is_none() && residual <= ORACLE_COMPARE_TOL;
    CheckEntry {
        check: check.into(),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        max_residual: residual,
        expected: format_complex(closed),
        actual: match note {
            None => format_complex(numeric),
            Some(n) => format!("{} ({n})", format_complex(numeric)),
        },
    }
}

fn relative(reference: Complex64, other: Complex64) -> f64 {
    let r = (reference - other).norm() / reference.norm();
    if r.is_finite() {
        r
    } else {
        f64::MAX
    }
}

fn identity_check(a: f64, b: f64, x: Complex64, cfg: &QuadConfig) -> CheckEntry {
    let params = format!("a={a} b={b} x={}", format_complex(x));
    let (residual, actual) = match product_identity_check(a, b, x, cfg) {
        Ok(r) => (r, format!("{r:e}")),
        Err(e) => (f64::MAX, e.to_string()),
    };
    CheckEntry {
        check: "product_identity".into(),
        params,
        status: if residual <= PRODUCT_IDENTITY_TOL {
            Status::Pass
        } else {
            Status::Fail
        },
        max_residual: residual,
        expected: format!("<= {PRODUCT_IDENTITY_TOL:e}"),
        actual,
    }
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Structure(IntegralSpec),
    Oracle(IntegralSpec, usize),
    Identity(f64, f64, usize),
}

/// All specs with `n <= max_n`, `m <= max_m`, cosh kernels of both parities
/// and the sinh kernel for even `mu`, sorted by `(mu, nu, kernel)`.
pub fn grid_specs(max_m: u32, max_n: u32) -> Vec<IntegralSpec> {
    let mut specs = Vec::new();
    for n in 0..=max_n {
        for m in 0..=max_m {
            for (kernel, case) in [
                (Kernel::Cosh, ParityCase::EvenMu { n, m }),
                (Kernel::Sinh, ParityCase::EvenMu { n, m }),
                (Kernel::Cosh, ParityCase::OddMu { n, m }),
            ] {
                specs.push(IntegralSpec::from_case(kernel, case).expect("valid by construction"));
            }
        }
    }
    specs.sort_by_key(|s| (s.mu(), s.nu(), s.kernel() == Kernel::Sinh));
    specs
}

const IDENTITY_X: [f64; 2] = [1.0, 2.0];

/// Closed form against quadrature over a parameter grid, plus exact
/// structural checks and the Bessel product identity.
///
/// Entries come out sorted by `mu`, `nu`, kernel, then `z`; the product
/// identity checks follow. Checks run in parallel.
pub fn verify_grid(
    max_m: u32,
    max_n: u32,
    z_grid: &[Complex64],
    cfg: &QuadConfig,
) -> Result<VerifyReport> {
    cfg.validate()?;
    for z in z_grid {
        crate::half_order::check_right_half_plane(*z)?;
    }
    let mut tasks = Vec::new();
    for spec in grid_specs(max_m, max_n) {
        tasks.push(Task::Structure(spec));
        tasks.extend((0..z_grid.len()).map(|i| Task::Oracle(spec, i)));
    }
    let s_max = max_m.max(max_n).min(3);
    for sa in 0..=s_max {
        for sb in 0..=s_max {
            for xi in 0..IDENTITY_X.len() {
                tasks.push(Task::Identity(f64::from(sa) + 0.5, f64::from(sb) + 0.5, xi));
            }
        }
    }
    let entries: Vec<Vec<CheckEntry>> = tasks
        .par_iter()
        .map(|task| match *task {
            Task::Structure(spec) => structural_checks(&spec),
            Task::Oracle(spec, i) => vec![oracle_check(&spec, z_grid[i], cfg)],
            Task::Identity(a, b, xi) => {
                vec![identity_check(
                    a,
                    b,
                    Complex64::new(IDENTITY_X[xi], 0.0),
                    cfg,
                )]
            }
        })
        .collect();
    Ok(VerifyReport::from_entries(
        entries.into_iter().flatten().collect(),
    ))
}

/// Tables plus grid.
pub fn verify_all(
    max_m: u32,
    max_n: u32,
    z_grid: &[Complex64],
    cfg: &QuadConfig,
    tables: &[ExpectedTable],
) -> Result<VerifyReport> {
    Ok(verify_tables(tables).merge(verify_grid(max_m, max_n, z_grid, cfg)?))
}

/// Leading coefficient check in the form `2^{2n} - n!/(2 (1/2)_n) C(2n,n) = 2^{2n-1}`.
pub fn leading_simplification_holds(n: u32) -> bool {
    let spec = IntegralSpec::cosh(2 * i64::from(n), 1).expect("valid");
    let lead = leading_coeff_closed(&spec);
    let two = BigRational::from_integer(2.into());
    let target = num_traits::pow(two, 2 * n as usize) / BigRational::from_integer(2.into());
    lead == target && !lead.is_zero()
}
