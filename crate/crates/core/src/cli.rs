//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 quadrature convergence failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::closed_form::polynomial_for;
use crate::coeffs::coeff_table;
use crate::error::Error;
use crate::oracle::{oracle, OracleResult, QuadConfig};
use crate::spec::{IntegralSpec, Kernel};
use crate::validation::{
    default_z_grid, published_tables, verify_all, ExpectedTable, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Cosh,
    Sinh,
}

impl From<Variant> for Kernel {
    fn from(v: Variant) -> Kernel {
        match v {
            Variant::Cosh => Kernel::Cosh,
            Variant::Sinh => Kernel::Sinh,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "besselint",
    version,
    about = "Closed forms of ∫₀^∞ cosh^μ t K_ν(z cosh t) dt and its sinh variant"
)]
struct Cli {
    /// Kernel: cosh (F) or sinh (G).
    #[arg(long, global = true, value_enum, default_value = "cosh")]
    variant: Variant,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Relative quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: i64,
    /// Argument as RE[+IMi], e.g. 2, 2+1i, 1-3i.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// Imaginary part added to --z.
    #[arg(long, allow_hyphen_values = true)]
    zi: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the exact coefficient table.
    Coeffs {
        #[arg(long, allow_hyphen_values = true)]
        mu: i64,
        #[arg(long, allow_hyphen_values = true)]
        nu: i64,
    },
    /// Evaluate the closed form.
    Eval {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_hyphen_values = true)]
        nu: i64,
    },
    /// Evaluate the integral by nested quadrature (any real nu).
    Oracle {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        /// Comma-separated arguments, e.g. "0.5,1,2+1i".
        #[arg(long)]
        z_grid: Option<String>,
        /// JSON file with expected tables replacing the built-in ones.
        #[arg(long)]
        expect: Option<PathBuf>,
    },
}

/// Parses `RE`, `RE+IMi`, `RE-IMi`, `IMi`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    t.parse::<Complex64>()
        .map_err(|_| format!("cannot parse complex number '{s}'"))
        .and_then(|z| {
            if z.re.is_finite() && z.im.is_finite() {
                Ok(z)
            } else {
                Err(format!("complex number '{s}' is not finite"))
            }
        })
}

fn point(p: &PointArgs) -> Result<Complex64, String> {
    let mut z = parse_complex(&p.z)?;
    if let Some(im) = p.zi {
        z.im += im;
    }
    Ok(z)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Convergence { .. } => EXIT_CONVERGENCE,
        _ => EXIT_USAGE,
    }
}

fn sci(x: f64) -> String {
    format!("{x:.15e}")
}

fn write_csv<W: Write>(out: W, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

#[derive(Serialize)]
struct CoeffsJson {
    mu: u32,
    nu: u32,
    variant: Kernel,
    prefactor_pow2: u32,
    degree: u32,
    coeffs: Vec<String>,
}

fn cmd_coeffs(
    kernel: Kernel,
    mu: i64,
    nu: i64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let spec = IntegralSpec::new(kernel, mu, nu)?;
    let table = coeff_table(&spec);
    let coeffs: Vec<String> = table.coeffs().iter().map(|c| c.to_string()).collect();
    let io = match format {
        OutputFormat::Text => {
            let mut s = format!(
                "{spec}: pi*exp(-z)/(2^{} z) * sum_p c_p z^-p, degree {}\n",
                table.prefactor_pow2(),
                table.degree()
            );
            for (p, c) in coeffs.iter().enumerate() {
                s.push_str(&format!("{p}\t{c}\n"));
            }
            out.write_all(s.as_bytes())
        }
        OutputFormat::Json => {
            let doc = CoeffsJson {
                mu: spec.mu(),
                nu: spec.nu(),
                variant: kernel,
                prefactor_pow2: table.prefactor_pow2(),
                degree: table.degree(),
                coeffs,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = coeffs
                .into_iter()
                .enumerate()
                .map(|(p, c)| vec![p.to_string(), c])
                .collect();
            write_csv(out, &["p", "coeff"], &rows)
        }
    };
    io.map_err(|e| Error::Domain(format!("write failed: {e}")))
}

fn write_value(
    out: &mut dyn Write,
    format: OutputFormat,
    label: &str,
    value: Complex64,
    est_error: Option<f64>,
    spec: serde_json::Value,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Text => {
            write!(
                out,
                "{label} = {} {} {}i",
                sci(value.re),
                if value.im < 0.0 { "-" } else { "+" },
                sci(value.im.abs())
            )?;
            if let Some(e) = est_error {
                write!(out, "  (est. error {e:.3e})")?;
            }
            writeln!(out)
        }
        OutputFormat::Json => {
            let doc = json!({
                "value_re": value.re,
                "value_im": value.im,
                "est_error": est_error,
                "spec": spec,
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            )
        }
        OutputFormat::Csv => write_csv(
            out,
            &["value_re", "value_im", "est_error"],
            &[vec![
                sci(value.re),
                sci(value.im),
                est_error.map(sci).unwrap_or_default(),
            ]],
        ),
    }
}

fn cmd_eval(
    kernel: Kernel,
    mu: i64,
    nu: i64,
    z: Complex64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let spec = IntegralSpec::new(kernel, mu, nu)?;
    let value = polynomial_for(&spec).eval(z)?;
    let label = format!("{spec} at z = {}", crate::validation::format_complex(z));
    let spec_json = json!({
        "mu": spec.mu(),
        "nu": spec.nu(),
        "variant": kernel,
        "case": spec.case(),
        "z_re": z.re,
        "z_im": z.im,
    });
    write_value(out, format, &label, value, None, spec_json)
        .map_err(|e| Error::Domain(format!("write failed: {e}")))
}

fn cmd_oracle(
    kernel: Kernel,
    mu: i64,
    nu: f64,
    z: Complex64,
    cfg: &QuadConfig,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), Error> {
    let result = oracle(kernel, mu, nu, z, cfg);
    let (r, failure) = match result {
        Ok(r) => (r, None),
        Err(
            e @ Error::Convergence {
                estimate_re,
                estimate_im,
                est_error,
            },
        ) => (
            OracleResult {
                value: Complex64::new(estimate_re, estimate_im),
                est_error,
                evaluations: 0,
            },
            Some(e),
        ),
        Err(e) => return Err(e),
    };
    let name = match kernel {
        Kernel::Cosh => "F",
        Kernel::Sinh => "G",
    };
    let label = format!(
        "{name}({mu}, {nu}) at z = {} by quadrature{}",
        crate::validation::format_complex(z),
        if failure.is_some() {
            " (best estimate, not converged)"
        } else {
            ""
        }
    );
    let spec_json = json!({
        "mu": mu,
        "nu": nu,
        "variant": kernel,
        "z_re": z.re,
        "z_im": z.im,
        "tol": cfg.tol,
        "evaluations": r.evaluations,
        "converged": failure.is_none(),
    });
    write_value(out, format, &label, r.value, Some(r.est_error), spec_json)
        .map_err(|e| Error::Domain(format!("write failed: {e}")))?;
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn write_report(
    out: &mut dyn Write,
    format: OutputFormat,
    report: &VerifyReport,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Text => {
            for e in &report.entries {
                writeln!(
                    out,
                    "{}  {:<22} {:<48} residual={:.3e}",
                    e.status, e.check, e.params, e.max_residual
                )?;
                if e.status == crate::validation::Status::Fail {
                    writeln!(out, "      expected: {}", e.expected)?;
                    writeln!(out, "      actual:   {}", e.actual)?;
                }
            }
            writeln!(
                out,
                "total {}  pass {}  fail {}",
                report.summary.total, report.summary.pass, report.summary.fail
            )
        }
        OutputFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(report).expect("serializable")
        ),
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|e| {
                    vec![
                        e.check.clone(),
                        e.params.clone(),
                        e.status.to_string(),
                        format!("{:e}", e.max_residual),
                        e.expected.clone(),
                        e.actual.clone(),
                    ]
                })
                .collect();
            write_csv(
                out,
                &[
                    "check",
                    "params",
                    "status",
                    "max_residual",
                    "expected",
                    "actual",
                ],
                &rows,
            )
        }
    }
}

fn load_tables(path: &PathBuf) -> Result<Vec<ExpectedTable>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let kernel = Kernel::from(cli.variant);
    let cfg = QuadConfig::with_tol(cli.tol);
    let usage = |err: &mut dyn Write, msg: &str| {
        let _ = writeln!(err, "error: {msg}");
        EXIT_USAGE
    };

    let result = match &cli.command {
        Command::Coeffs { mu, nu } => cmd_coeffs(kernel, *mu, *nu, cli.format, out),
        Command::Eval { point: p, nu } => match point(p) {
            Ok(z) => cmd_eval(kernel, p.mu, *nu, z, cli.format, out),
            Err(m) => return usage(err, &m),
        },
        Command::Oracle { point: p, nu } => match point(p) {
            Ok(z) => cfg
                .validate()
                .and_then(|_| cmd_oracle(kernel, p.mu, *nu, z, &cfg, cli.format, out)),
            Err(m) => return usage(err, &m),
        },
        Command::Verify {
            max_m,
            max_n,
            z_grid,
            expect,
        } => {
            let grid = match z_grid {
                None => default_z_grid(),
                Some(s) => match s
                    .split(',')
                    .map(parse_complex)
                    .collect::<Result<Vec<_>, _>>()
                {
                    Ok(g) => g,
                    Err(m) => return usage(err, &m),
                },
            };
            let tables = match expect {
                None => published_tables(),
                Some(path) => match load_tables(path) {
                    Ok(t) => t,
                    Err(m) => return usage(err, &m),
                },
            };
            match verify_all(*max_m, *max_n, &grid, &cfg, &tables) {
                Ok(report) => {
                    if let Err(e) = write_report(out, cli.format, &report) {
                        return usage(err, &format!("write failed: {e}"));
                    }
                    return if report.all_passed() {
                        EXIT_OK
                    } else {
                        EXIT_VERIFY_FAILED
                    };
                }
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
