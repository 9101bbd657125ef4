//! Identification of which integral is being evaluated.
//!
//! The cosh kernel gives `F(mu, nu; z) = ∫₀^∞ cosh^mu t K_nu(z cosh t) dt`,
//! the sinh kernel `G(mu, nu; z) = ∫₀^∞ sinh^mu t K_nu(z cosh t) dt`. Only
//! integer `mu`, `nu` of opposite parity reduce to a finite closed form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kernel {
    Cosh,
    Sinh,
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kernel::Cosh => "cosh",
            Kernel::Sinh => "sinh",
        })
    }
}

impl FromStr for Kernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cosh" => Ok(Kernel::Cosh),
            "sinh" => Ok(Kernel::Sinh),
            other => Err(domain(format!("unknown kernel variant '{other}'"))),
        }
    }
}

/// Parity split of `(mu, nu)`.
///
/// `EvenMu { n, m }` means `mu = 2n`, `nu = 2m + 1`; `OddMu { n, m }` means
/// `mu = 2n + 1`, `nu = 2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "parity", rename_all = "snake_case")]
pub enum ParityCase {
    EvenMu { n: u32, m: u32 },
    OddMu { n: u32, m: u32 },
}

impl ParityCase {
    pub fn n(&self) -> u32 {
        match *self {
            ParityCase::EvenMu { n, .. } | ParityCase::OddMu { n, .. } => n,
        }
    }

    pub fn m(&self) -> u32 {
        match *self {
            ParityCase::EvenMu { m, .. } | ParityCase::OddMu { m, .. } => m,
        }
    }
}

/// A validated `(kernel, mu, nu)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegralSpec {
    kernel: Kernel,
    mu: u32,
    nu: u32,
    case: ParityCase,
}

impl IntegralSpec {
    /// Builds a spec, normalizing a negative `nu` to `|nu|` (`K_{-nu} = K_nu`).
    pub fn new(kernel: Kernel, mu: i64, nu: i64) -> Result<Self> {
        if mu < 0 {
            return Err(domain(format!("mu must be non-negative, got {mu}")));
        }
        let nu = nu.unsigned_abs();
        let mu = u32::try_from(mu).map_err(|_| domain("mu too large"))?;
        let nu = u32::try_from(nu).map_err(|_| domain("nu too large"))?;
        let case = match (mu % 2, nu % 2) {
            (0, 1) => ParityCase::EvenMu {
                n: mu / 2,
                m: (nu - 1) / 2,
            },
            (1, 0) => ParityCase::OddMu {
                n: (mu - 1) / 2,
                m: nu / 2,
            },
            _ => return Err(Error::UnsupportedParity { mu, nu }),
        };
        if kernel == Kernel::Sinh && matches!(case, ParityCase::OddMu { .. }) {
            return Err(Error::Unsupported(
                "sinh kernel requires even mu and odd nu".into(),
            ));
        }
        Ok(IntegralSpec {
            kernel,
            mu,
            nu,
            case,
        })
    }

    pub fn cosh(mu: i64, nu: i64) -> Result<Self> {
        Self::new(Kernel::Cosh, mu, nu)
    }

    pub fn sinh(mu: i64, nu: i64) -> Result<Self> {
        Self::new(Kernel::Sinh, mu, nu)
    }

    /// Builds a spec from the `(n, m)` parametrization directly.
    pub fn from_case(kernel: Kernel, case: ParityCase) -> Result<Self> {
        let (mu, nu) = match case {
            ParityCase::EvenMu { n, m } => (2 * i64::from(n), 2 * i64::from(m) + 1),
            ParityCase::OddMu { n, m } => (2 * i64::from(n) + 1, 2 * i64::from(m)),
        };
        Self::new(kernel, mu, nu)
    }

    pub fn kernel(&self) -> Kernel {
        self.kernel
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn case(&self) -> ParityCase {
        self.case
    }

    /// Power `q` in the prefactor `π e^{-z} / (2^q z)`.
    pub fn prefactor_pow2(&self) -> u32 {
        match self.case {
            ParityCase::EvenMu { n, .. } => 2 * n,
            ParityCase::OddMu { n, .. } => 2 * n + 1,
        }
    }
}

impl fmt::Display for IntegralSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kernel {
            Kernel::Cosh => "F",
            Kernel::Sinh => "G",
        };
        write!(f, "{}({}, {})", name, self.mu, self.nu)
    }
}
