//! C ABI for `besselint`.
//!
//! Every function returns a [`BesselintStatus`]. On failure a message is kept
//! per thread and can be fetched with [`besselint_last_error_message`].
//! Coefficient tables are exposed through the opaque [`BesselintTable`] handle,
//! which must be released with [`besselint_table_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use besselint::{coeff_table, oracle_f, oracle_g, Error, IntegralSpec, Kernel, PolyInvZ};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselintStatus {
    Ok = 0,
    Domain = 1,
    UnsupportedParity = 2,
    Unsupported = 3,
    Convergence = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Integrand kernel: `cosh^mu t` or `sinh^mu t`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselintKernel {
    Cosh = 0,
    Sinh = 1,
}

impl From<BesselintKernel> for Kernel {
    fn from(k: BesselintKernel) -> Kernel {
        match k {
            BesselintKernel::Cosh => Kernel::Cosh,
            BesselintKernel::Sinh => Kernel::Sinh,
        }
    }
}

/// Complex number with C layout.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselintComplex {
    pub re: f64,
    pub im: f64,
}

impl From<BesselintComplex> for Complex64 {
    fn from(c: BesselintComplex) -> Complex64 {
        Complex64::new(c.re, c.im)
    }
}

impl From<Complex64> for BesselintComplex {
    fn from(c: Complex64) -> BesselintComplex {
        BesselintComplex { re: c.re, im: c.im }
    }
}

/// Exact coefficient table of one integral.
pub struct BesselintTable {
    poly: PolyInvZ,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> BesselintStatus {
    match e {
        Error::Domain(_) => BesselintStatus::Domain,
        Error::UnsupportedParity { .. } => BesselintStatus::UnsupportedParity,
        Error::Unsupported(_) => BesselintStatus::Unsupported,
        Error::Convergence { .. } => BesselintStatus::Convergence,
    }
}

fn fail(e: Error) -> BesselintStatus {
    let status = status_of(&e);
    set_error(e.to_string());
    status
}

fn null(name: &str) -> BesselintStatus {
    set_error(format!("{name} is null"));
    BesselintStatus::NullPointer
}

fn guard(f: impl FnOnce() -> BesselintStatus) -> BesselintStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            BesselintStatus::Panic
        }
    }
}

/// Message describing the last failure on this thread, or null if the last
/// call succeeded. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn besselint_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds the table for `kernel`, `mu`, `nu` and stores a new handle in `out`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_new(
    kernel: BesselintKernel,
    mu: i64,
    nu: i64,
    out: *mut *mut BesselintTable,
) -> BesselintStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        *out = ptr::null_mut();
        match IntegralSpec::new(kernel.into(), mu, nu) {
            Ok(spec) => {
                let table = Box::new(BesselintTable {
                    poly: coeff_table(&spec).into(),
                });
                *out = Box::into_raw(table);
                BesselintStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `table` must be null or a handle from [`besselint_table_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_free(table: *mut BesselintTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Polynomial degree in `1/z`.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_degree(
    table: *const BesselintTable,
    out: *mut u32,
) -> BesselintStatus {
    guard(|| match (table.as_ref(), out.is_null()) {
        (None, _) => null("table"),
        (_, true) => null("out"),
        (Some(t), false) => {
            *out = t.poly.degree();
            BesselintStatus::Ok
        }
    })
}

/// Exponent `q` of the prefactor `pi e^{-z} / (2^q z)`.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_prefactor_pow2(
    table: *const BesselintTable,
    out: *mut u32,
) -> BesselintStatus {
    guard(|| match (table.as_ref(), out.is_null()) {
        (None, _) => null("table"),
        (_, true) => null("out"),
        (Some(t), false) => {
            *out = t.poly.prefactor_pow2();
            BesselintStatus::Ok
        }
    })
}

fn coeff_at(t: &BesselintTable, p: u32) -> Result<&BigRational, BesselintStatus> {
    t.poly.coeffs().get(p as usize).ok_or_else(|| {
        set_error(format!("index {p} exceeds degree {}", t.poly.degree()));
        BesselintStatus::Domain
    })
}

/// Writes coefficient `p` as a NUL-terminated decimal (`"184320"` or `"3/2"`).
///
/// `needed` (optional) receives the buffer size including the terminator.
/// Returns `BufferTooSmall` without writing when `len` is insufficient;
/// `buf` may then be null.
///
/// # Safety
/// `table` must be a live handle; `buf` must be valid for `len` bytes;
/// `needed` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_coeff_string(
    table: *const BesselintTable,
    p: u32,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> BesselintStatus {
    guard(|| {
        let Some(t) = table.as_ref() else {
            return null("table");
        };
        let c = match coeff_at(t, p) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let text = c.to_string();
        let size = text.len() + 1;
        if !needed.is_null() {
            *needed = size;
        }
        if buf.is_null() || len < size {
            set_error(format!("buffer of {len} bytes, {size} needed"));
            return BesselintStatus::BufferTooSmall;
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        *buf.add(text.len()) = 0;
        BesselintStatus::Ok
    })
}

/// Coefficient `p` rounded to double.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_coeff_f64(
    table: *const BesselintTable,
    p: u32,
    out: *mut f64,
) -> BesselintStatus {
    guard(|| {
        let Some(t) = table.as_ref() else {
            return null("table");
        };
        if out.is_null() {
            return null("out");
        }
        match coeff_at(t, p) {
            Ok(c) => {
                *out = c.to_f64().unwrap_or(f64::NAN);
                BesselintStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Evaluates the closed form held by `table` at `z`.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_table_eval(
    table: *const BesselintTable,
    z: BesselintComplex,
    out: *mut BesselintComplex,
) -> BesselintStatus {
    guard(|| {
        let Some(t) = table.as_ref() else {
            return null("table");
        };
        if out.is_null() {
            return null("out");
        }
        match t.poly.eval(z.into()) {
            Ok(v) => {
                *out = v.into();
                BesselintStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Closed-form value of the integral at `z`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_eval(
    kernel: BesselintKernel,
    mu: i64,
    nu: i64,
    z: BesselintComplex,
    out: *mut BesselintComplex,
) -> BesselintStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let result = match kernel {
            BesselintKernel::Cosh => besselint::eval_f(mu, nu, z.into()),
            BesselintKernel::Sinh => besselint::eval_g(mu, nu, z.into()),
        };
        match result {
            Ok(r) => {
                *out = r.value.into();
                BesselintStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Quadrature value of the integral at `z` for real `nu`, relative tolerance `tol`.
///
/// On `Convergence` the best estimate is still written to `out` and `est_error`.
///
/// # Safety
/// `out` must be valid for writes; `est_error` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn besselint_oracle(
    kernel: BesselintKernel,
    mu: i64,
    nu: f64,
    z: BesselintComplex,
    tol: f64,
    out: *mut BesselintComplex,
    est_error: *mut f64,
) -> BesselintStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let cfg = besselint::QuadConfig::with_tol(tol);
        if let Err(e) = cfg.validate() {
            return fail(e);
        }
        let result = match kernel {
            BesselintKernel::Cosh => oracle_f(mu, nu, z.into(), &cfg),
            BesselintKernel::Sinh => oracle_g(mu, nu, z.into(), &cfg),
        };
        let (value, err, status) = match result {
            Ok(r) => (r.value, r.est_error, BesselintStatus::Ok),
            Err(Error::Convergence {
                estimate_re,
                estimate_im,
                est_error,
            }) => {
                let e = Error::Convergence {
                    estimate_re,
                    estimate_im,
                    est_error,
                };
                (Complex64::new(estimate_re, estimate_im), est_error, fail(e))
            }
            Err(e) => return fail(e),
        };
        *out = value.into();
        if !est_error.is_null() {
            *est_error = err;
        }
        status
    })
}
