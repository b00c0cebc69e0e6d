//! C interface to `apolar`.
//!
//! Polynomials are opaque handles created by [`apolar_polynomial_parse`] and
//! released with [`apolar_polynomial_free`]. Every fallible call returns an
//! [`ApolarStatus`]; on failure a description is available from
//! [`apolar_last_error`] on the same thread. Strings handed out by the
//! library are NUL-terminated UTF-8 JSON and must be released with
//! [`apolar_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use apolar::binomial::{classify, cross_validate_report, normalize, BinomialError};
use apolar::field::FieldSpec;
use apolar::inverse::{hilbert_function, is_complete_intersection_oracle, InverseSystemError};
use apolar::lefschetz::{check_slp, LefschetzError, LefschetzMode, LefschetzSearchStrategy};
use apolar::parse::parse_polynomial;
use apolar::poly::Polynomial;
use apolar::report;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApolarStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidField = 4,
    NotHomogeneous = 5,
    NotBinomial = 6,
    NotArtinian = 7,
    InvalidArgument = 8,
    Internal = 9,
}

/// Which Lefschetz property to test.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApolarMode {
    Weak = 0,
    Strong = 1,
}

/// A parsed homogeneous polynomial together with its variable names.
pub struct ApolarPolynomial {
    poly: Polynomial,
    names: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(ApolarStatus, String);

impl From<InverseSystemError> for Failure {
    fn from(e: InverseSystemError) -> Self {
        let status = match e {
            InverseSystemError::NotArtinian(_) => ApolarStatus::NotArtinian,
            InverseSystemError::NotHomogeneous | InverseSystemError::ZeroPolynomial => ApolarStatus::NotHomogeneous,
            _ => ApolarStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<BinomialError> for Failure {
    fn from(e: BinomialError) -> Self {
        match e {
            BinomialError::NotHomogeneous => Failure(ApolarStatus::NotHomogeneous, e.to_string()),
            BinomialError::Oracle(inner) => inner.into(),
            _ => Failure(ApolarStatus::NotBinomial, e.to_string()),
        }
    }
}

impl From<LefschetzError> for Failure {
    fn from(e: LefschetzError) -> Self {
        match e {
            LefschetzError::Inverse(inner) => inner.into(),
            _ => Failure(ApolarStatus::InvalidArgument, e.to_string()),
        }
    }
}

/// Runs `body`, recording any failure or panic for [`apolar_last_error`].
fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> ApolarStatus {
    clear_error();
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => ApolarStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error");
            ApolarStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(ApolarStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(ApolarStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn handle<'a>(p: *const ApolarPolynomial) -> Result<&'a ApolarPolynomial, Failure> {
    p.as_ref().ok_or_else(|| Failure(ApolarStatus::NullPointer, "polynomial handle is null".into()))
}

unsafe fn write_json(out: *mut *mut c_char, value: &serde_json::Value) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(ApolarStatus::NullPointer, "output pointer is null".into()));
    }
    let text = CString::new(value.to_string()).map_err(|e| Failure(ApolarStatus::Internal, e.to_string()))?;
    *out = text.into_raw();
    Ok(())
}

/// Parses `src` over the field of the given characteristic (0 or a prime).
///
/// `vars_csv` may be null; otherwise it is a comma-separated list of
/// variable names fixing their order. On success `*out` receives a new
/// handle.
///
/// # Safety
/// `src` and a non-null `vars_csv` must be NUL-terminated strings; `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_polynomial_parse(
    src: *const c_char,
    vars_csv: *const c_char,
    characteristic: u64,
    out: *mut *mut ApolarPolynomial,
) -> ApolarStatus {
    guarded(|| {
        if out.is_null() {
            return Err(Failure(ApolarStatus::NullPointer, "output pointer is null".into()));
        }
        let src = read_str(src, "source")?;
        let vars: Option<Vec<String>> = if vars_csv.is_null() {
            None
        } else {
            Some(read_str(vars_csv, "variable list")?.split(',').map(|s| s.trim().to_string()).collect())
        };
        let field =
            FieldSpec::from_characteristic(characteristic).map_err(|e| Failure(ApolarStatus::InvalidField, e.to_string()))?;
        let parsed = parse_polynomial(src, field, vars.as_deref())
            .map_err(|e| Failure(ApolarStatus::ParseError, e.to_string()))?;
        if !parsed.poly.is_homogeneous() || parsed.poly.is_zero() {
            return Err(Failure(ApolarStatus::NotHomogeneous, "polynomial must be a nonzero form".into()));
        }
        *out = Box::into_raw(Box::new(ApolarPolynomial { poly: parsed.poly, names: parsed.names }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must come from [`apolar_polynomial_parse`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn apolar_polynomial_free(p: *mut ApolarPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of variables, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn apolar_polynomial_nvars(p: *const ApolarPolynomial) -> usize {
    p.as_ref().map_or(0, |h| h.poly.nvars())
}

/// Degree of the form.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_polynomial_degree(p: *const ApolarPolynomial, out: *mut u32) -> ApolarStatus {
    guarded(|| {
        let h = handle(p)?;
        if out.is_null() {
            return Err(Failure(ApolarStatus::NullPointer, "output pointer is null".into()));
        }
        *out = h.poly.homogeneous_degree().unwrap_or(0);
        Ok(())
    })
}

/// Classification report of a binomial as JSON. With `verify`, the report
/// also carries the comparison with the direct computation of `Ann(F)`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_classify_json(p: *const ApolarPolynomial, verify: bool, out: *mut *mut c_char) -> ApolarStatus {
    guarded(|| {
        let h = handle(p)?;
        let nf = normalize(&h.poly)?;
        let mut value = report::classification(&classify(&nf), &h.names);
        if verify {
            let cv = cross_validate_report(&h.poly)?;
            value["verification"] = report::verification(&cv);
        }
        write_json(out, &value)
    })
}

/// Hilbert function of `R/Ann(F)` as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_hilbert_json(p: *const ApolarPolynomial, out: *mut *mut c_char) -> ApolarStatus {
    guarded(|| {
        let h = handle(p)?;
        let data = hilbert_function(&h.poly)?;
        write_json(out, &report::hilbert(&data))
    })
}

/// Searches for a weak or strong Lefschetz element of `R/Ann(F)` and returns
/// the rank table as JSON. `trials = 0` selects the default budget.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_lefschetz_json(
    p: *const ApolarPolynomial,
    mode: ApolarMode,
    trials: u32,
    seed: u64,
    out: *mut *mut c_char,
) -> ApolarStatus {
    guarded(|| {
        let h = handle(p)?;
        let mut strategy = LefschetzSearchStrategy::with_mode(match mode {
            ApolarMode::Weak => LefschetzMode::Wlp,
            ApolarMode::Strong => LefschetzMode::Slp,
        });
        if trials > 0 {
            strategy.trials = trials as usize;
        }
        strategy.seed = seed;
        let r = check_slp(&h.poly, &strategy)?;
        write_json(out, &report::lefschetz(&r, &h.names))
    })
}

/// Whether `R/Ann(F)` is a complete intersection, decided by computing the
/// minimal generators of `Ann(F)`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn apolar_is_complete_intersection(p: *const ApolarPolynomial, out: *mut bool) -> ApolarStatus {
    guarded(|| {
        let h = handle(p)?;
        if out.is_null() {
            return Err(Failure(ApolarStatus::NullPointer, "output pointer is null".into()));
        }
        *out = is_complete_intersection_oracle(&h.poly)?.is_ci;
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn apolar_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn apolar_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn apolar_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
