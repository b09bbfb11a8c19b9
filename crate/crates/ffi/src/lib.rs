//! C interface to the qrealize engine.
//!
//! Every fallible call returns a [`QrStatus`]; on failure the message is
//! available from [`qr_last_error`] on the same thread. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`qr_string_free`]; element handles are released with [`qr_element_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qrealize::cli::{cmd_matrix, cmd_verify, parse_w, FockMode, Suite, VerifyOptions};
use qrealize::scalarfield::Assignment;
use qrealize::walgebra::WElement;

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    VerificationFailed = 5,
    Panic = 6,
}

/// Opaque handle to an element of the oscillator algebra.
pub struct QrElement {
    inner: WElement,
}

/// Options for [`qr_verify`]; zero fields select the suite defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct QrVerifyOptions {
    pub nmax: u32,
    pub dim: u32,
    /// Evaluate Fock entries at q = 3/2, p1 = 2, p2 = 3, p3 = 5.
    pub numeric: bool,
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

fn fail(status: QrStatus, message: impl Into<String>) -> QrStatus {
    set_error(message);
    status
}

fn guard(body: impl FnOnce() -> QrStatus) -> QrStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal error".into());
            fail(QrStatus::Panic, msg)
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, QrStatus> {
    if p.is_null() {
        return Err(fail(QrStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(QrStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> QrStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            QrStatus::Ok
        }
        Err(_) => fail(QrStatus::Panic, "output contains a NUL byte"),
    }
}

unsafe fn write_element(out: *mut *mut QrElement, x: WElement) -> QrStatus {
    *out = Box::into_raw(Box::new(QrElement { inner: x }));
    QrStatus::Ok
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into this library.
#[no_mangle]
pub extern "C" fn qr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn qr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn qr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse an expression over the oscillator algebra.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_element_parse(expr: *const c_char, out: *mut *mut QrElement) -> QrStatus {
    guard(|| {
        if out.is_null() {
            return fail(QrStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let text = match read_str(expr, "expr") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_w(text) {
            Ok(x) => write_element(out, x),
            Err(e) => fail(QrStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `x` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qr_element_free(x: *mut QrElement) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

unsafe fn binary(
    a: *const QrElement,
    b: *const QrElement,
    out: *mut *mut QrElement,
    op: fn(&WElement, &WElement) -> WElement,
) -> QrStatus {
    guard(|| {
        if a.is_null() || b.is_null() || out.is_null() {
            return fail(QrStatus::NullPointer, "null argument");
        }
        write_element(out, op(&(*a).inner, &(*b).inner))
    })
}

/// Product `a * b`, normal ordered.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_element_mul(
    a: *const QrElement,
    b: *const QrElement,
    out: *mut *mut QrElement,
) -> QrStatus {
    binary(a, b, out, WElement::mul)
}

/// # Safety
/// As [`qr_element_mul`].
#[no_mangle]
pub unsafe extern "C" fn qr_element_add(
    a: *const QrElement,
    b: *const QrElement,
    out: *mut *mut QrElement,
) -> QrStatus {
    binary(a, b, out, WElement::add)
}

/// # Safety
/// As [`qr_element_mul`].
#[no_mangle]
pub unsafe extern "C" fn qr_element_sub(
    a: *const QrElement,
    b: *const QrElement,
    out: *mut *mut QrElement,
) -> QrStatus {
    binary(a, b, out, WElement::sub)
}

/// # Safety
/// `x` must be a live handle; `is_zero` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_element_is_zero(x: *const QrElement, is_zero: *mut bool) -> QrStatus {
    guard(|| {
        if x.is_null() || is_zero.is_null() {
            return fail(QrStatus::NullPointer, "null argument");
        }
        *is_zero = (*x).inner.is_zero();
        QrStatus::Ok
    })
}

/// Canonical text of the element.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_element_render(x: *const QrElement, out: *mut *mut c_char) -> QrStatus {
    guard(|| {
        if x.is_null() || out.is_null() {
            return fail(QrStatus::NullPointer, "null argument");
        }
        write_string(out, (*x).inner.to_string())
    })
}

/// Run a verification suite by its command-line name. On `Ok` or
/// `VerificationFailed`, `report` receives the rendered report.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `options` may be null;
/// `passed` and `report` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qr_verify(
    suite: *const c_char,
    options: *const QrVerifyOptions,
    passed: *mut bool,
    report: *mut *mut c_char,
) -> QrStatus {
    guard(|| {
        if passed.is_null() || report.is_null() {
            return fail(QrStatus::NullPointer, "null argument");
        }
        *passed = false;
        *report = ptr::null_mut();
        let name = match read_str(suite, "suite") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let Some(suite) = Suite::from_name(name) else {
            return fail(QrStatus::InvalidArgument, format!("unknown suite '{name}'"));
        };
        let o = if options.is_null() {
            QrVerifyOptions::default()
        } else {
            *options
        };
        let opts = VerifyOptions {
            nmax: (o.nmax != 0).then_some(o.nmax),
            dim: (o.dim != 0).then_some(o.dim as usize),
            mode: None,
            assignment: o.numeric.then(Assignment::default),
        };
        let r = match cmd_verify(suite, &opts) {
            Ok(r) => r,
            Err(e) => return fail(QrStatus::InvalidArgument, e.to_string()),
        };
        *passed = r.all_passed();
        let status = write_string(report, r.render(false));
        if status != QrStatus::Ok {
            return status;
        }
        if *passed {
            QrStatus::Ok
        } else {
            fail(
                QrStatus::VerificationFailed,
                format!("{} of {} checks failed", r.len() - r.passed_count(), r.len()),
            )
        }
    })
}

/// JSON export of the Fock matrix of a generator (e.g. `E12`) or an
/// expression, in mode `trivial` or `fermionic`.
///
/// # Safety
/// `generator` and `mode` must be NUL-terminated strings; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn qr_matrix_json(
    generator: *const c_char,
    dim: u32,
    mode: *const c_char,
    numeric: bool,
    out: *mut *mut c_char,
) -> QrStatus {
    guard(|| {
        if out.is_null() {
            return fail(QrStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        let (g, m) = match (read_str(generator, "generator"), read_str(mode, "mode")) {
            (Ok(g), Ok(m)) => (g, m),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let Some(mode) = FockMode::from_name(m) else {
            return fail(QrStatus::InvalidArgument, format!("unknown mode '{m}'"));
        };
        let assignment = numeric.then(Assignment::default);
        match cmd_matrix(g, dim as usize, mode, assignment.as_ref()) {
            Ok(doc) => write_string(out, doc.to_json()),
            Err(e) => fail(QrStatus::InvalidArgument, e.to_string()),
        }
    })
}
