//! C ABI over `elastic-matroid`.
//!
//! Matroids cross the boundary as opaque `EmMatroid` handles. Every fallible
//! call returns an [`EmStatus`]; on failure the message is available from
//! [`em_last_error_message`] on the same thread. Strings returned by the
//! library are released with [`em_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use elastic_matroid::constructions::family;
use elastic_matroid::elasticity::{elastic_elements, n_elastic_elements};
use elastic_matroid::harness::catalog::{decode_line, resolve_catalog, CatalogFormat};
use elastic_matroid::harness::report::to_json;
use elastic_matroid::harness::verify::{select_checks, verify, VerifyOptions};
use elastic_matroid::{connectivity, Error, Matroid};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidMatroid = 4,
    InvalidParameter = 5,
    UnknownCheck = 6,
    Io = 7,
    Panic = 8,
}

/// Opaque matroid handle.
pub struct EmMatroid {
    inner: Matroid,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> EmStatus {
    match e {
        Error::Parse { .. } => EmStatus::Parse,
        Error::InvalidParameter(_) | Error::UnsupportedField(_) | Error::TooManyElements(_) => {
            EmStatus::InvalidParameter
        }
        Error::UnknownCheck(_) => EmStatus::UnknownCheck,
        Error::Io(_) => EmStatus::Io,
        _ => EmStatus::InvalidMatroid,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (EmStatus, String)>) -> EmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EmStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            EmStatus::Panic
        }
    }
}

fn fail(e: Error) -> (EmStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, (EmStatus, String)> {
    if s.is_null() {
        return Err((EmStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|_| (EmStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn matroid<'a>(m: *const EmMatroid) -> Result<&'a Matroid, (EmStatus, String)> {
    m.as_ref().map(|h| &h.inner).ok_or((EmStatus::NullPointer, "null matroid".into()))
}

fn null_out() -> (EmStatus, String) {
    (EmStatus::NullPointer, "null output pointer".into())
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), (EmStatus, String)> {
    if out.is_null() {
        return Err(null_out());
    }
    out.write(value);
    Ok(())
}

fn boxed(m: Matroid) -> *mut EmMatroid {
    Box::into_raw(Box::new(EmMatroid { inner: m }))
}

/// Parses one lex01 line (`n r bits`) into a new handle.
///
/// # Safety
/// `line` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn em_matroid_from_lex01(line: *const c_char, out: *mut *mut EmMatroid) -> EmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out());
        }
        out.write(ptr::null_mut());
        let m = decode_line(text(line)?, CatalogFormat::Lex01, 1).map_err(fail)?;
        store(out, boxed(m))
    })
}

/// Builds a named matroid such as `U(2,4)`, `W(3)`, `THETA(4)` or `L8`.
///
/// # Safety
/// `spec` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn em_matroid_from_family(spec: *const c_char, out: *mut *mut EmMatroid) -> EmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null_out());
        }
        out.write(ptr::null_mut());
        let m = family(text(spec)?).map_err(fail)?;
        store(out, boxed(m))
    })
}

/// # Safety
/// `m` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn em_matroid_free(m: *mut EmMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of elements; 0 for a null handle.
///
/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn em_matroid_size(m: *const EmMatroid) -> usize {
    m.as_ref().map_or(0, |h| h.inner.size())
}

/// Rank of the ground set; 0 for a null handle.
///
/// # Safety
/// `m` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn em_matroid_rank(m: *const EmMatroid) -> usize {
    m.as_ref().map_or(0, |h| h.inner.full_rank())
}

/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn em_is_3_connected(m: *const EmMatroid, out: *mut bool) -> EmStatus {
    guard(|| store(out, connectivity::is_3_connected(matroid(m)?)))
}

/// Elastic elements as a bit mask (bit `i` set for element `i`).
///
/// # Safety
/// `m` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn em_elastic_elements(m: *const EmMatroid, out: *mut u32) -> EmStatus {
    guard(|| store(out, elastic_elements(matroid(m)?).0))
}

/// `N`-elastic elements of `m` as a bit mask.
///
/// # Safety
/// `m` and `n` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn em_n_elastic_elements(m: *const EmMatroid, n: *const EmMatroid, out: *mut u32) -> EmStatus {
    guard(|| store(out, n_elastic_elements(matroid(m)?, matroid(n)?).0))
}

/// Runs a check (or `all`) over a catalog specification and writes the JSON
/// reports to `out_json` and whether every check passed to `passed`. A
/// `max_n` of 0 means no limit. Free the JSON with [`em_string_free`].
///
/// # Safety
/// `check` and `catalog` are NUL-terminated strings; `out_json` and `passed` are writable.
#[no_mangle]
pub unsafe extern "C" fn em_verify(
    check: *const c_char,
    catalog: *const c_char,
    max_n: usize,
    out_json: *mut *mut c_char,
    passed: *mut bool,
) -> EmStatus {
    guard(|| {
        if out_json.is_null() || passed.is_null() {
            return Err(null_out());
        }
        let checks = select_checks(text(check)?).map_err(fail)?;
        let entries = resolve_catalog(text(catalog)?, (max_n > 0).then_some(max_n)).map_err(fail)?;
        let reports = verify(&checks, &entries, &VerifyOptions::default()).map_err(fail)?;
        let json = CString::new(to_json(&reports)).map_err(|_| (EmStatus::Panic, "report contains NUL".into()))?;
        store(passed, reports.iter().all(|r| r.passed()))?;
        store(out_json, json.into_raw())
    })
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn em_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn em_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
