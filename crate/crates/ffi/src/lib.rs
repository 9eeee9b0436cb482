//! C ABI over the `crossings` library.
//!
//! Permutations and polynomials cross the boundary as opaque handles that
//! the caller releases with the matching `_free` function. Every fallible
//! call returns a [`CrossingsStatus`]; the message for the most recent
//! failure on the calling thread is available from
//! [`crossings_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use crossings::enumerate::crs_distribution;
use crossings::poly::QPoly;
use crossings::stats::{crs, des, exc, fp, inv, maj, nes};
use crossings::{theta, Error, PatternSet, Permutation};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    /// e.g. theta applied to a permutation containing 321
    Domain = 3,
    OutOfRange = 4,
    /// a coefficient does not fit in 64 bits
    Overflow = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

/// Opaque permutation handle.
pub struct CrossingsPermutation(Permutation);

/// Opaque polynomial in `q` with integer coefficients.
pub struct CrossingsPoly(QPoly);

/// The classic statistics of one permutation.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CrossingsStats {
    pub crs: u32,
    pub nes: u32,
    pub inv: u32,
    pub exc: u32,
    pub fp: u32,
    pub des: u32,
    pub maj: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CrossingsStatus {
    match e {
        Error::InvalidInput(_) | Error::UnknownSuite(_) => CrossingsStatus::InvalidInput,
        Error::OutOfRange { .. } => CrossingsStatus::OutOfRange,
        _ => CrossingsStatus::Domain,
    }
}

/// Runs `f`, recording any error or panic for `crossings_last_error`.
fn guard(f: impl FnOnce() -> Result<(), (CrossingsStatus, String)>) -> CrossingsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            CrossingsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CrossingsStatus::Internal
        }
    }
}

fn lib(e: Error) -> (CrossingsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CrossingsStatus, String) {
    (CrossingsStatus::NullPointer, format!("{what} is null"))
}

unsafe fn perm_ref<'a>(p: *const CrossingsPermutation) -> Result<&'a Permutation, (CrossingsStatus, String)> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null("permutation"))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (CrossingsStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (CrossingsStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> Result<(), (CrossingsStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// Builds a permutation from `len` values, which must be `1..=len` in some
/// order.
///
/// # Safety
/// `values` must point to `len` readable `uint32_t` (or be null when `len`
/// is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_perm_new(
    values: *const u32,
    len: usize,
    out: *mut *mut CrossingsPermutation,
) -> CrossingsStatus {
    guard(|| {
        let v = if len == 0 {
            Vec::new()
        } else if values.is_null() {
            return Err(null("values"));
        } else {
            std::slice::from_raw_parts(values, len).to_vec()
        };
        let p = Permutation::new(v).map_err(lib)?;
        emit(out, CrossingsPermutation(p))
    })
}

/// Parses one-line notation such as `"4735126"` or `"4,7,3,5,1,2,6"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_perm_parse(
    text: *const c_char,
    out: *mut *mut CrossingsPermutation,
) -> CrossingsStatus {
    guard(|| {
        let s = c_str(text, "text")?;
        let p: Permutation = s.parse().map_err(lib)?;
        emit(out, CrossingsPermutation(p))
    })
}

/// Releases a permutation. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn crossings_perm_free(p: *mut CrossingsPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Length of the permutation, 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crossings_perm_len(p: *const CrossingsPermutation) -> usize {
    p.as_ref().map_or(0, |h| h.0.len())
}

/// Copies the one-line notation into `buf`, which must hold
/// `crossings_perm_len(p)` values.
///
/// # Safety
/// `p` must be a live handle and `buf` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn crossings_perm_values(
    p: *const CrossingsPermutation,
    buf: *mut u32,
    cap: usize,
) -> CrossingsStatus {
    guard(|| {
        let p = perm_ref(p)?;
        if cap < p.len() {
            return Err((
                CrossingsStatus::BufferTooSmall,
                format!("need {} values, have room for {cap}", p.len()),
            ));
        }
        if p.is_empty() {
            return Ok(());
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        std::slice::from_raw_parts_mut(buf, p.len()).copy_from_slice(p.as_slice());
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_perm_stats(
    p: *const CrossingsPermutation,
    out: *mut CrossingsStats,
) -> CrossingsStatus {
    guard(|| {
        let s = perm_ref(p)?.as_slice();
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = CrossingsStats {
            crs: crs(s),
            nes: nes(s),
            inv: inv(s),
            exc: exc(s),
            fp: fp(s),
            des: des(s),
            maj: maj(s),
        };
        Ok(())
    })
}

unsafe fn map_perm(
    p: *const CrossingsPermutation,
    out: *mut *mut CrossingsPermutation,
    f: fn(&[u32]) -> crossings::Result<Permutation>,
) -> CrossingsStatus {
    guard(|| {
        let img = f(perm_ref(p)?.as_slice()).map_err(lib)?;
        emit(out, CrossingsPermutation(img))
    })
}

/// The crossing-preserving bijection from 321-avoiders to 132-avoiders.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_theta(
    p: *const CrossingsPermutation,
    out: *mut *mut CrossingsPermutation,
) -> CrossingsStatus {
    map_perm(p, out, theta::theta)
}

/// Inverse of [`crossings_theta`]; the input must avoid 132.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_theta_inverse(
    p: *const CrossingsPermutation,
    out: *mut *mut CrossingsPermutation,
) -> CrossingsStatus {
    map_perm(p, out, theta::theta_inverse)
}

/// Theta after reverse-complement-inverse; keeps fixed points, excedances
/// and crossings.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_gamma(
    p: *const CrossingsPermutation,
    out: *mut *mut CrossingsPermutation,
) -> CrossingsStatus {
    map_perm(p, out, theta::gamma)
}

/// Sum of `q^crs` over the permutations of length `n` avoiding every
/// pattern in the comma-separated list `patterns` (empty for none).
///
/// # Safety
/// `patterns` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_distribution(
    n: usize,
    patterns: *const c_char,
    out: *mut *mut CrossingsPoly,
) -> CrossingsStatus {
    guard(|| {
        let text = c_str(patterns, "patterns")?;
        let set: PatternSet = text.parse().map_err(lib)?;
        emit(out, CrossingsPoly(crs_distribution(n, &set)))
    })
}

/// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crossings_poly_len(p: *const CrossingsPoly) -> usize {
    p.as_ref().map_or(0, |h| h.0.coeffs().len())
}

/// Coefficient of `q^e`; zero past the degree.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crossings_poly_coeff(
    p: *const CrossingsPoly,
    e: usize,
    out: *mut i64,
) -> CrossingsStatus {
    guard(|| {
        let p = p.as_ref().ok_or_else(|| null("polynomial"))?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = i64::try_from(p.0.coeff(e))
            .map_err(|_| (CrossingsStatus::Overflow, format!("coefficient of q^{e} exceeds 64 bits")))?;
        Ok(())
    })
}

/// Text form such as `"11 + 4*q + q^2"`; release with
/// [`crossings_string_free`].
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crossings_poly_to_string(p: *const CrossingsPoly) -> *mut c_char {
    match p.as_ref() {
        Some(h) => CString::new(h.0.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn crossings_poly_free(p: *mut CrossingsPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn crossings_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, empty after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn crossings_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn crossings_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
