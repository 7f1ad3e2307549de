//! C ABI over `congruence-euler`.
//!
//! Results live behind opaque handles; rationals cross the boundary as
//! `"num/den"` strings or JSON. Every function returns a [`CeStatus`], and the
//! message of the most recent failure on the calling thread is available from
//! [`ce_last_error`]. Strings returned by this library must be released with
//! [`ce_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use congruence_euler::characters::HighestWeight;
use congruence_euler::cli::{audit_document, to_json, Format};
use congruence_euler::eulerchar::{compute, ChiResult, Group};
use congruence_euler::torsion::{enumerate_classes, MAX_RANK};
use congruence_euler::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Consistency = 3,
    Internal = 4,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CeGroup {
    Gl = 0,
    Sl = 1,
    Gamma1 = 2,
    Gamma1Sl = 3,
}

impl From<CeGroup> for Group {
    fn from(g: CeGroup) -> Group {
        match g {
            CeGroup::Gl => Group::GL,
            CeGroup::Sl => Group::SL,
            CeGroup::Gamma1 => Group::Gamma1,
            CeGroup::Gamma1Sl => Group::Gamma1SL,
        }
    }
}

/// Opaque result of one Euler characteristic computation.
pub struct CeChiResult {
    inner: ChiResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(err: &Error) -> CeStatus {
    set_error(err.to_string());
    match err {
        Error::Consistency(_) => CeStatus::Consistency,
        _ => CeStatus::InvalidInput,
    }
}

fn null(what: &str) -> CeStatus {
    set_error(format!("{what} is null"));
    CeStatus::NullPointer
}

fn guard(f: impl FnOnce() -> CeStatus) -> CeStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        CeStatus::Internal
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Fills `*out` with a new string, or reports why it could not.
///
/// # Safety
/// `out` must be valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> CeStatus {
    let raw = into_c_string(s);
    if raw.is_null() {
        set_error("string contains an interior nul byte");
        return CeStatus::Internal;
    }
    *out = raw;
    CeStatus::Ok
}

/// Computes `χ_h(group_m, V_weight)`. Pass `p = 0` for the groups that take no prime.
/// On success `*out` owns a handle to release with [`ce_chi_result_free`].
///
/// # Safety
/// `weight` must point to `weight_len` readable `int64_t` values and `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ce_chi_compute(
    group: CeGroup,
    m: usize,
    p: u64,
    weight: *const i64,
    weight_len: usize,
    out: *mut *mut CeChiResult,
) -> CeStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if weight.is_null() && weight_len > 0 {
            return null("weight");
        }
        let parts = if weight_len == 0 { Vec::new() } else { std::slice::from_raw_parts(weight, weight_len).to_vec() };
        let result = HighestWeight::new(parts).and_then(|w| compute(group.into(), m, (p != 0).then_some(p), &w));
        match result {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(CeChiResult { inner }));
                CeStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `handle` must be null or a handle from [`ce_chi_compute`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ce_chi_result_free(handle: *mut CeChiResult) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// The Euler characteristic as `"num/den"`, or a bare integer when `den = 1`.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ce_chi_result_value(handle: *const CeChiResult, out: *mut *mut c_char) -> CeStatus {
    guard(|| match (handle.as_ref(), out.is_null()) {
        (None, _) => null("handle"),
        (_, true) => null("out"),
        (Some(h), false) => write_string(out, h.inner.chi.to_string()),
    })
}

/// The full result, breakdown included, as JSON.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ce_chi_result_json(handle: *const CeChiResult, out: *mut *mut c_char) -> CeStatus {
    guard(|| match (handle.as_ref(), out.is_null()) {
        (None, _) => null("handle"),
        (_, true) => null("out"),
        (Some(h), false) => match to_json(&h.inner) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(&e),
        },
    })
}

/// Number of torsion classes contributing to the result.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ce_chi_result_breakdown_len(handle: *const CeChiResult, out: *mut usize) -> CeStatus {
    guard(|| match (handle.as_ref(), out.is_null()) {
        (None, _) => null("handle"),
        (_, true) => null("out"),
        (Some(h), false) => {
            *out = h.inner.breakdown.len();
            CeStatus::Ok
        }
    })
}

/// Number of torsion classes of `GL_m(ℤ)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ce_class_count(m: usize, out: *mut usize) -> CeStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if m == 0 {
            return fail(&Error::RankTooSmall { min: 1, got: 0 });
        }
        *out = if m > MAX_RANK { 0 } else { enumerate_classes(m).len() };
        CeStatus::Ok
    })
}

/// The audit report over `primes` and the given weight bound, as JSON.
///
/// # Safety
/// `primes` must point to `primes_len` readable values and `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn ce_audit_json(
    primes: *const u64,
    primes_len: usize,
    bound: u64,
    out: *mut *mut c_char,
) -> CeStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if primes.is_null() {
            return null("primes");
        }
        let ps = std::slice::from_raw_parts(primes, primes_len);
        match audit_document(ps, bound, true, Format::Json) {
            Ok(s) => write_string(out, s),
            Err(e) => fail(&e),
        }
    })
}

/// Copy of the last error message on this thread, or null if there was none.
#[no_mangle]
pub extern "C" fn ce_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ce_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
