//! C interface to `farey-gaps`.
//!
//! Every fallible call returns an [`FgStatus`] and writes its result through an out-pointer.
//! Handles are opaque and must be released with the matching `*_free`. Strings returned to the
//! caller are NUL-terminated and owned by the caller until passed to [`fg_string_free`].

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use farey_gaps::continuants::{continuant, TupleSpec};
use farey_gaps::empirical::{scan, GapHistogram, ScanConfig};
use farey_gaps::farey_triangle::{region, ConvexRegion};
use farey_gaps::proportions::{
    nu_bounded, nu_closed_form, nu_from_enumeration, numeric_eval, NuValue, SymbolicValue,
};
use farey_gaps::ratio_string;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Unsupported = 4,
    OutOfRange = 5,
    Panic = 6,
}

/// The Farey-triangle region of one index tuple.
pub struct FgRegion {
    tuple: TupleSpec,
    region: ConvexRegion,
}

/// An exact proportion, or an enclosing interval from the bounded route.
pub struct FgNu {
    value: NuValue,
}

pub struct FgHistogram {
    hist: GapHistogram,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgRoute {
    Enumeration = 0,
    ClosedForm = 1,
}

fn guard(f: impl FnOnce() -> FgStatus) -> FgStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(FgStatus::Panic)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, FgStatus> {
    if s.is_null() {
        return Err(FgStatus::NullPointer);
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| FgStatus::InvalidUtf8)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FgStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            FgStatus::Ok
        }
        Err(_) => FgStatus::InvalidArgument,
    }
}

unsafe fn parse_tuple(s: *const c_char) -> Result<TupleSpec, FgStatus> {
    read_str(s)?.parse().map_err(|_| FgStatus::InvalidArgument)
}

/// Static description of an `FgStatus` value. Never free the result.
#[no_mangle]
pub extern "C" fn fg_status_message(status: c_int) -> *const c_char {
    let s: &'static [u8] = match status {
        0 => b"ok\0",
        1 => b"null pointer argument\0",
        2 => b"string is not valid UTF-8\0",
        3 => b"invalid argument\0",
        4 => b"no exact route for these parameters\0",
        5 => b"index out of range\0",
        6 => b"internal error\0",
        _ => b"unknown status\0",
    };
    s.as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes the continuant of `tuple` (e.g. `"3,2^4,1,6"`) as a decimal string.
///
/// # Safety
/// `tuple` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_continuant(tuple: *const c_char, out: *mut *mut c_char) -> FgStatus {
    guard(|| {
        if out.is_null() {
            return FgStatus::NullPointer;
        }
        match parse_tuple(tuple) {
            Ok(t) => write_string(out, continuant(&t).to_string()),
            Err(e) => e,
        }
    })
}

/// # Safety
/// `tuple` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_region_new(tuple: *const c_char, out: *mut *mut FgRegion) -> FgStatus {
    guard(|| {
        if out.is_null() {
            return FgStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match parse_tuple(tuple) {
            Ok(t) => {
                let reg = region(&t);
                *out = Box::into_raw(Box::new(FgRegion {
                    tuple: t,
                    region: reg,
                }));
                FgStatus::Ok
            }
            Err(e) => e,
        }
    })
}

/// # Safety
/// `r` must be null or a handle from [`fg_region_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fg_region_free(r: *mut FgRegion) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Area as `"p/q"`.
///
/// # Safety
/// `r` must be a live region handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_region_area(r: *const FgRegion, out: *mut *mut c_char) -> FgStatus {
    guard(|| match (r.as_ref(), out.is_null()) {
        (Some(r), false) => write_string(out, ratio_string(&r.region.area())),
        _ => FgStatus::NullPointer,
    })
}

/// # Safety
/// `r` must be a live region handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_region_is_empty(r: *const FgRegion, out: *mut bool) -> FgStatus {
    match (r.as_ref(), out.as_mut()) {
        (Some(r), Some(o)) => {
            *o = r.region.is_empty();
            FgStatus::Ok
        }
        _ => FgStatus::NullPointer,
    }
}

/// # Safety
/// `r` must be a live region handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_region_vertex_count(r: *const FgRegion, out: *mut usize) -> FgStatus {
    match (r.as_ref(), out.as_mut()) {
        (Some(r), Some(o)) => {
            *o = r.region.vertices().len();
            FgStatus::Ok
        }
        _ => FgStatus::NullPointer,
    }
}

/// Vertex `i` in canonical order, as two `"p/q"` strings.
///
/// # Safety
/// `r` must be a live region handle; `x` and `y` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fg_region_vertex(
    r: *const FgRegion,
    i: usize,
    x: *mut *mut c_char,
    y: *mut *mut c_char,
) -> FgStatus {
    guard(|| {
        let Some(r) = r.as_ref() else {
            return FgStatus::NullPointer;
        };
        if x.is_null() || y.is_null() {
            return FgStatus::NullPointer;
        }
        let Some(p) = r.region.vertices().get(i) else {
            return FgStatus::OutOfRange;
        };
        let st = write_string(x, ratio_string(&p.x));
        if st != FgStatus::Ok {
            return st;
        }
        write_string(y, ratio_string(&p.y))
    })
}

/// Canonical text form of the region's tuple.
///
/// # Safety
/// `r` must be a live region handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_region_tuple(r: *const FgRegion, out: *mut *mut c_char) -> FgStatus {
    guard(|| match (r.as_ref(), out.is_null()) {
        (Some(r), false) => write_string(out, r.tuple.to_string()),
        _ => FgStatus::NullPointer,
    })
}

/// Exact `nu(r; d, c0)`; `route` is an `FgRoute` value. Only `d` in {2, 3} with `c0 = 0` is exact.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_nu_exact(
    r: usize,
    d: u64,
    c0: u64,
    route: c_int,
    out: *mut *mut FgNu,
) -> FgStatus {
    guard(|| {
        if out.is_null() {
            return FgStatus::NullPointer;
        }
        *out = ptr::null_mut();
        if r == 0 {
            return FgStatus::InvalidArgument;
        }
        if !((d == 2 || d == 3) && c0 == 0) {
            return FgStatus::Unsupported;
        }
        let res = match route {
            x if x == FgRoute::Enumeration as c_int => nu_from_enumeration(r, d, c0),
            x if x == FgRoute::ClosedForm as c_int => nu_closed_form(r, d, c0),
            _ => return FgStatus::InvalidArgument,
        };
        match res {
            Ok(v) => {
                *out = Box::into_raw(Box::new(FgNu { value: v.value }));
                FgStatus::Ok
            }
            Err(_) => FgStatus::InvalidArgument,
        }
    })
}

/// Interval for `nu(r; d, c0)` from tuples with entries at most `cutoff`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_nu_bounded(
    r: usize,
    d: u64,
    c0: u64,
    cutoff: u64,
    out: *mut *mut FgNu,
) -> FgStatus {
    guard(|| {
        if out.is_null() {
            return FgStatus::NullPointer;
        }
        *out = ptr::null_mut();
        if r == 0 || cutoff == 0 {
            return FgStatus::InvalidArgument;
        }
        match nu_bounded(r, d, c0, cutoff) {
            Ok(v) => {
                *out = Box::into_raw(Box::new(FgNu { value: v.value }));
                FgStatus::Ok
            }
            Err(_) => FgStatus::InvalidArgument,
        }
    })
}

/// # Safety
/// `v` must be null or a handle from `fg_nu_*`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fg_nu_free(v: *mut FgNu) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Whether the value is exact rather than an interval.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_nu_is_exact(v: *const FgNu, out: *mut bool) -> FgStatus {
    match (v.as_ref(), out.as_mut()) {
        (Some(v), Some(o)) => {
            *o = matches!(v.value, NuValue::Exact(_));
            FgStatus::Ok
        }
        _ => FgStatus::NullPointer,
    }
}

/// Symbolic form such as `"6 - 2*pi/sqrt(3) - 2*ln(3)"`, or `"[lo, hi]"` for an interval.
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_nu_string(v: *const FgNu, out: *mut *mut c_char) -> FgStatus {
    guard(|| match (v.as_ref(), out.is_null()) {
        (Some(v), false) => write_string(
            out,
            match &v.value {
                NuValue::Exact(s) => s.to_string(),
                NuValue::Interval { lower, upper } => {
                    format!("[{}, {}]", ratio_string(lower), ratio_string(upper))
                }
            },
        ),
        _ => FgStatus::NullPointer,
    })
}

/// Decimal rendering rounded to `digits` places (the lower end for an interval).
///
/// # Safety
/// `v` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_nu_decimal(
    v: *const FgNu,
    digits: usize,
    out: *mut *mut c_char,
) -> FgStatus {
    guard(|| match (v.as_ref(), out.is_null()) {
        (Some(v), false) => {
            let s = match &v.value {
                NuValue::Exact(s) => numeric_eval(s, digits),
                NuValue::Interval { lower, .. } => {
                    numeric_eval(&SymbolicValue::from_rational(lower.clone()), digits)
                }
            };
            write_string(out, s)
        }
        _ => FgStatus::NullPointer,
    })
}

/// Scans one period of the Farey sequence of order `q`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_scan(
    q: u64,
    d: u64,
    c0: u64,
    r_max: usize,
    out: *mut *mut FgHistogram,
) -> FgStatus {
    guard(|| {
        if out.is_null() {
            return FgStatus::NullPointer;
        }
        *out = ptr::null_mut();
        match ScanConfig::new(q, d, c0, r_max) {
            Ok(cfg) => {
                *out = Box::into_raw(Box::new(FgHistogram { hist: scan(&cfg) }));
                FgStatus::Ok
            }
            Err(_) => FgStatus::InvalidArgument,
        }
    })
}

/// # Safety
/// `h` must be null or a handle from [`fg_scan`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fg_histogram_free(h: *mut FgHistogram) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of gaps with exactly `r` interior fractions, for `r <= r_max`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_histogram_count(
    h: *const FgHistogram,
    r: usize,
    out: *mut u64,
) -> FgStatus {
    match (h.as_ref(), out.as_mut()) {
        (Some(h), Some(o)) => {
            if r > h.hist.config.r_max {
                return FgStatus::OutOfRange;
            }
            *o = h.hist.count(r);
            FgStatus::Ok
        }
        _ => FgStatus::NullPointer,
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_histogram_overflow(h: *const FgHistogram, out: *mut u64) -> FgStatus {
    match (h.as_ref(), out.as_mut()) {
        (Some(h), Some(o)) => {
            *o = h.hist.overflow;
            FgStatus::Ok
        }
        _ => FgStatus::NullPointer,
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fg_histogram_coloured_total(
    h: *const FgHistogram,
    out: *mut u64,
) -> FgStatus {
    match (h.as_ref(), out.as_mut()) {
        (Some(h), Some(o)) => {
            *o = h.hist.coloured_total;
            FgStatus::Ok
        }
        _ => FgStatus::NullPointer,
    }
}
