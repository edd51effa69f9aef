//! C ABI over the `cubefactor` engine.
//!
//! Objects cross the boundary as opaque handles (`CfPolynomial`, `CfGraph`,
//! `CfFactor`) that the caller frees with the matching `*_free` function.
//! Every fallible call returns a [`CfStatus`]; on anything but `CF_STATUS_OK`
//! the message is available from [`cf_last_error_message`] on the same
//! thread. Strings handed out by the library are NUL-terminated and must be
//! released with [`cf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cubefactor::graphs::{self, ExportFormat, LabeledGraph};
use cubefactor::polynomials::{qpoly, CubeFactorPolynomial, Method};
use cubefactor::sequences::NamedSequence;
use cubefactor::solver::{self, verify_factor, CubeFactor, SolveMethod};
use cubefactor::{Error, Family};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    InvalidFactor = 4,
    Parse = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfFamily {
    Gamma = 0,
    Omega = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfPolyMethod {
    Recurrence = 0,
    Closed = 1,
    GeneratingFunction = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfSolveMethod {
    Exact = 0,
    Greedy = 1,
    Structural = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfExportFormat {
    Dot = 0,
    EdgeList = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfSequence {
    Fibonacci = 0,
    Lucas = 1,
    Padovan = 2,
}

/// Opaque polynomial handle.
pub struct CfPolynomial(CubeFactorPolynomial);

/// Opaque graph handle.
pub struct CfGraph(LabeledGraph);

/// Opaque factor handle. Vertex ids refer to the graph it was made from.
pub struct CfFactor(CubeFactor);

impl From<CfFamily> for Family {
    fn from(f: CfFamily) -> Family {
        match f {
            CfFamily::Gamma => Family::Gamma,
            CfFamily::Omega => Family::Omega,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: CfStatus, message: impl Into<String>) -> CfStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> CfStatus {
    match e {
        Error::CapExceeded { .. } => CfStatus::CapExceeded,
        Error::UnknownLabel(_) | Error::Json(_) | Error::FactorFormat(_) => CfStatus::Parse,
        _ => CfStatus::InvalidArgument,
    }
}

/// Runs `body`, turning panics into `CF_STATUS_INTERNAL`.
fn guarded(body: impl FnOnce() -> CfStatus) -> CfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => {
            if status == CfStatus::Ok {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            status
        }
        Err(_) => fail(CfStatus::Internal, "internal panic"),
    }
}

fn into_c_string(s: String, out: *mut *mut c_char) -> CfStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null before calling.
            unsafe { *out = c.into_raw() };
            CfStatus::Ok
        }
        Err(_) => fail(CfStatus::Internal, "string contains an interior NUL"),
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(CfStatus::NullPointer, concat!("`", stringify!($p), "` is null"));
        })+
    };
}

/// Message for the last failed call on this thread, or null if the last
/// call succeeded. Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Term `n` of a sequence as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn cf_sequence_term(seq: CfSequence, n: usize, out: *mut *mut c_char) -> CfStatus {
    guarded(|| {
        non_null!(out);
        let seq = match seq {
            CfSequence::Fibonacci => NamedSequence::Fibonacci,
            CfSequence::Lucas => NamedSequence::Lucas,
            CfSequence::Padovan => NamedSequence::Padovan,
        };
        let term = seq.terms(n + 1).pop().expect("n + 1 terms");
        into_c_string(term.to_string(), out)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn cf_polynomial_new(
    family: CfFamily,
    n: usize,
    method: CfPolyMethod,
    out: *mut *mut CfPolynomial,
) -> CfStatus {
    guarded(|| {
        non_null!(out);
        let method = match method {
            CfPolyMethod::Recurrence => Method::Recurrence,
            CfPolyMethod::Closed => Method::Closed,
            CfPolyMethod::GeneratingFunction => Method::GeneratingFunction,
        };
        let p = qpoly(family.into(), n, method);
        *out = Box::into_raw(Box::new(CfPolynomial(p)));
        CfStatus::Ok
    })
}

/// # Safety
/// `p` must be null or a handle from [`cf_polynomial_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cf_polynomial_free(p: *mut CfPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live polynomial handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_polynomial_degree(p: *const CfPolynomial, out: *mut usize) -> CfStatus {
    guarded(|| {
        non_null!(p, out);
        *out = (*p).0.degree();
        CfStatus::Ok
    })
}

/// Coefficient `k` as a decimal string (zero past the degree).
///
/// # Safety
/// `p` must be a live polynomial handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_polynomial_coeff(p: *const CfPolynomial, k: usize, out: *mut *mut c_char) -> CfStatus {
    guarded(|| {
        non_null!(p, out);
        into_c_string((*p).0.coeff(k).to_string(), out)
    })
}

/// Coefficient `k` as `uint64_t`; `CF_STATUS_INVALID_ARGUMENT` if it does
/// not fit.
///
/// # Safety
/// `p` must be a live polynomial handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_polynomial_coeff_u64(p: *const CfPolynomial, k: usize, out: *mut u64) -> CfStatus {
    guarded(|| {
        non_null!(p, out);
        match u64::try_from(&(*p).0.coeff(k)) {
            Ok(v) => {
                *out = v;
                CfStatus::Ok
            }
            Err(_) => fail(CfStatus::InvalidArgument, format!("coefficient {k} exceeds 64 bits")),
        }
    })
}

/// `{"family": .., "n": .., "coeffs": [decimal strings]}`.
///
/// # Safety
/// `p` must be a live polynomial handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_polynomial_to_json(p: *const CfPolynomial, out: *mut *mut c_char) -> CfStatus {
    guarded(|| {
        non_null!(p, out);
        into_c_string((*p).0.to_json(), out)
    })
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_new(family: CfFamily, n: usize, out: *mut *mut CfGraph) -> CfStatus {
    guarded(|| {
        non_null!(out);
        match graphs::build(family.into(), n) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(CfGraph(g)));
                CfStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be null or a handle from [`cf_graph_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_free(g: *mut CfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_vertex_count(g: *const CfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_edge_count(g: *const CfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Label of vertex `v`.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_label(g: *const CfGraph, v: usize, out: *mut *mut c_char) -> CfStatus {
    guarded(|| {
        non_null!(g, out);
        let g = &(*g).0;
        if v >= g.vertex_count() {
            return fail(CfStatus::InvalidArgument, format!("vertex {v} out of range"));
        }
        into_c_string(g.label(v).to_string(), out)
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_graph_export(g: *const CfGraph, format: CfExportFormat, out: *mut *mut c_char) -> CfStatus {
    guarded(|| {
        non_null!(g, out);
        let format = match format {
            CfExportFormat::Dot => ExportFormat::Dot,
            CfExportFormat::EdgeList => ExportFormat::EdgeList,
        };
        into_c_string((*g).0.export(format), out)
    })
}

/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_solve(
    g: *const CfGraph,
    method: CfSolveMethod,
    out: *mut *mut CfFactor,
) -> CfStatus {
    guarded(|| {
        non_null!(g, out);
        let method = match method {
            CfSolveMethod::Exact => SolveMethod::Exact,
            CfSolveMethod::Greedy => SolveMethod::Greedy,
            CfSolveMethod::Structural => SolveMethod::Structural,
        };
        match solver::solve(&(*g).0, method) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(CfFactor(f)));
                CfStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// Reads a factor of `g` from `[{"k": .., "vertices": [labels]}]` JSON.
/// The factor is not verified; see [`cf_factor_verify`].
///
/// # Safety
/// `g` must be a live graph handle, `json` a NUL-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_from_json(
    g: *const CfGraph,
    json: *const c_char,
    out: *mut *mut CfFactor,
) -> CfStatus {
    guarded(|| {
        non_null!(g, json, out);
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            return fail(CfStatus::Parse, "factor JSON is not UTF-8");
        };
        match CubeFactor::from_json(&(*g).0, text) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(CfFactor(f)));
                CfStatus::Ok
            }
            Err(e) => fail(status_of(&e), e.to_string()),
        }
    })
}

/// # Safety
/// `f` must be null or a factor handle, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_free(f: *mut CfFactor) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of parts, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live factor handle.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_part_count(f: *const CfFactor) -> usize {
    f.as_ref().map_or(0, |f| f.0.len())
}

/// Writes part counts by dimension into `buf` (up to `len` entries) and the
/// full profile length into `out_len`. Pass `len = 0` to query the length.
///
/// # Safety
/// `f` must be a live factor handle, `out_len` writable, and `buf` valid for
/// `len` writes when `len > 0`.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_profile(
    f: *const CfFactor,
    buf: *mut u64,
    len: usize,
    out_len: *mut usize,
) -> CfStatus {
    guarded(|| {
        non_null!(f, out_len);
        let counts = (*f).0.profile().counts;
        *out_len = counts.len();
        if len > 0 {
            non_null!(buf);
            let n = len.min(counts.len());
            std::slice::from_raw_parts_mut(buf, n).copy_from_slice(&counts[..n]);
        }
        CfStatus::Ok
    })
}

/// Checks that `f` is a cube factor of `g`: `CF_STATUS_OK`, or
/// `CF_STATUS_INVALID_FACTOR` with the first violation as the message.
///
/// # Safety
/// `g` and `f` must be live handles.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_verify(g: *const CfGraph, f: *const CfFactor) -> CfStatus {
    guarded(|| {
        non_null!(g, f);
        match verify_factor(&(*g).0, &(*f).0) {
            Ok(_) => CfStatus::Ok,
            Err(v) => fail(CfStatus::InvalidFactor, v.to_string()),
        }
    })
}

/// # Safety
/// `g` and `f` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cf_factor_to_json(g: *const CfGraph, f: *const CfFactor, out: *mut *mut c_char) -> CfStatus {
    guarded(|| {
        non_null!(g, f, out);
        let (g, f) = (&(*g).0, &(*f).0);
        if f.parts.iter().flat_map(|p| &p.vertices).any(|&v| v >= g.vertex_count()) {
            return fail(CfStatus::InvalidArgument, "factor does not belong to this graph");
        }
        into_c_string(f.to_json(g), out)
    })
}
