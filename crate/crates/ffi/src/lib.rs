//! C interface to `raag-out`.
//!
//! Graphs cross the boundary as opaque `RaagGraph` handles. Every fallible
//! call returns a `RaagStatus`; on anything other than `RAAG_STATUS_OK` the
//! message is available from `raag_last_error` on the same thread. Strings
//! returned through `char **` out-parameters are owned by the caller and must
//! be released with `raag_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use raag_out::analysis::analyze;
use raag_out::construct::{appendix_graph, build_for, Target};
use raag_out::format::{parse_edge_list, write_edge_list};
use raag_out::symmetry::{automorphism_group, canonical_form};
use raag_out::verify::verify_construction;
use raag_out::{parse_graph6, write_graph6, Graph};

/// Opaque graph handle.
pub struct RaagGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RaagStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    /// The call completed but a verification verdict failed.
    VerificationFailed = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RaagTarget {
    Gamma = 0,
    GammaPrime = 1,
}

impl From<RaagTarget> for Target {
    fn from(t: RaagTarget) -> Self {
        match t {
            RaagTarget::Gamma => Target::Gamma,
            RaagTarget::GammaPrime => Target::GammaPrime,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(RaagStatus, String);

impl From<raag_out::Error> for Fail {
    fn from(e: raag_out::Error) -> Self {
        let status = match e {
            raag_out::Error::Graph6(_) | raag_out::Error::EdgeList { .. } => RaagStatus::ParseError,
            _ => RaagStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn run(f: impl FnOnce() -> Result<(), Fail>) -> RaagStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RaagStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RaagStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(RaagStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(RaagStatus::InvalidUtf8, e.to_string()))
}

unsafe fn graph<'a>(g: *const RaagGraph) -> Result<&'a Graph, Fail> {
    g.as_ref()
        .map(|g| &g.inner)
        .ok_or_else(|| Fail(RaagStatus::NullPointer, "null graph handle".into()))
}

unsafe fn put_graph(out: *mut *mut RaagGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(RaagStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(RaagGraph { inner: g }));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(RaagStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|e| Fail(RaagStatus::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn json(value: &impl serde::Serialize) -> Result<String, Fail> {
    serde_json::to_string(value).map_err(|e| Fail(RaagStatus::Panic, e.to_string()))
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut RaagGraph,
) -> RaagStatus {
    run(|| put_graph(out, parse_graph6(read_str(text)?)?))
}

/// Parses an edge list: vertex labels on the first line, one `u v` pair per
/// following line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut RaagGraph,
) -> RaagStatus {
    run(|| put_graph(out, parse_edge_list(read_str(text)?)?))
}

/// One of the fixed graphs for Λ with one or two vertices (`which` in 1..=3).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_appendix(which: u8, out: *mut *mut RaagGraph) -> RaagStatus {
    run(|| put_graph(out, appendix_graph(which)?))
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_free(g: *mut RaagGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_order(g: *const RaagGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_size(g: *const RaagGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.size())
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_to_graph6(
    g: *const RaagGraph,
    out: *mut *mut c_char,
) -> RaagStatus {
    run(|| put_string(out, write_graph6(graph(g)?)))
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_graph_to_edge_list(
    g: *const RaagGraph,
    out: *mut *mut c_char,
) -> RaagStatus {
    run(|| put_string(out, write_edge_list(graph(g)?)))
}

/// Builds the graph realizing A_Λ (the appendix graphs for fewer than three
/// vertices).
///
/// # Safety
/// `lambda` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_build(
    lambda: *const RaagGraph,
    target: RaagTarget,
    out: *mut *mut RaagGraph,
) -> RaagStatus {
    run(|| {
        let (g, _) = build_for(graph(lambda)?, target.into())?;
        put_graph(out, g)
    })
}

/// Full analysis report as JSON.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_analyze_json(
    g: *const RaagGraph,
    out: *mut *mut c_char,
) -> RaagStatus {
    run(|| put_string(out, json(&analyze(graph(g)?)?)?))
}

/// Builds and verifies the construction for Λ. The JSON result is written
/// even when a verdict fails, in which case the status is
/// `RAAG_STATUS_VERIFICATION_FAILED`.
///
/// # Safety
/// `lambda` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_verify_json(
    lambda: *const RaagGraph,
    target: RaagTarget,
    out: *mut *mut c_char,
) -> RaagStatus {
    run(|| {
        let lambda = graph(lambda)?;
        let (gamma, kind) = build_for(lambda, target.into())?;
        let mut r = verify_construction(lambda, &gamma, kind.claims_rigid());
        r.kind = Some(kind);
        put_string(out, json(&r)?)?;
        if r.passed() {
            Ok(())
        } else {
            Err(Fail(
                RaagStatus::VerificationFailed,
                "verification verdict failed".into(),
            ))
        }
    })
}

/// graph6 of the canonical relabeling.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_canonical_form(
    g: *const RaagGraph,
    out: *mut *mut c_char,
) -> RaagStatus {
    run(|| put_string(out, canonical_form(graph(g)?)))
}

/// Order of the automorphism group as a decimal string.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn raag_aut_order(g: *const RaagGraph, out: *mut *mut c_char) -> RaagStatus {
    run(|| put_string(out, automorphism_group(graph(g)?).order.to_string()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn raag_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn raag_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}
