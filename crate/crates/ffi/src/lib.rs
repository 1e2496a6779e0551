//! C ABI for the `outerplanar` library.
//!
//! Every function returns an [`OpStatus`]; results come back through out-pointers.
//! Strings handed out by the library are NUL-terminated UTF-8 and must be released
//! with [`op_string_free`]. Decomposition handles are released with
//! [`op_decomposition_free`]. On failure, [`op_last_error_message`] describes the
//! most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::slice;

use outerplanar::charring::{catalan, multiplicity};
use outerplanar::decomp::{self, DecompositionReport};
use outerplanar::opgraph::{count_graphs, OuterplanarGraph};
use outerplanar::tensorspace::{build_t_g, build_t_g_i};
use outerplanar::{Degrees, Error};

/// Status codes returned by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeGuard = 3,
    Overflow = 4,
    Utf8 = 5,
    Panic = 6,
}

/// Opaque handle to a computed decomposition.
pub struct OpDecomposition {
    report: DecompositionReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: OpStatus, msg: &str) -> OpStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> OpStatus {
    let status = match e {
        Error::SizeGuard { .. } => OpStatus::SizeGuard,
        _ => OpStatus::InvalidArgument,
    };
    fail(status, &e.to_string())
}

fn guard(f: impl FnOnce() -> OpStatus) -> OpStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == OpStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => fail(OpStatus::Panic, "internal panic"),
    }
}

unsafe fn read_degrees(ptr: *const u32, len: usize) -> Result<Degrees, OpStatus> {
    if len == 0 {
        return Err(from_error(Error::EmptyDegrees));
    }
    if ptr.is_null() {
        return Err(fail(OpStatus::NullPointer, "degrees is null"));
    }
    Degrees::new(slice::from_raw_parts(ptr, len).to_vec()).map_err(from_error)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> OpStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            OpStatus::Ok
        }
        Err(_) => fail(OpStatus::Utf8, "string contains NUL"),
    }
}

unsafe fn handle<'a>(h: *const OpDecomposition) -> Result<&'a OpDecomposition, OpStatus> {
    h.as_ref()
        .ok_or_else(|| fail(OpStatus::NullPointer, "decomposition handle is null"))
}

macro_rules! check_out {
    ($($p:ident),*) => {
        $(if $p.is_null() {
            return fail(OpStatus::NullPointer, concat!(stringify!($p), " is null"));
        })*
    };
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message for the last failure on this thread; empty after a success.
/// The pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn op_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn op_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Catalan number c_n as a `u64`; fails with `Overflow` when it does not fit.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_catalan(n: u64, out: *mut u64) -> OpStatus {
    check_out!(out);
    guard(|| match u64::try_from(catalan(n)) {
        Ok(v) => {
            *out = v;
            OpStatus::Ok
        }
        Err(_) => fail(OpStatus::Overflow, "catalan number exceeds 64 bits"),
    })
}

/// Multiplicity of rho_k in the tensor product, as a decimal string.
///
/// # Safety
/// `degrees` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_multiplicity(
    degrees: *const u32,
    len: usize,
    k: u64,
    out: *mut *mut c_char,
) -> OpStatus {
    check_out!(out);
    guard(|| {
        let d = tri!(read_degrees(degrees, len));
        write_string(out, multiplicity(&d, k).to_string())
    })
}

/// Number of noncrossing graphs with the given degrees, as a decimal string.
/// With `rooted`, the first degree belongs to the root vertex.
///
/// # Safety
/// `degrees` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_count_graphs(
    degrees: *const u32,
    len: usize,
    rooted: bool,
    out: *mut *mut c_char,
) -> OpStatus {
    check_out!(out);
    guard(|| {
        let d = tri!(read_degrees(degrees, len));
        write_string(out, count_graphs(d.as_slice(), rooted).to_string())
    })
}

/// Tensor JSON of t_G, or t_{G,i} when `rooted`. `arcs` holds `arc_count` triples
/// (from, to, multiplicity) of vertex labels; the root is label 0.
///
/// # Safety
/// `arcs` must point to `3 * arc_count` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_graph_tensor_json(
    vertices: usize,
    arcs: *const u32,
    arc_count: usize,
    rooted: bool,
    i: u32,
    out: *mut *mut c_char,
) -> OpStatus {
    check_out!(out);
    if arc_count > 0 && arcs.is_null() {
        return fail(OpStatus::NullPointer, "arcs is null");
    }
    guard(|| {
        let raw = if arc_count == 0 {
            &[][..]
        } else {
            slice::from_raw_parts(arcs, 3 * arc_count)
        };
        let triples: Vec<(usize, usize, u32)> = raw
            .chunks_exact(3)
            .map(|c| (c[0] as usize, c[1] as usize, c[2]))
            .collect();
        let g = tri!(OuterplanarGraph::from_labels(rooted, vertices, triples).map_err(from_error));
        let t = if rooted {
            build_t_g_i(&g, i)
        } else {
            build_t_g(&g)
        };
        let t = tri!(t.map_err(from_error));
        write_string(out, t.to_json())
    })
}

/// Decomposes and verifies the tensor product with the given degrees.
///
/// # Safety
/// `degrees` must point to `len` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decompose(
    degrees: *const u32,
    len: usize,
    out: *mut *mut OpDecomposition,
) -> OpStatus {
    check_out!(out);
    guard(|| {
        let d = tri!(read_degrees(degrees, len));
        let report = tri!(decomp::decompose(&d).map_err(from_error));
        *out = Box::into_raw(Box::new(OpDecomposition { report }));
        OpStatus::Ok
    })
}

/// Parses a report previously produced by [`op_decomposition_to_json`].
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_from_json(
    json: *const c_char,
    out: *mut *mut OpDecomposition,
) -> OpStatus {
    check_out!(json, out);
    guard(|| {
        let s = match CStr::from_ptr(json).to_str() {
            Ok(s) => s,
            Err(_) => return fail(OpStatus::Utf8, "json is not UTF-8"),
        };
        let report = tri!(DecompositionReport::from_json(s).map_err(from_error));
        *out = Box::into_raw(Box::new(OpDecomposition { report }));
        OpStatus::Ok
    })
}

/// Releases a decomposition handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_free(h: *mut OpDecomposition) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of isotypic components.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_component_count(
    h: *const OpDecomposition,
    out: *mut usize,
) -> OpStatus {
    check_out!(out);
    let h = tri!(handle(h));
    guard(|| {
        *out = h.report.components.len();
        OpStatus::Ok
    })
}

/// Highest weight d0 and multiplicity of component `index` (largest d0 first).
///
/// # Safety
/// `h` must be a live handle; `d0` and `multiplicity` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_component(
    h: *const OpDecomposition,
    index: usize,
    d0: *mut u32,
    multiplicity: *mut usize,
) -> OpStatus {
    check_out!(d0, multiplicity);
    let h = tri!(handle(h));
    guard(|| match h.report.components.get(index) {
        Some(c) => {
            *d0 = c.d0;
            *multiplicity = c.graphs.len();
            OpStatus::Ok
        }
        None => fail(OpStatus::InvalidArgument, "component index out of range"),
    })
}

/// Whether every verification flag passed; false when the report was not verified.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_verified(
    h: *const OpDecomposition,
    out: *mut bool,
) -> OpStatus {
    check_out!(out);
    let h = tri!(handle(h));
    guard(|| {
        *out = h.report.verification.is_some_and(|v| v.all());
        OpStatus::Ok
    })
}

/// One-line summary such as `ρ2 ⊕ ρ0, dim 4 = 4`.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_summary(
    h: *const OpDecomposition,
    out: *mut *mut c_char,
) -> OpStatus {
    check_out!(out);
    let h = tri!(handle(h));
    guard(|| write_string(out, h.report.summary()))
}

/// Canonical JSON form of the report.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn op_decomposition_to_json(
    h: *const OpDecomposition,
    out: *mut *mut c_char,
) -> OpStatus {
    check_out!(out);
    let h = tri!(handle(h));
    guard(|| write_string(out, h.report.to_json()))
}
