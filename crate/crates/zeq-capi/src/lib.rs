//! C bindings for the zeq library: opaque digraph handles, status codes,
//! and NUL-terminated polynomial text.
//!
//! The committed header lives at `include/zeq.h` and is maintained by hand;
//! keep it in step with the signatures here. Every string returned through
//! an out parameter is owned by the caller and must be released with
//! `zeq_string_free`; every digraph handle with `zeq_digraph_free`.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zeq::charpoly::{eta, eta_bar, eta_complete, zeta_equivalent_digraphs, zeta_equivalent_graphs};
use zeq::graph::{parse_digraph, print_digraph};
use zeq::Digraph;

/// Status code returned by every fallible binding.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZeqStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    GraphError = 4,
    Internal = 5,
}

/// Which polynomial `zeq_eta` computes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZeqEtaVariant {
    /// Five-variable digraph polynomial.
    Eta = 0,
    /// Two-variable graph polynomial; the digraph must be symmetric.
    EtaBar = 1,
    /// Completed polynomial with the all-ones perturbation.
    EtaComplete = 2,
}

/// Which equivalence `zeq_equivalent` decides.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZeqMode {
    Digraph = 0,
    Graph = 1,
}

/// Opaque digraph handle.
pub struct ZeqDigraph(Digraph);

static VERSION: &CStr = c"0.1.0";

/// Returns the library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn zeq_version() -> *const c_char {
    VERSION.as_ptr()
}

fn export_string(s: String, out: *mut *mut c_char) -> ZeqStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            ZeqStatus::Ok
        }
        Err(_) => ZeqStatus::Internal,
    }
}

fn guarded(body: impl FnOnce() -> ZeqStatus) -> ZeqStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(ZeqStatus::Internal)
}

/// Parses edge-list text into a new digraph handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to writable space
/// for one pointer.
#[no_mangle]
pub unsafe extern "C" fn zeq_digraph_parse(
    text: *const c_char,
    out: *mut *mut ZeqDigraph,
) -> ZeqStatus {
    if text.is_null() || out.is_null() {
        return ZeqStatus::NullArgument;
    }
    unsafe { *out = ptr::null_mut() };
    let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return ZeqStatus::InvalidUtf8;
    };
    guarded(|| match parse_digraph(text) {
        Ok(g) => {
            unsafe { *out = Box::into_raw(Box::new(ZeqDigraph(g))) };
            ZeqStatus::Ok
        }
        Err(_) => ZeqStatus::ParseError,
    })
}

/// Releases a digraph handle; a null pointer is ignored.
///
/// # Safety
/// `g` must be null or a pointer returned by `zeq_digraph_parse` that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn zeq_digraph_free(g: *mut ZeqDigraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Writes the vertex count of a digraph.
///
/// # Safety
/// `g` must be a live digraph handle and `n` writable.
#[no_mangle]
pub unsafe extern "C" fn zeq_digraph_vertex_count(
    g: *const ZeqDigraph,
    n: *mut usize,
) -> ZeqStatus {
    if g.is_null() || n.is_null() {
        return ZeqStatus::NullArgument;
    }
    unsafe { *n = (*g).0.n() };
    ZeqStatus::Ok
}

/// Prints a digraph back to edge-list text.
///
/// # Safety
/// `g` must be a live digraph handle and `out` writable; the returned
/// string must be released with `zeq_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zeq_digraph_format(
    g: *const ZeqDigraph,
    out: *mut *mut c_char,
) -> ZeqStatus {
    if g.is_null() || out.is_null() {
        return ZeqStatus::NullArgument;
    }
    let text = print_digraph(unsafe { &(*g).0 });
    export_string(text, out)
}

/// Computes a characteristic polynomial in canonical text form.
///
/// # Safety
/// `g` must be a live digraph handle and `out` writable; the returned
/// string must be released with `zeq_string_free`.
#[no_mangle]
pub unsafe extern "C" fn zeq_eta(
    g: *const ZeqDigraph,
    variant: ZeqEtaVariant,
    out: *mut *mut c_char,
) -> ZeqStatus {
    if g.is_null() || out.is_null() {
        return ZeqStatus::NullArgument;
    }
    let g = unsafe { &(*g).0 };
    guarded(|| {
        let poly = match variant {
            ZeqEtaVariant::Eta => Ok(eta(g).poly),
            ZeqEtaVariant::EtaBar => eta_bar(g).map(|p| p.poly),
            ZeqEtaVariant::EtaComplete => eta_complete(g),
        };
        match poly {
            Ok(p) => export_string(p.to_string(), out),
            Err(_) => ZeqStatus::GraphError,
        }
    })
}

/// Decides zeta-equivalence of two digraphs; writes 1 or 0.
///
/// # Safety
/// `a` and `b` must be live digraph handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zeq_equivalent(
    a: *const ZeqDigraph,
    b: *const ZeqDigraph,
    mode: ZeqMode,
    out: *mut c_int,
) -> ZeqStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return ZeqStatus::NullArgument;
    }
    let (a, b) = unsafe { (&(*a).0, &(*b).0) };
    guarded(|| {
        let verdict = match mode {
            ZeqMode::Digraph => zeta_equivalent_digraphs(a, b),
            ZeqMode::Graph => zeta_equivalent_graphs(a, b),
        };
        match verdict {
            Ok(equal) => {
                unsafe { *out = c_int::from(equal) };
                ZeqStatus::Ok
            }
            Err(_) => ZeqStatus::GraphError,
        }
    })
}

/// Releases a string returned by this library; a null pointer is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn zeq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> *mut ZeqDigraph {
        let c = CString::new(text).unwrap();
        let mut handle = ptr::null_mut();
        let status = unsafe { zeq_digraph_parse(c.as_ptr(), &mut handle) };
        assert_eq!(status, ZeqStatus::Ok);
        assert!(!handle.is_null());
        handle
    }

    fn take_string(s: *mut c_char) -> String {
        assert!(!s.is_null());
        let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
        unsafe { zeq_string_free(s) };
        owned
    }

    #[test]
    fn version_is_a_c_string() {
        let v = unsafe { CStr::from_ptr(zeq_version()) };
        assert_eq!(v.to_str().unwrap(), "0.1.0");
    }

    #[test]
    fn parse_eta_equivalence_round_trip() {
        let left = parse("n 5\n1 2\n2 4\n3 2\n4 3\n4 5\n");
        let right = parse("n 5\n1 2\n2 3\n3 4\n4 2\n4 5\n");
        let mut n = 0usize;
        assert_eq!(unsafe { zeq_digraph_vertex_count(left, &mut n) }, ZeqStatus::Ok);
        assert_eq!(n, 5);
        let mut text = ptr::null_mut();
        assert_eq!(unsafe { zeq_eta(left, ZeqEtaVariant::Eta, &mut text) }, ZeqStatus::Ok);
        let eta_left = take_string(text);
        let mut text = ptr::null_mut();
        assert_eq!(unsafe { zeq_eta(right, ZeqEtaVariant::Eta, &mut text) }, ZeqStatus::Ok);
        assert_eq!(eta_left, take_string(text));
        let mut equal = -1;
        let status = unsafe { zeq_equivalent(left, right, ZeqMode::Digraph, &mut equal) };
        assert_eq!(status, ZeqStatus::Ok);
        assert_eq!(equal, 1);
        let mut printed = ptr::null_mut();
        assert_eq!(unsafe { zeq_digraph_format(left, &mut printed) }, ZeqStatus::Ok);
        assert_eq!(take_string(printed), "n 5\n1 2\n2 4\n3 2\n4 3\n4 5\n");
        unsafe {
            zeq_digraph_free(left);
            zeq_digraph_free(right);
        }
    }

    #[test]
    fn error_paths_report_status_codes() {
        let mut handle = ptr::null_mut();
        assert_eq!(
            unsafe { zeq_digraph_parse(ptr::null(), &mut handle) },
            ZeqStatus::NullArgument
        );
        let junk = CString::new("not a digraph").unwrap();
        assert_eq!(
            unsafe { zeq_digraph_parse(junk.as_ptr(), &mut handle) },
            ZeqStatus::ParseError
        );
        assert!(handle.is_null());
        let bad_utf8 = [0xffu8, 0];
        assert_eq!(
            unsafe { zeq_digraph_parse(bad_utf8.as_ptr().cast(), &mut handle) },
            ZeqStatus::InvalidUtf8
        );
        let arc = parse("n 2\n1 2\n");
        let k2 = parse("n 2\n1 2\n2 1\n");
        let mut text = ptr::null_mut();
        assert_eq!(
            unsafe { zeq_eta(arc, ZeqEtaVariant::EtaBar, &mut text) },
            ZeqStatus::GraphError
        );
        let mut equal = -1;
        let k3 = parse("n 3\n1 2\n2 1\n");
        assert_eq!(
            unsafe { zeq_equivalent(k2, k3, ZeqMode::Graph, &mut equal) },
            ZeqStatus::GraphError
        );
        unsafe {
            zeq_digraph_free(arc);
            zeq_digraph_free(k2);
            zeq_digraph_free(k3);
            zeq_digraph_free(ptr::null_mut());
            zeq_string_free(ptr::null_mut());
        }
    }
}
