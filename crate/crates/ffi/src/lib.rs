//! C ABI surface over the stlab engine: opaque graph handles, integer error
//! codes, and string outputs written into caller-provided buffers. The header
//! is generated into `include/stlab.h` by the build script.

use std::ffi::{c_char, c_int, CStr};
use std::ptr;

use stlab::canon::{are_isomorphic, canonical_graph, MAX_CANON_ORDER};
use stlab::constructions::{c5_blowup, complete_graph, complete_minus_edge, cycle_graph, z_graph};
use stlab::error::Error;
use stlab::graph::Graph;
use stlab::properties::{
    independence_number, is_hamiltonian, is_pancyclic, is_st_graph, is_triangle_free,
    vertex_connectivity, StQuery,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum StlabStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    ParseError = 3,
    TooLarge = 4,
    BufferTooSmall = 5,
}

/// Opaque graph handle. Created by the constructors below and released with
/// `stlab_graph_free`.
pub struct StlabGraph {
    inner: Graph,
}

fn status_of(err: &Error) -> StlabStatus {
    match err {
        Error::MalformedHeader
        | Error::TruncatedPayload
        | Error::NonzeroPadding
        | Error::Parse(_) => StlabStatus::ParseError,
        Error::OrderTooLarge { .. } | Error::SearchTooLarge(_, _) => StlabStatus::TooLarge,
        _ => StlabStatus::InvalidArgument,
    }
}

fn export(out: *mut *mut StlabGraph, g: Graph) -> StlabStatus {
    if out.is_null() {
        return StlabStatus::NullArgument;
    }
    unsafe {
        *out = Box::into_raw(Box::new(StlabGraph { inner: g }));
    }
    StlabStatus::Ok
}

unsafe fn borrow<'a>(g: *const StlabGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

fn write_string(text: &str, buf: *mut c_char, buf_len: usize) -> StlabStatus {
    if buf.is_null() {
        return StlabStatus::NullArgument;
    }
    let bytes = text.as_bytes();
    if bytes.len() + 1 > buf_len {
        return StlabStatus::BufferTooSmall;
    }
    unsafe {
        ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, bytes.len());
        *buf.add(bytes.len()) = 0;
    }
    StlabStatus::Ok
}

/// Creates an edgeless graph of the given order (at most 64).
#[no_mangle]
pub extern "C" fn stlab_graph_new(order: usize, out: *mut *mut StlabGraph) -> StlabStatus {
    match Graph::new(order) {
        Ok(g) => export(out, g),
        Err(e) => status_of(&e),
    }
}

/// Releases a graph handle. Null is ignored.
#[no_mangle]
pub extern "C" fn stlab_graph_free(g: *mut StlabGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Adds an undirected edge; loops and out-of-range vertices are rejected.
#[no_mangle]
pub extern "C" fn stlab_graph_add_edge(g: *mut StlabGraph, u: usize, v: usize) -> StlabStatus {
    let Some(handle) = (unsafe { g.as_mut() }) else {
        return StlabStatus::NullArgument;
    };
    match handle.inner.add_edge(u, v) {
        Ok(()) => StlabStatus::Ok,
        Err(e) => status_of(&e),
    }
}

/// Parses a short-form graph6 string.
#[no_mangle]
pub extern "C" fn stlab_graph_from_g6(
    text: *const c_char,
    out: *mut *mut StlabGraph,
) -> StlabStatus {
    if text.is_null() {
        return StlabStatus::NullArgument;
    }
    let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return StlabStatus::ParseError;
    };
    match Graph::from_graph6(text) {
        Ok(g) => export(out, g),
        Err(e) => status_of(&e),
    }
}

/// Writes the graph6 encoding into `buf` (NUL terminated).
#[no_mangle]
pub extern "C" fn stlab_graph_to_g6(
    g: *const StlabGraph,
    buf: *mut c_char,
    buf_len: usize,
) -> StlabStatus {
    let Some(graph) = (unsafe { borrow(g) }) else {
        return StlabStatus::NullArgument;
    };
    match graph.to_graph6() {
        Ok(text) => write_string(&text, buf, buf_len),
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub extern "C" fn stlab_graph_order(g: *const StlabGraph) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| graph.order() as c_int)
}

#[no_mangle]
pub extern "C" fn stlab_graph_edge_count(g: *const StlabGraph) -> i64 {
    unsafe { borrow(g) }.map_or(-1, |graph| graph.edge_count() as i64)
}

#[no_mangle]
pub extern "C" fn stlab_graph_degree(g: *const StlabGraph, v: usize) -> c_int {
    unsafe { borrow(g) }
        .and_then(|graph| graph.degree(v).ok())
        .map_or(-1, |d| d as c_int)
}

#[no_mangle]
pub extern "C" fn stlab_graph_has_edge(g: *const StlabGraph, u: usize, v: usize) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| c_int::from(graph.has_edge(u, v)))
}

/// True (1) iff every induced subgraph of order `s` has at least `t` edges.
#[no_mangle]
pub extern "C" fn stlab_is_st_graph(
    g: *const StlabGraph,
    s: usize,
    t: u64,
    out: *mut c_int,
) -> StlabStatus {
    let Some(graph) = (unsafe { borrow(g) }) else {
        return StlabStatus::NullArgument;
    };
    if out.is_null() {
        return StlabStatus::NullArgument;
    }
    match StQuery::new(s, t) {
        Ok(q) => {
            unsafe { *out = c_int::from(is_st_graph(graph, q)) };
            StlabStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

#[no_mangle]
pub extern "C" fn stlab_independence_number(g: *const StlabGraph) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| independence_number(graph) as c_int)
}

#[no_mangle]
pub extern "C" fn stlab_vertex_connectivity(g: *const StlabGraph) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| vertex_connectivity(graph) as c_int)
}

#[no_mangle]
pub extern "C" fn stlab_is_triangle_free(g: *const StlabGraph) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| c_int::from(is_triangle_free(graph)))
}

#[no_mangle]
pub extern "C" fn stlab_is_hamiltonian(g: *const StlabGraph) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| c_int::from(is_hamiltonian(graph)))
}

#[no_mangle]
pub extern "C" fn stlab_is_pancyclic(g: *const StlabGraph) -> c_int {
    unsafe { borrow(g) }.map_or(-1, |graph| c_int::from(is_pancyclic(graph)))
}

/// Writes the canonical graph6 form (order at most 16) into `buf`.
#[no_mangle]
pub extern "C" fn stlab_canonical_g6(
    g: *const StlabGraph,
    buf: *mut c_char,
    buf_len: usize,
) -> StlabStatus {
    let Some(graph) = (unsafe { borrow(g) }) else {
        return StlabStatus::NullArgument;
    };
    if graph.order() > MAX_CANON_ORDER {
        return StlabStatus::TooLarge;
    }
    match canonical_graph(graph).and_then(|c| c.to_graph6()) {
        Ok(text) => write_string(&text, buf, buf_len),
        Err(e) => status_of(&e),
    }
}

/// 1 if isomorphic, 0 if not, -1 on error (orders above 16).
#[no_mangle]
pub extern "C" fn stlab_are_isomorphic(a: *const StlabGraph, b: *const StlabGraph) -> c_int {
    match (unsafe { borrow(a) }, unsafe { borrow(b) }) {
        (Some(x), Some(y)) => are_isomorphic(x, y).map_or(-1, c_int::from),
        _ => -1,
    }
}

macro_rules! family_constructor {
    ($(#[$doc:meta])* $name:ident, $ctor:path) => {
        $(#[$doc])*
        #[no_mangle]
        pub extern "C" fn $name(param: usize, out: *mut *mut StlabGraph) -> StlabStatus {
            match $ctor(param) {
                Ok(g) => export(out, g),
                Err(e) => status_of(&e),
            }
        }
    };
}

family_constructor!(
    /// Cycle of the given order (at least 3).
    stlab_cycle_graph, cycle_graph);
family_constructor!(
    /// Complete graph of the given order.
    stlab_complete_graph, complete_graph);
family_constructor!(
    /// Complete graph minus the edge between vertices 0 and 1.
    stlab_complete_minus_edge, complete_minus_edge);
family_constructor!(
    /// Blow-up of the 5-cycle with the given multiplicity (1..=12).
    stlab_c5_blowup, c5_blowup);
family_constructor!(
    /// Clique-minus-one-edge plus an attached triangle, order at least 7.
    stlab_z_graph, z_graph);

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn make(f: impl FnOnce(*mut *mut StlabGraph) -> StlabStatus) -> *mut StlabGraph {
        let mut out: *mut StlabGraph = ptr::null_mut();
        assert_eq!(f(&mut out), StlabStatus::Ok);
        assert!(!out.is_null());
        out
    }

    #[test]
    fn build_query_and_free() {
        let g = make(|out| stlab_graph_new(4, out));
        assert_eq!(stlab_graph_add_edge(g, 0, 1), StlabStatus::Ok);
        assert_eq!(stlab_graph_add_edge(g, 1, 1), StlabStatus::InvalidArgument);
        assert_eq!(stlab_graph_order(g), 4);
        assert_eq!(stlab_graph_edge_count(g), 1);
        assert_eq!(stlab_graph_has_edge(g, 0, 1), 1);
        stlab_graph_free(g);
        assert_eq!(stlab_graph_new(65, &mut ptr::null_mut()), StlabStatus::InvalidArgument);
    }

    #[test]
    fn g6_round_trip_and_canonical() {
        let c5 = make(|out| stlab_cycle_graph(5, out));
        let mut buf = [0 as c_char; 32];
        assert_eq!(
            stlab_graph_to_g6(c5, buf.as_mut_ptr(), buf.len()),
            StlabStatus::Ok
        );
        let text = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
        assert_eq!(text, "Dhc");

        let parsed = {
            let c = CString::new("Dhc").unwrap();
            make(|out| stlab_graph_from_g6(c.as_ptr(), out))
        };
        assert_eq!(stlab_are_isomorphic(c5, parsed), 1);

        let mut tiny = [0 as c_char; 2];
        assert_eq!(
            stlab_graph_to_g6(c5, tiny.as_mut_ptr(), tiny.len()),
            StlabStatus::BufferTooSmall
        );
        assert_eq!(
            stlab_canonical_g6(c5, buf.as_mut_ptr(), buf.len()),
            StlabStatus::Ok
        );
        stlab_graph_free(c5);
        stlab_graph_free(parsed);
    }

    #[test]
    fn property_queries() {
        let z9 = make(|out| stlab_z_graph(9, out));
        assert_eq!(stlab_vertex_connectivity(z9), 2);
        assert_eq!(stlab_independence_number(z9), 3);
        assert_eq!(stlab_is_pancyclic(z9), 1);
        assert_eq!(stlab_is_triangle_free(z9), 0);
        let mut flag = -1;
        assert_eq!(stlab_is_st_graph(z9, 4, 2, &mut flag), StlabStatus::Ok);
        assert_eq!(flag, 1);
        assert_eq!(stlab_is_st_graph(z9, 4, 9, &mut flag), StlabStatus::InvalidArgument);
        stlab_graph_free(z9);

        let bad = CString::new("~~~").unwrap();
        let mut out: *mut StlabGraph = ptr::null_mut();
        assert_eq!(
            stlab_graph_from_g6(bad.as_ptr(), &mut out),
            StlabStatus::ParseError
        );
        assert_eq!(stlab_is_pancyclic(ptr::null()), -1);
    }
}
