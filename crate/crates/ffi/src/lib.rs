//! C interface to `minorcat`.
//!
//! Graphs and homology groups are opaque handles released with the matching
//! `_free` function. Every fallible call returns a [`MinorcatStatus`] and
//! writes its result through an out-pointer; on failure the out-pointer is
//! left untouched and [`minorcat_last_error_message`] describes the error.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use minorcat::graph::format::parse_graph;
use minorcat::graph::{builders, is_isomorphic, is_planar};
use minorcat::homology::{abrams_oracle, HomologyGroup};
use minorcat::minor::{automorphisms, has_minor, hom_count};
use minorcat::swiatkowski::SwiatkowskiComplex;
use minorcat::{Error, Graph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorcatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    ResourceLimit = 5,
    Overflow = 6,
    Panic = 7,
}

pub struct MinorcatGraph(Graph);

pub struct MinorcatHomology(HomologyGroup);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> MinorcatStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) | Error::UnknownGraphSpec(_) => MinorcatStatus::Parse,
        Error::ResourceLimit { .. } => MinorcatStatus::ResourceLimit,
        _ => MinorcatStatus::InvalidInput,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (MinorcatStatus, String)> + UnwindSafe) -> MinorcatStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => MinorcatStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MinorcatStatus::Panic
        }
    }
}

fn lib(e: Error) -> (MinorcatStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (MinorcatStatus, String) {
    (MinorcatStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const MinorcatGraph, what: &str) -> Result<&'a Graph, (MinorcatStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null(what))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (MinorcatStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (MinorcatStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), (MinorcatStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn minorcat_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn minorcat_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses the line-based graph format.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_parse(text: *const c_char, out: *mut *mut MinorcatGraph) -> MinorcatStatus {
    guard(|| {
        let text = c_str(text, "text")?;
        let g = parse_graph(text).map_err(lib)?;
        write(out, Box::into_raw(Box::new(MinorcatGraph(g))), "out")
    })
}

/// Builds a named graph such as `K5`, `K3,3`, `C4`, `R2` or `*`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_from_name(name: *const c_char, out: *mut *mut MinorcatGraph) -> MinorcatStatus {
    guard(|| {
        let name = c_str(name, "name")?;
        let g = builders::by_name(name).ok_or_else(|| lib(Error::UnknownGraphSpec(name.to_string())))?;
        write(out, Box::into_raw(Box::new(MinorcatGraph(g))), "out")
    })
}

/// # Safety
/// `g` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_free(g: *mut MinorcatGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle; out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_counts(
    g: *const MinorcatGraph,
    vertices: *mut usize,
    edges: *mut usize,
) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        if edges.is_null() {
            return Err(null("edges"));
        }
        write(vertices, g.num_vertices(), "vertices")?;
        write(edges, g.num_edges(), "edges")
    })
}

/// First Betti number of a nonempty connected graph.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_genus(g: *const MinorcatGraph, out: *mut usize) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        write(out, g.genus().map_err(lib)?, "out")
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_is_connected(g: *const MinorcatGraph, out: *mut bool) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        write(out, g.is_connected(), "out")
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_is_planar(g: *const MinorcatGraph, out: *mut bool) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        write(out, is_planar(g), "out")
    })
}

/// # Safety
/// `a` and `b` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_graph_is_isomorphic(
    a: *const MinorcatGraph,
    b: *const MinorcatGraph,
    out: *mut bool,
) -> MinorcatStatus {
    guard(|| {
        let (a, b) = (graph_ref(a, "first graph")?, graph_ref(b, "second graph")?);
        write(out, is_isomorphic(a, b), "out")
    })
}

/// Number of minor morphisms `g -> h`.
///
/// # Safety
/// `g` and `h` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_hom_count(
    g: *const MinorcatGraph,
    h: *const MinorcatGraph,
    out: *mut usize,
) -> MinorcatStatus {
    guard(|| {
        let (g, h) = (graph_ref(g, "source")?, graph_ref(h, "target")?);
        write(out, hom_count(g, h).map_err(lib)?, "out")
    })
}

/// Whether `h` is a minor of `g`.
///
/// # Safety
/// `g` and `h` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_has_minor(
    g: *const MinorcatGraph,
    h: *const MinorcatGraph,
    out: *mut bool,
) -> MinorcatStatus {
    guard(|| {
        let (g, h) = (graph_ref(g, "graph")?, graph_ref(h, "minor")?);
        write(out, has_minor(g, h), "out")
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_automorphism_count(g: *const MinorcatGraph, out: *mut usize) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        write(out, automorphisms(g).map_err(lib)?.len(), "out")
    })
}

/// `H_i(U_n(G); Z)` from the reduced Świątkowski complex. For the
/// single-vertex graph in degree 0 this differs from the configuration
/// space at `n = 1`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_swiatkowski_homology(
    g: *const MinorcatGraph,
    i: usize,
    n: usize,
    out: *mut *mut MinorcatHomology,
) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let h = SwiatkowskiComplex::build(g, i, n)
            .and_then(|cx| cx.homology(i, n))
            .map_err(lib)?;
        write(out, Box::into_raw(Box::new(MinorcatHomology(h))), "out")
    })
}

/// `H_i(U_n(G); Z)` from the discretized cube complex.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_abrams_homology(
    g: *const MinorcatGraph,
    i: usize,
    n: usize,
    out: *mut *mut MinorcatHomology,
) -> MinorcatStatus {
    guard(|| {
        let g = graph_ref(g, "graph")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let h = abrams_oracle(g, n, i).map_err(lib)?;
        write(out, Box::into_raw(Box::new(MinorcatHomology(h))), "out")
    })
}

/// # Safety
/// `h` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn minorcat_homology_free(h: *mut MinorcatHomology) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live homology handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_homology_rank(h: *const MinorcatHomology, out: *mut usize) -> MinorcatStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("homology"))?;
        write(out, h.0.rank, "out")
    })
}

/// Number of torsion divisors.
///
/// # Safety
/// `h` must be a live homology handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_homology_torsion_len(h: *const MinorcatHomology, out: *mut usize) -> MinorcatStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("homology"))?;
        write(out, h.0.torsion.len(), "out")
    })
}

/// The `k`-th torsion divisor; `Overflow` if it does not fit in 64 bits.
///
/// # Safety
/// `h` must be a live homology handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_homology_torsion(
    h: *const MinorcatHomology,
    k: usize,
    out: *mut u64,
) -> MinorcatStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("homology"))?;
        let d = h
            .0
            .torsion
            .get(k)
            .ok_or_else(|| (MinorcatStatus::InvalidInput, format!("torsion index {k} out of range")))?;
        let v = u64::try_from(d).map_err(|_| (MinorcatStatus::Overflow, format!("divisor {d} exceeds 64 bits")))?;
        write(out, v, "out")
    })
}

/// Text form such as `Z^2 + Z/2`; release with [`minorcat_string_free`].
///
/// # Safety
/// `h` must be a live homology handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn minorcat_homology_to_string(h: *const MinorcatHomology, out: *mut *mut c_char) -> MinorcatStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("homology"))?;
        let s = CString::new(h.0.to_string()).expect("no nul bytes");
        write(out, s.into_raw(), "out")
    })
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn minorcat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
