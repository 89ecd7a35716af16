//! C ABI over the `nbhd` library.
//!
//! Graphs and complexes are opaque handles created by `nbhd_*` constructors
//! and released with the matching `*_free` function. Every fallible call
//! returns an [`NbhdStatus`]; on failure the message is available from
//! [`nbhd_last_error_message`] on the same thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! [`nbhd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nbhd::complex::{neighborhood_complex, SimplicialComplex};
use nbhd::graph::dimacs::{parse_dimacs, to_dimacs};
use nbhd::graph::{
    build_corollary_graph, build_gadget, construct_family, mycielskian, triangle_free_chromatic,
    CorollaryParams, Family, GadgetSpec, Graph,
};
use nbhd::homology::{certify_conn_zero, reduced_homology_up_to};
use nbhd::invariants::{chromatic_number, max_clique};
use nbhd::verify::{corollary_case, theorem2_case, ReportOptions};
use nbhd::{Error, ErrorKind};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NbhdStatus {
    Ok = 0,
    NullPointer = 1,
    Parameter = 2,
    Parse = 3,
    Io = 4,
    Budget = 5,
    MissingDimension = 6,
    Certificate = 7,
    Precondition = 8,
    Verification = 9,
    InvalidUtf8 = 10,
    Panic = 11,
}

/// Opaque graph handle.
pub struct NbhdGraph {
    inner: Graph,
}

/// Opaque simplicial complex handle.
pub struct NbhdComplex {
    inner: SimplicialComplex,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> NbhdStatus {
    match e.kind() {
        ErrorKind::Parameter => NbhdStatus::Parameter,
        ErrorKind::Parse => NbhdStatus::Parse,
        ErrorKind::Io => NbhdStatus::Io,
        ErrorKind::Budget => NbhdStatus::Budget,
        ErrorKind::MissingDimension => NbhdStatus::MissingDimension,
        ErrorKind::Certificate => NbhdStatus::Certificate,
        ErrorKind::Precondition => NbhdStatus::Precondition,
        ErrorKind::Verification => NbhdStatus::Verification,
    }
}

enum Failure {
    Lib(Error),
    Status(NbhdStatus, &'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, converting errors and panics into a status and the thread's last
/// error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> NbhdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NbhdStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            NbhdStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure::Status(NbhdStatus::NullPointer, "null pointer argument")
}

unsafe fn graph_ref<'a>(g: *const NbhdGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.inner).ok_or_else(null)
}

unsafe fn complex_ref<'a>(c: *const NbhdComplex) -> Result<&'a SimplicialComplex, Failure> {
    c.as_ref().map(|c| &c.inner).ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut NbhdGraph, g: Graph) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(NbhdGraph { inner: g })))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let s = CString::new(s)
        .map_err(|_| Failure::Status(NbhdStatus::InvalidUtf8, "string contains NUL"))?;
    put(out, s.into_raw())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|e| (e[0], e[1])))?;
        put_graph(out, g)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_complete(p: usize, out: *mut *mut NbhdGraph) -> NbhdStatus {
    guard(|| put_graph(out, construct_family(Family::Complete { p })?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_complete_bipartite(
    l: usize,
    m: usize,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| put_graph(out, construct_family(Family::CompleteBipartite { l, m })?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_cycle(n: usize, out: *mut *mut NbhdGraph) -> NbhdStatus {
    guard(|| put_graph(out, construct_family(Family::Cycle { n })?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_kneser(
    n: usize,
    k: usize,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| put_graph(out, construct_family(Family::Kneser { n, k })?))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_mycielskian(
    g: *const NbhdGraph,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| put_graph(out, mycielskian(graph_ref(g)?)?))
}

/// Triangle-free graph with chromatic number `q`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_triangle_free(
    q: usize,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| put_graph(out, triangle_free_chromatic(q)?))
}

/// Joins `h` and `k` by a path of length two from `x` in `h` to `y` in `k`.
///
/// # Safety
/// `h` and `k` must be live graph handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_gadget(
    h: *const NbhdGraph,
    x: usize,
    k: *const NbhdGraph,
    y: usize,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| {
        let spec = GadgetSpec::new(graph_ref(h)?.clone(), x, graph_ref(k)?.clone(), y)?;
        put_graph(out, build_gadget(&spec)?.graph)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_corollary(
    l: usize,
    m: usize,
    p: usize,
    q: usize,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| {
        put_graph(
            out,
            build_corollary_graph(CorollaryParams { l, m, p, q })?.graph,
        )
    })
}

/// Parses DIMACS text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_from_dimacs(
    text: *const c_char,
    out: *mut *mut NbhdGraph,
) -> NbhdStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure::Status(NbhdStatus::InvalidUtf8, "input is not UTF-8"))?;
        put_graph(out, parse_dimacs(text)?.graph)
    })
}

/// Canonical DIMACS text; free with [`nbhd_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_to_dimacs(
    g: *const NbhdGraph,
    out: *mut *mut c_char,
) -> NbhdStatus {
    guard(|| put_string(out, to_dimacs(graph_ref(g)?)))
}

/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_free(g: *mut NbhdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_vertex_count(g: *const NbhdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_edge_count(g: *const NbhdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_is_connected(
    g: *const NbhdGraph,
    out: *mut bool,
) -> NbhdStatus {
    guard(|| put(out, graph_ref(g)?.is_connected()))
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_is_bipartite(
    g: *const NbhdGraph,
    out: *mut bool,
) -> NbhdStatus {
    guard(|| put(out, graph_ref(g)?.is_bipartite().is_bipartite()))
}

/// Exact chromatic number. When `coloring` is non-null it receives one color
/// per vertex.
///
/// # Safety
/// `g` must be a live graph handle; `chi` must be writable; `coloring` must be
/// null or hold `nbhd_graph_vertex_count(g)` writable entries.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_chromatic_number(
    g: *const NbhdGraph,
    chi: *mut usize,
    coloring: *mut usize,
) -> NbhdStatus {
    guard(|| {
        let (k, w) = chromatic_number(graph_ref(g)?)?;
        if !coloring.is_null() {
            ptr::copy_nonoverlapping(w.assignment.as_ptr(), coloring, w.assignment.len());
        }
        put(chi, k)
    })
}

/// Exact clique number. When `clique` is non-null it receives the sorted
/// clique vertices (at most `nbhd_graph_vertex_count(g)` entries).
///
/// # Safety
/// `g` must be a live graph handle; `omega` must be writable; `clique` must be
/// null or hold `nbhd_graph_vertex_count(g)` writable entries.
#[no_mangle]
pub unsafe extern "C" fn nbhd_graph_clique_number(
    g: *const NbhdGraph,
    omega: *mut usize,
    clique: *mut usize,
) -> NbhdStatus {
    guard(|| {
        let (size, w) = max_clique(graph_ref(g)?);
        if !clique.is_null() {
            ptr::copy_nonoverlapping(w.vertices.as_ptr(), clique, w.vertices.len());
        }
        put(omega, size)
    })
}

/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_complex_from_graph(
    g: *const NbhdGraph,
    out: *mut *mut NbhdComplex,
) -> NbhdStatus {
    guard(|| {
        let c = neighborhood_complex(graph_ref(g)?);
        put(out, Box::into_raw(Box::new(NbhdComplex { inner: c })))
    })
}

/// Builds a complex from `facet_count` faces stored back to back in
/// `vertices`, with `lengths[i]` vertices in face `i`.
///
/// # Safety
/// `lengths` must hold `facet_count` entries and `vertices` their sum;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_complex_from_faces(
    num_vertices: usize,
    vertices: *const usize,
    lengths: *const usize,
    facet_count: usize,
    out: *mut *mut NbhdComplex,
) -> NbhdStatus {
    guard(|| {
        if facet_count > 0 && (vertices.is_null() || lengths.is_null()) {
            return Err(null());
        }
        let lengths: &[usize] = if facet_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(lengths, facet_count)
        };
        let total: usize = lengths.iter().sum();
        let flat: &[usize] = if total == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(vertices, total)
        };
        let mut rest = flat;
        let mut faces = Vec::with_capacity(lengths.len());
        for &len in lengths {
            let (face, tail) = rest.split_at(len);
            faces.push(face.to_vec());
            rest = tail;
        }
        let c = SimplicialComplex::from_faces(num_vertices, faces)?;
        put(out, Box::into_raw(Box::new(NbhdComplex { inner: c })))
    })
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nbhd_complex_free(c: *mut NbhdComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of facets, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live complex handle.
#[no_mangle]
pub unsafe extern "C" fn nbhd_complex_facet_count(c: *const NbhdComplex) -> usize {
    c.as_ref().map_or(0, |c| c.inner.facets().len())
}

/// Reduced homology in degrees `0..=max_dim`. `betti` receives
/// `max_dim + 1` Betti numbers; when `json` is non-null it receives the full
/// groups, torsion included, as a JSON array.
///
/// # Safety
/// `c` must be a live complex handle; `betti` must hold `max_dim + 1`
/// writable entries; `json` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_complex_homology(
    c: *const NbhdComplex,
    max_dim: usize,
    face_limit: usize,
    betti: *mut usize,
    json: *mut *mut c_char,
) -> NbhdStatus {
    guard(|| {
        if betti.is_null() {
            return Err(null());
        }
        let groups = reduced_homology_up_to(complex_ref(c)?, max_dim, face_limit)?;
        for (i, g) in groups.iter().enumerate() {
            betti.add(i).write(g.betti);
        }
        if !json.is_null() {
            put_string(json, serde_json::to_string(&groups).expect("serializable"))?;
        }
        Ok(())
    })
}

/// Sets `certified` when the complex is nonempty, connected and has
/// nontrivial first homology.
///
/// # Safety
/// `c` must be a live complex handle; `certified` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_complex_certify_conn_zero(
    c: *const NbhdComplex,
    face_limit: usize,
    certified: *mut bool,
) -> NbhdStatus {
    guard(|| {
        let cert = certify_conn_zero(complex_ref(c)?, face_limit)?;
        put(certified, cert.certified_conn_zero)
    })
}

/// Runs the separation check and returns its JSON report.
///
/// # Safety
/// `pass` and `json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_verify_corollary(
    l: usize,
    m: usize,
    p: usize,
    q: usize,
    pass: *mut bool,
    json: *mut *mut c_char,
) -> NbhdStatus {
    guard(|| {
        let r = corollary_case(CorollaryParams { l, m, p, q }, &ReportOptions::default())?;
        put_string(
            json,
            serde_json::to_string_pretty(&r).expect("serializable"),
        )?;
        put(pass, r.pass)
    })
}

/// Runs the wedge-homology check on the gadget of `h` at `x` and `k` at `y`
/// through degree `max_dim` and returns its JSON report.
///
/// # Safety
/// `h` and `k` must be live graph handles; `pass` and `json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nbhd_verify_theorem2(
    h: *const NbhdGraph,
    x: usize,
    k: *const NbhdGraph,
    y: usize,
    max_dim: usize,
    pass: *mut bool,
    json: *mut *mut c_char,
) -> NbhdStatus {
    guard(|| {
        let spec = GadgetSpec::new(graph_ref(h)?.clone(), x, graph_ref(k)?.clone(), y)?;
        let opts = ReportOptions {
            cap: max_dim,
            ..ReportOptions::default()
        };
        let r = theorem2_case("H-K", &spec, &opts)?;
        put_string(
            json,
            serde_json::to_string_pretty(&r).expect("serializable"),
        )?;
        put(pass, r.pass)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nbhd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn nbhd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
