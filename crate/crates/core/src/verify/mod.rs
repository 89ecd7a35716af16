//! End-to-end checks: bound comparison on a single graph, the wedge
//! decomposition of the gadget's neighborhood complex, and the
//! chromatic/clique/topological separation construction.

mod report;

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::{neighborhood_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{
    build_corollary_graph, build_gadget, CorollaryParams, GadgetSpec, Graph, Vertex,
};
use crate::homology::{
    certify_conn_zero_with_cap, reduced_homology_up_to, smith_normal_form, ConnectivityCertificate,
    HomologyGroup, IntegerMatrix,
};
use crate::invariants::{
    chromatic_number, contains_triangle, greedy_dsatur_bound, max_clique,
    verify_biclique_certificate, CliqueWitness, ColoringWitness,
};

pub use report::{
    bounds_case, corollary_case, default_suite, run_suite, theorem2_case, CaseReport, GraphStats,
    LovaszSummary, ReportOptions, SuiteCase, SuiteReport, SUITE_COROLLARY_PARAMS,
};

pub const FLAG_NO_CERTIFICATE: &str = "no-conn-zero-certificate";
pub const FLAG_HOMOLOGICAL_ONLY: &str = "homological-only-in-degrees>=2";
pub const FLAG_EMPTY_COMPLEX: &str = "empty-complex";
pub const FLAG_THEOREM1_VIOLATION: &str = "lovasz-bound-exceeds-chi";

/// Chromatic number, clique number and the Lovász bound side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub chi: usize,
    pub omega: usize,
    pub greedy_upper: usize,
    /// Exact topological bound: 3 when `conn = 0` is certified, 2 when the
    /// complex is nonempty and disconnected (`conn = -1`).
    pub lovasz_certified: Option<usize>,
    /// Best sound lower bound from the computed facts; equals
    /// `lovasz_certified` when present, 3 for any connected complex.
    pub lovasz_lower: Option<usize>,
    pub flags: Vec<String>,
    pub certificate: ConnectivityCertificate,
    pub coloring: ColoringWitness,
    pub clique: CliqueWitness,
    /// Component representative of each complex vertex (`None` if unused).
    pub complex_components: Vec<Option<Vertex>>,
}

impl BoundReport {
    /// `omega <= chi <= greedy` and the Lovász bound never exceeds `chi`.
    pub fn is_consistent(&self) -> bool {
        self.omega <= self.chi
            && self.chi <= self.greedy_upper
            && self.lovasz_lower.is_none_or(|b| b <= self.chi)
    }
}

pub fn compare_bounds(g: &Graph, cap: usize, limit: usize) -> Result<BoundReport> {
    let (chi, coloring) = chromatic_number(g)?;
    let (omega, clique) = max_clique(g);
    let (greedy_upper, _) = greedy_dsatur_bound(g);
    let complex = neighborhood_complex(g);
    let certificate = certify_conn_zero_with_cap(&complex, cap, limit)?;

    let mut flags = Vec::new();
    let (lovasz_certified, lovasz_lower) = if !certificate.nonempty {
        flags.push(FLAG_EMPTY_COMPLEX.to_string());
        (None, None)
    } else if !certificate.connected {
        (Some(2), Some(2))
    } else if certificate.certified_conn_zero {
        (Some(3), Some(3))
    } else {
        flags.push(FLAG_NO_CERTIFICATE.to_string());
        flags.push(format!(
            "homological-connectivity={}",
            certificate.homological_connectivity
        ));
        (None, Some(3))
    };
    if certificate.homological_only && certificate.nonempty && certificate.connected {
        flags.push(FLAG_HOMOLOGICAL_ONLY.to_string());
    }
    if lovasz_lower.is_some_and(|b| b > chi) {
        flags.push(FLAG_THEOREM1_VIOLATION.to_string());
    }
    Ok(BoundReport {
        chi,
        omega,
        greedy_upper,
        lovasz_certified,
        lovasz_lower,
        flags,
        complex_components: complex.components().1,
        certificate,
        coloring,
        clique,
    })
}

/// One degree of the wedge comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeRow {
    pub dim: usize,
    pub betti_gadget: usize,
    pub betti_h: usize,
    pub betti_k: usize,
    pub expected: usize,
    pub betti_pass: bool,
    #[serde(serialize_with = "crate::homology::decimal_strings")]
    pub torsion_gadget: Vec<BigInt>,
    #[serde(serialize_with = "crate::homology::decimal_strings")]
    pub torsion_h: Vec<BigInt>,
    #[serde(serialize_with = "crate::homology::decimal_strings")]
    pub torsion_k: Vec<BigInt>,
    #[serde(serialize_with = "crate::homology::decimal_strings")]
    pub torsion_expected: Vec<BigInt>,
    pub torsion_pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WedgeCheckReport {
    pub rows: Vec<WedgeRow>,
    pub certificate: ConnectivityCertificate,
    pub pass: bool,
}

/// Compares the reduced homology of `N(gadget)` with that of
/// `N(H) ∨ N(K) ∨ S^1` in degrees `0..=cap`, and requires the `conn = 0`
/// certificate on `N(gadget)`.
pub fn verify_theorem2(spec: &GadgetSpec, cap: usize, limit: usize) -> Result<WedgeCheckReport> {
    for (name, g) in [("H", &spec.h), ("K", &spec.k)] {
        if !g.is_connected() || g.is_bipartite().is_bipartite() {
            return Err(Error::Precondition(format!(
                "{name} must be one of the connected non-bipartite graphs the gadget argument requires"
            )));
        }
    }
    let gadget = build_gadget(spec)?;
    let cap = cap.max(1);
    let homology = |c: &SimplicialComplex| reduced_homology_up_to(c, cap, limit);
    let hg = homology(&neighborhood_complex(&gadget.graph))?;
    let hh = homology(&neighborhood_complex(&spec.h))?;
    let hk = homology(&neighborhood_complex(&spec.k))?;
    let rows: Vec<WedgeRow> = (0..=cap)
        .map(|i| wedge_row(i, &hg[i], &hh[i], &hk[i]))
        .collect();
    let certificate = certify_conn_zero_with_cap(&neighborhood_complex(&gadget.graph), cap, limit)?;
    let pass =
        certificate.certified_conn_zero && rows.iter().all(|r| r.betti_pass && r.torsion_pass);
    Ok(WedgeCheckReport {
        rows,
        certificate,
        pass,
    })
}

fn wedge_row(dim: usize, g: &HomologyGroup, h: &HomologyGroup, k: &HomologyGroup) -> WedgeRow {
    let expected = h.betti + k.betti + usize::from(dim == 1);
    let torsion_expected = direct_sum_torsion(&h.torsion, &k.torsion);
    WedgeRow {
        dim,
        betti_gadget: g.betti,
        betti_h: h.betti,
        betti_k: k.betti,
        expected,
        betti_pass: g.betti == expected,
        torsion_pass: g.torsion == torsion_expected,
        torsion_gadget: g.torsion.clone(),
        torsion_h: h.torsion.clone(),
        torsion_k: k.torsion.clone(),
        torsion_expected,
    }
}

/// Invariant factors (> 1) of the direct sum of two torsion groups.
fn direct_sum_torsion(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let orders: Vec<&BigInt> = a.iter().chain(b).collect();
    let n = orders.len();
    let columns = orders
        .iter()
        .enumerate()
        .map(|(i, &d)| vec![(i, d.clone())])
        .collect();
    let diag = IntegerMatrix::from_columns(n, columns).expect("diagonal matrix");
    smith_normal_form(&diag).torsion()
}

/// Outcome of one clause of the separation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryReport {
    pub params: CorollaryParams,
    pub n: usize,
    pub m: usize,
    pub bounds: BoundReport,
    pub clauses: Vec<Clause>,
    pub biclique: (Vec<Vertex>, Vec<Vertex>),
    pub clique_block: Vec<Vertex>,
    pub s: [Vertex; 2],
    pub z: Vertex,
    pub pass: bool,
}

impl CorollaryReport {
    pub fn failed_clauses(&self) -> Vec<&'static str> {
        self.clauses
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect()
    }
}

/// Builds the separation graph and checks `chi = q`, `omega = p`, the
/// `K_{l,m}` certificate, triangle-freeness of the high-chromatic part, and
/// a certified Lovász bound of exactly 3.
pub fn verify_corollary(
    params: CorollaryParams,
    cap: usize,
    limit: usize,
) -> Result<CorollaryReport> {
    params.validate()?;
    let built = build_corollary_graph(params)?;
    let g = &built.graph;
    let bounds = compare_bounds(g, cap, limit)?;
    let (left, right) = &built.biclique;
    let biclique_ok = verify_biclique_certificate(g, left, right)?
        && left.len() == params.l
        && right.len() == params.m;
    let t = g.induced_subgraph(&built.triangle_free);
    let clique_ok = CliqueWitness {
        vertices: built.clique.clone(),
    }
    .check(g)
    .is_ok();

    let clause = |name, expected: String, actual: String| Clause {
        name,
        pass: expected == actual,
        expected,
        actual,
    };
    let clauses = vec![
        clause(
            "chromatic-number",
            params.q.to_string(),
            bounds.chi.to_string(),
        ),
        clause(
            "clique-number",
            params.p.to_string(),
            bounds.omega.to_string(),
        ),
        clause("biclique-certificate", "valid".into(), valid(biclique_ok)),
        clause("clique-certificate", "valid".into(), valid(clique_ok)),
        clause(
            "triangle-free-part",
            "triangle-free".into(),
            contains_triangle(&t).map_or("triangle-free".into(), |w| {
                format!("triangle {:?}", w.vertices)
            }),
        ),
        clause(
            "lovasz-bound",
            "3".into(),
            bounds
                .lovasz_certified
                .map_or("uncertified".into(), |b| b.to_string()),
        ),
        clause(
            "bounds-consistent",
            "true".into(),
            bounds.is_consistent().to_string(),
        ),
    ];
    let pass = clauses.iter().all(|c| c.pass);
    Ok(CorollaryReport {
        params,
        n: g.n(),
        m: g.edge_count(),
        bounds,
        clauses,
        biclique: built.biclique.clone(),
        clique_block: built.clique.clone(),
        s: built.s,
        z: built.z,
        pass,
    })
}

fn valid(ok: bool) -> String {
    if ok { "valid" } else { "invalid" }.to_string()
}
