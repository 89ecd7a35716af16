//! JSON case reports and the batch verification suite.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{compare_bounds, verify_corollary, verify_theorem2, BoundReport, WedgeRow};
use crate::complex::DEFAULT_FACE_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{
    build_gadget, construct_family, CorollaryParams, Family, GadgetSpec, Graph, Vertex,
};
use crate::homology::{ConnectivityCertificate, HomologyGroup, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Highest homology degree reported.
    pub cap: usize,
    /// Face budget per complex.
    pub limit: usize,
    /// Record `wall_time_ms`; off by default so reports are reproducible byte for byte.
    pub timing: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            cap: DEFAULT_CAP,
            limit: DEFAULT_FACE_LIMIT,
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LovaszSummary {
    /// The value is exact (connectivity pinned down), not just a lower bound.
    pub certified: bool,
    pub value: Option<usize>,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub coloring: Vec<usize>,
    pub clique: Vec<Vertex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub biclique: Option<(Vec<Vertex>, Vec<Vertex>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridge: Option<Bridge>,
    pub complex_components: Vec<Option<Vertex>>,
    pub certificate: ConnectivityCertificate,
}

/// The gadget's new vertex and its two neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bridge {
    pub z: Vertex,
    pub ends: [Vertex; 2],
}

/// One verification case in the stable report schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub params: serde_json::Value,
    pub graph_stats: GraphStats,
    pub chi: usize,
    pub omega: usize,
    pub lovasz: LovaszSummary,
    pub homology: Vec<HomologyGroup>,
    pub witnesses: Witnesses,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wedge: Option<Vec<WedgeRow>>,
    pub failures: Vec<String>,
    pub pass: bool,
    pub wall_time_ms: Option<u64>,
}

fn base_report(case: String, params: serde_json::Value, g: &Graph, b: BoundReport) -> CaseReport {
    let mut failures = Vec::new();
    if !b.is_consistent() {
        failures.push("bounds-consistent".to_string());
    }
    CaseReport {
        case,
        params,
        graph_stats: GraphStats {
            n: g.n(),
            m: g.edge_count(),
        },
        chi: b.chi,
        omega: b.omega,
        lovasz: LovaszSummary {
            certified: b.lovasz_certified.is_some(),
            value: b.lovasz_certified.or(b.lovasz_lower),
            flags: b.flags,
        },
        homology: b.certificate.homology.clone(),
        witnesses: Witnesses {
            coloring: b.coloring.assignment,
            clique: b.clique.vertices,
            biclique: None,
            bridge: None,
            complex_components: b.complex_components,
            certificate: b.certificate,
        },
        wedge: None,
        pass: failures.is_empty(),
        failures,
        wall_time_ms: None,
    }
}

fn timed<T>(opts: &ReportOptions, f: impl FnOnce() -> Result<T>) -> Result<(T, Option<u64>)> {
    let start = Instant::now();
    let out = f()?;
    let ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
    Ok((out, ms))
}

/// Bound comparison on an arbitrary graph; passes when the outputs are
/// mutually consistent.
pub fn bounds_case(name: &str, g: &Graph, opts: &ReportOptions) -> Result<CaseReport> {
    let (b, ms) = timed(opts, || compare_bounds(g, opts.cap, opts.limit))?;
    let mut r = base_report(format!("bounds/{name}"), json!({ "graph": name }), g, b);
    r.wall_time_ms = ms;
    Ok(r)
}

/// Wedge-homology and certificate check for one gadget.
pub fn theorem2_case(name: &str, spec: &GadgetSpec, opts: &ReportOptions) -> Result<CaseReport> {
    let ((wedge, gadget, b), ms) = timed(opts, || {
        let wedge = verify_theorem2(spec, opts.cap, opts.limit)?;
        let gadget = build_gadget(spec)?;
        let b = compare_bounds(&gadget.graph, opts.cap, opts.limit)?;
        Ok((wedge, gadget, b))
    })?;
    let params = json!({ "pair": name, "x": spec.x, "y": spec.y, "cap": opts.cap.max(1) });
    let mut r = base_report(
        format!("theorem2/{name}/x{}-y{}", spec.x, spec.y),
        params,
        &gadget.graph,
        b,
    );
    for row in &wedge.rows {
        if !row.betti_pass {
            r.failures.push(format!("betti-additivity-dim{}", row.dim));
        }
        if !row.torsion_pass {
            r.failures
                .push(format!("torsion-additivity-dim{}", row.dim));
        }
    }
    if !wedge.certificate.certified_conn_zero {
        r.failures.push("conn-zero-certificate".into());
    }
    r.witnesses.bridge = Some(Bridge {
        z: gadget.z,
        ends: [gadget.x, gadget.y],
    });
    r.wedge = Some(wedge.rows);
    r.pass = r.failures.is_empty();
    r.wall_time_ms = ms;
    Ok(r)
}

pub fn corollary_case(params: CorollaryParams, opts: &ReportOptions) -> Result<CaseReport> {
    let (cr, ms) = timed(opts, || verify_corollary(params, opts.cap, opts.limit))?;
    let CorollaryParams { l, m, p, q } = params;
    let g = crate::graph::build_corollary_graph(params)?.graph;
    let mut r = base_report(
        format!("corollary/l{l}-m{m}-p{p}-q{q}"),
        json!({ "l": l, "m": m, "p": p, "q": q }),
        &g,
        cr.bounds.clone(),
    );
    r.failures = cr.failed_clauses().into_iter().map(String::from).collect();
    r.witnesses.biclique = Some(cr.biclique.clone());
    r.witnesses.bridge = Some(Bridge {
        z: cr.z,
        ends: cr.s,
    });
    r.pass = cr.pass;
    r.wall_time_ms = ms;
    Ok(r)
}

/// A case of the batch suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteCase {
    Theorem2 {
        name: String,
        spec: GadgetSpec,
        cap: usize,
    },
    Corollary(CorollaryParams),
    Bounds {
        name: String,
        graph: Graph,
    },
}

impl SuiteCase {
    pub fn run(&self, opts: &ReportOptions) -> Result<CaseReport> {
        match self {
            SuiteCase::Theorem2 { name, spec, cap } => {
                let opts = ReportOptions { cap: *cap, ..*opts };
                theorem2_case(name, spec, &opts)
            }
            SuiteCase::Corollary(p) => corollary_case(*p, opts),
            SuiteCase::Bounds { name, graph } => bounds_case(name, graph, opts),
        }
    }
}

fn named_base_graphs() -> Vec<(&'static str, Graph)> {
    let f = |family| construct_family(family).expect("valid family");
    vec![
        ("K3", f(Family::Complete { p: 3 })),
        ("K4", f(Family::Complete { p: 4 })),
        ("C5", f(Family::Cycle { n: 5 })),
        ("C7", f(Family::Cycle { n: 7 })),
    ]
}

/// Parameter sets of the separation construction run by the suite.
pub const SUITE_COROLLARY_PARAMS: [CorollaryParams; 4] = [
    CorollaryParams {
        l: 1,
        m: 2,
        p: 2,
        q: 3,
    },
    CorollaryParams {
        l: 2,
        m: 2,
        p: 3,
        q: 3,
    },
    CorollaryParams {
        l: 2,
        m: 3,
        p: 3,
        q: 4,
    },
    CorollaryParams {
        l: 2,
        m: 2,
        p: 3,
        q: 5,
    },
];

/// Every unordered pair from {K3, K4, C5, C7} at base points (0, 0) and at one
/// seeded random pair; the four separation cases; and bound comparisons on
/// a few reference graphs.
pub fn default_suite(seed: u64) -> Vec<SuiteCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = named_base_graphs();
    let mut cases = Vec::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            let (hn, h) = &base[i];
            let (kn, k) = &base[j];
            let cap = if *hn == "K4" || *kn == "K4" { 3 } else { 2 };
            let name = format!("{hn}-{kn}");
            let rx = rng.gen_range(0..h.n());
            let ry = rng.gen_range(0..k.n());
            for (x, y) in [(0, 0), (rx, ry)] {
                let spec = GadgetSpec::new(h.clone(), x, k.clone(), y).expect("in range");
                cases.push(SuiteCase::Theorem2 {
                    name: name.clone(),
                    spec,
                    cap,
                });
            }
        }
    }
    cases.extend(
        SUITE_COROLLARY_PARAMS
            .iter()
            .copied()
            .map(SuiteCase::Corollary),
    );
    let f = |family| construct_family(family).expect("valid family");
    for (name, graph) in [
        ("K2", f(Family::Complete { p: 2 })),
        ("K3", f(Family::Complete { p: 3 })),
        ("K4", f(Family::Complete { p: 4 })),
        ("C4", f(Family::Cycle { n: 4 })),
        ("C5", f(Family::Cycle { n: 5 })),
        ("Petersen", f(Family::Kneser { n: 5, k: 2 })),
    ] {
        cases.push(SuiteCase::Bounds {
            name: name.into(),
            graph,
        });
    }
    cases
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub cases: Vec<CaseReport>,
    pub pass: bool,
}

/// Runs the suite on `jobs` worker threads; cases are reported sorted by name.
pub fn run_suite(seed: u64, jobs: usize, opts: &ReportOptions) -> Result<SuiteReport> {
    let cases = default_suite(seed);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::param(format!("cannot build worker pool: {e}")))?;
    let mut reports = pool.install(|| {
        cases
            .par_iter()
            .map(|c| c.run(opts))
            .collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.case.cmp(&b.case));
    reports.dedup_by(|a, b| a.case == b.case);
    let pass = reports.iter().all(|r| r.pass);
    Ok(SuiteReport {
        seed,
        cases: reports,
        pass,
    })
}
