//! Standard graph families and the composite constructions built on them.

use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Named standard families with deterministic vertex numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `K_p` on vertices `0..p`.
    Complete { p: usize },
    /// `K_{l,m}`: left part `0..l`, right part `l..l+m`.
    CompleteBipartite { l: usize, m: usize },
    /// `C_n`, vertex `i` adjacent to `i ± 1 mod n`.
    Cycle { n: usize },
    /// `KG(n, k)`: k-subsets of `0..n` in lexicographic order, adjacent iff disjoint.
    Kneser { n: usize, k: usize },
}

pub fn construct_family(family: Family) -> Result<Graph> {
    match family {
        Family::Complete { p } => {
            if p == 0 {
                return Err(Error::param("complete graph needs p >= 1"));
            }
            Graph::from_edges(p, (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))))
        }
        Family::CompleteBipartite { l, m } => {
            if l == 0 || m == 0 {
                return Err(Error::param("complete bipartite graph needs l, m >= 1"));
            }
            Graph::from_edges(l + m, (0..l).flat_map(|u| (l..l + m).map(move |v| (u, v))))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::param("cycle needs n >= 3"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Kneser { n, k } => {
            if k == 0 || n < 2 * k {
                return Err(Error::param("kneser graph needs n >= 2k >= 2"));
            }
            let sets: Vec<u64> = k_subsets(n, k);
            let mut edges = Vec::new();
            for (i, &a) in sets.iter().enumerate() {
                for (j, &b) in sets.iter().enumerate().skip(i + 1) {
                    if a & b == 0 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(sets.len(), edges)
        }
    }
}

/// k-subsets of `0..n` as bitmasks, in lexicographic order of their sorted
/// element lists.
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 64, "kneser ground set limited to 64 elements");
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |acc, &i| acc | (1 << i)));
        // advance to the next combination
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Mycielskian of `g`: originals `0..n`, shadows `n..2n` (shadow `n+i` is
/// adjacent to every neighbor of `i`), apex `2n` adjacent to all shadows.
pub fn mycielskian(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n == 0 {
        return Err(Error::param(
            "mycielskian needs a graph with at least one vertex",
        ));
    }
    let mut edges = Vec::with_capacity(3 * g.edge_count() + n);
    for (u, v) in g.edges() {
        edges.push((u, v));
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    edges.extend((0..n).map(|i| (n + i, 2 * n)));
    Graph::from_edges(2 * n + 1, edges)
}

/// Triangle-free graph of chromatic number `q`: the `(q-2)`-fold Mycielskian of `K_2`.
pub fn triangle_free_chromatic(q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::param("triangle-free construction needs q >= 2"));
    }
    let mut g = construct_family(Family::Complete { p: 2 })?;
    for _ in 2..q {
        g = mycielskian(&g)?;
    }
    Ok(g)
}

/// Two graphs joined by a path of length two through a new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub h: Graph,
    pub x: Vertex,
    pub k: Graph,
    pub y: Vertex,
}

impl GadgetSpec {
    pub fn new(h: Graph, x: Vertex, k: Graph, y: Vertex) -> Result<Self> {
        if x >= h.n() || y >= k.n() {
            return Err(Error::param(format!(
                "base points out of range: x = {x} (|H| = {}), y = {y} (|K| = {})",
                h.n(),
                k.n()
            )));
        }
        Ok(GadgetSpec { h, x, k, y })
    }
}

/// Result of [`build_gadget`]. H keeps its ids, K is shifted by `k_offset`,
/// and the bridge vertex is `z = |H| + |K|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    pub z: Vertex,
    pub k_offset: usize,
    pub x: Vertex,
    pub y: Vertex,
}

impl Gadget {
    pub fn map_h(&self, v: Vertex) -> Vertex {
        v
    }

    pub fn map_k(&self, v: Vertex) -> Vertex {
        v + self.k_offset
    }
}

pub fn build_gadget(spec: &GadgetSpec) -> Result<Gadget> {
    if spec.x >= spec.h.n() || spec.y >= spec.k.n() {
        return Err(Error::param("gadget base point out of range"));
    }
    let union = spec.h.disjoint_union(&spec.k);
    let k_offset = spec.h.n();
    let z = union.n();
    let y = spec.y + k_offset;
    let mut edges: Vec<(Vertex, Vertex)> = union.edges().collect();
    edges.push((spec.x, z));
    edges.push((y, z));
    let graph = Graph::from_edges(z + 1, edges)?;
    Ok(Gadget {
        graph,
        z,
        k_offset,
        x: spec.x,
        y,
    })
}

/// Parameters of the clique/chromatic/biclique separation construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryParams {
    pub l: usize,
    pub m: usize,
    pub p: usize,
    pub q: usize,
}

impl CorollaryParams {
    /// Requires `l, m >= 1` and `2 <= p <= q` with `q >= 3`; for `q = 2` the
    /// block graph is bipartite and the gadget argument does not apply.
    pub fn validate(&self) -> Result<()> {
        if self.l == 0 || self.m == 0 {
            return Err(Error::param("biclique sides l, m must be positive"));
        }
        if self.p < 2 {
            return Err(Error::param("clique size p must be at least 2"));
        }
        if self.q < self.p {
            return Err(Error::param("target chromatic number q must be at least p"));
        }
        if self.q < 3 {
            return Err(Error::param(
                "q must be at least 3 (q = 2 makes the block graph bipartite)",
            ));
        }
        Ok(())
    }
}

/// The separation graph with the certificates located inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryGraph {
    pub graph: Graph,
    /// One copy of the block graph (`K_p + K_{l,m} + T` with two linking edges).
    pub block: Graph,
    /// Left and right sides of the `K_{l,m}` in the first copy.
    pub biclique: (Vec<Vertex>, Vec<Vertex>),
    /// The `K_p` vertices of the first copy.
    pub clique: Vec<Vertex>,
    /// Vertices of the triangle-free part in the first copy.
    pub triangle_free: Vec<Vertex>,
    /// Designated vertex of each copy; these are the only neighbors of `z`.
    pub s: [Vertex; 2],
    pub z: Vertex,
}

/// Block layout: `K_p` at `0..p`, `K_{l,m}` at `p..p+l+m`, `T` after that.
/// Linking edges are `{0, p}` (clique to biclique) and `{1, p+l+m}` (clique to `T`).
/// The final graph is the gadget on two disjoint copies of the block with
/// base point 0 in each.
pub fn build_corollary_graph(params: CorollaryParams) -> Result<CorollaryGraph> {
    params.validate()?;
    let CorollaryParams { l, m, p, q } = params;
    let kp = construct_family(Family::Complete { p })?;
    let klm = construct_family(Family::CompleteBipartite { l, m })?;
    let t = triangle_free_chromatic(q)?;

    let union = kp.disjoint_union(&klm).disjoint_union(&t);
    let (a, b, c, d) = (0, 1, p, p + l + m);
    let mut edges: Vec<(Vertex, Vertex)> = union.edges().collect();
    edges.push((a, c));
    edges.push((b, d));
    let block = Graph::from_edges(union.n(), edges)?;

    let spec = GadgetSpec::new(block.clone(), 0, block.clone(), 0)?;
    let gadget = build_gadget(&spec)?;
    Ok(CorollaryGraph {
        biclique: ((p..p + l).collect(), (p + l..p + l + m).collect()),
        clique: (0..p).collect(),
        triangle_free: (d..block.n()).collect(),
        s: [gadget.x, gadget.y],
        z: gadget.z,
        graph: gadget.graph,
        block,
    })
}
