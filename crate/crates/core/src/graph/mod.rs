//! Finite simple undirected graphs with contiguous `0..n` vertex ids.
//!
//! A [`Graph`] is immutable once built. Composite constructions in
//! [`construct`] return offset maps alongside the graph so that witnesses
//! (cliques, bicliques, bridge vertices) can be located after composition.

pub mod construct;
pub mod dimacs;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub use construct::{
    build_corollary_graph, build_gadget, construct_family, mycielskian, triangle_free_chromatic,
    CorollaryGraph, CorollaryParams, Family, Gadget, GadgetSpec,
};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge {{{u}, {v}}} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Checks symmetry, irreflexivity, id range and sortedness.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (v, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::param(format!(
                    "neighbor list of {v} is not strictly sorted"
                )));
            }
            for &u in list {
                if u >= n {
                    return Err(Error::param(format!("neighbor {u} of {v} out of range")));
                }
                if u == v {
                    return Err(Error::param(format!("self-loop at vertex {v}")));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::param(format!("edge {v}->{u} is not symmetric")));
                }
            }
        }
        Ok(())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + offset).collect()),
        );
        Graph { adj }
    }

    /// Subgraph induced by `vertices` (sorted, deduplicated). Vertex `i` of the
    /// result corresponds to `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    /// Component label per vertex, labels numbered by smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if label[u] == usize::MAX {
                        label[u] = count;
                        queue.push_back(u);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// True iff the graph has at most one component.
    pub fn is_connected(&self) -> bool {
        self.component_labels().0 <= 1
    }

    /// Two-colors the graph by BFS, or returns an odd cycle.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if side[u] == u8::MAX {
                        side[u] = 1 - side[v];
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        queue.push_back(u);
                    } else if side[u] == side[v] {
                        return Bipartiteness::OddCycle(odd_cycle(v, u, &parent, &depth));
                    }
                }
            }
        }
        Bipartiteness::Bipartite(side)
    }
}

/// Cycle through the BFS tree paths of `a` and `b` (same side, adjacent).
fn odd_cycle(a: Vertex, b: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Outcome of a bipartiteness test, with witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Side (0 or 1) of each vertex; a proper 2-coloring.
    Bipartite(Vec<u8>),
    /// Vertices of an odd cycle; consecutive entries (and last/first) are adjacent.
    OddCycle(Vec<Vertex>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}
