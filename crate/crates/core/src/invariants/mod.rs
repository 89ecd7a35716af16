//! Exact combinatorial invariants: clique number, chromatic number, and
//! checkers for the witnesses they return.

mod bitset;
pub mod blocks;
mod clique;
mod coloring;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use clique::max_clique;
pub use coloring::{chromatic_number, greedy_dsatur_bound, is_k_colorable, MAX_SEARCH_COLORS};

/// A proper coloring using exactly the colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringWitness {
    pub k: usize,
    pub assignment: Vec<usize>,
}

impl ColoringWitness {
    /// Relabels colors in order of first appearance (by vertex id), so `k` is
    /// the number of distinct colors.
    pub fn from_assignment(raw: Vec<usize>) -> Self {
        let mut relabel: Vec<usize> = Vec::new();
        let mut map = std::collections::HashMap::new();
        for &c in &raw {
            let next = map.len();
            relabel.push(*map.entry(c).or_insert(next));
        }
        ColoringWitness {
            k: map.len(),
            assignment: relabel,
        }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(Error::Certificate(format!(
                "coloring covers {} vertices, graph has {}",
                self.assignment.len(),
                g.n()
            )));
        }
        let mut used = vec![false; self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            if c >= self.k {
                return Err(Error::Certificate(format!(
                    "vertex {v} has color {c} >= k = {}",
                    self.k
                )));
            }
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(Error::Certificate(format!("color {c} is unused")));
        }
        if let Some((u, v)) = g
            .edges()
            .find(|&(u, v)| self.assignment[u] == self.assignment[v])
        {
            return Err(Error::Certificate(format!(
                "edge {{{u}, {v}}} is monochromatic"
            )));
        }
        Ok(())
    }
}

/// A set of pairwise adjacent vertices, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueWitness {
    pub vertices: Vec<Vertex>,
}

impl CliqueWitness {
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Certificate(
                "clique vertices not strictly sorted".into(),
            ));
        }
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::Certificate(format!(
                "clique vertex {v} out of range"
            )));
        }
        for (i, &u) in self.vertices.iter().enumerate() {
            for &v in &self.vertices[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(Error::Certificate(format!("{u} and {v} are not adjacent")));
                }
            }
        }
        Ok(())
    }
}

/// Some triangle of `g`, or `None` if `g` is triangle-free.
pub fn contains_triangle(g: &Graph) -> Option<CliqueWitness> {
    for (u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let mut t = vec![u, v, a[i]];
                    t.sort_unstable();
                    return Some(CliqueWitness { vertices: t });
                }
            }
        }
    }
    None
}

/// Checks that every vertex of `a` is adjacent to every vertex of `b`, i.e.
/// `g` contains `K_{|a|,|b|}` as a subgraph. Edges inside a side are ignored.
pub fn verify_biclique_certificate(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Certificate("biclique sides must be nonempty".into()));
    }
    if let Some(&v) = a.iter().chain(b).find(|&&v| v >= g.n()) {
        return Err(Error::Certificate(format!(
            "biclique vertex {v} out of range"
        )));
    }
    if let Some(&v) = a.iter().find(|v| b.contains(v)) {
        return Err(Error::Certificate(format!("vertex {v} is on both sides")));
    }
    Ok(a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v))))
}
