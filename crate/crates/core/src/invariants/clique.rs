//! Exact maximum clique by branch and bound with greedy-coloring bounds.

use super::bitset::BitSet;
use super::CliqueWitness;
use crate::graph::{Graph, Vertex};

/// Size of a maximum clique and one such clique. The empty graph gives 0.
pub fn max_clique(g: &Graph) -> (usize, CliqueWitness) {
    let n = g.n();
    if n == 0 {
        return (0, CliqueWitness { vertices: vec![] });
    }
    let adj: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut s = BitSet::new(n);
            for &u in g.neighbors(v) {
                s.insert(u);
            }
            s
        })
        .collect();
    let order = degeneracy_order(g);
    let mut search = Search {
        adj: &adj,
        order: &order,
        best: vec![order[0]],
        current: Vec::new(),
    };
    let mut all = BitSet::new(n);
    for v in 0..n {
        all.insert(v);
    }
    search.expand(all);
    let mut best = search.best;
    best.sort_unstable();
    (best.len(), CliqueWitness { vertices: best })
}

/// Vertices from the densest core outward: reverse of the smallest-last
/// removal order, ties by vertex id.
fn degeneracy_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        removed[v] = true;
        out.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                deg[u] -= 1;
            }
        }
    }
    out.reverse();
    out
}

struct Search<'a> {
    adj: &'a [BitSet],
    order: &'a [Vertex],
    best: Vec<Vertex>,
    current: Vec<Vertex>,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: BitSet) {
        let (verts, bounds) = self.color_sort(&cand);
        for idx in (0..verts.len()).rev() {
            if self.current.len() + bounds[idx] <= self.best.len() {
                return;
            }
            let v = verts[idx];
            self.current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
        }
    }

    /// Greedy color classes over `cand` (in degeneracy order). Returns the
    /// vertices sorted by class and, per position, the class number, which
    /// bounds the clique size among that vertex and those before it.
    fn color_sort(&self, cand: &BitSet) -> (Vec<Vertex>, Vec<usize>) {
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for &v in self.order.iter().filter(|&&v| cand.contains(v)) {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.adj[v].contains(u)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut verts = Vec::new();
        let mut bounds = Vec::new();
        for (i, class) in classes.into_iter().enumerate() {
            for v in class {
                verts.push(v);
                bounds.push(i + 1);
            }
        }
        (verts, bounds)
    }
}
