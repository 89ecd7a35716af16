//! Exact vertex coloring.
//!
//! Colorability is decided block by block: a graph is k-colorable iff each
//! biconnected block is, and block colorings glue at cut vertices after a
//! color swap. Inside a block the search is DSATUR branch and bound with a
//! maximum clique precolored and new colors opened one at a time.

use std::collections::VecDeque;

use super::blocks::blocks;
use super::clique::max_clique;
use super::ColoringWitness;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest color count the exhaustive search handles.
pub const MAX_SEARCH_COLORS: usize = 64;

const UNCOLORED: usize = usize::MAX;

/// Greedy DSATUR coloring: repeatedly color the vertex with the most distinct
/// neighbor colors (ties: higher degree, then lower id) with the smallest
/// free color.
pub fn greedy_dsatur_bound(g: &Graph) -> (usize, ColoringWitness) {
    let n = g.n();
    let mut color = vec![UNCOLORED; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == UNCOLORED)
            .max_by_key(|&v| (saturation[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..)
            .find(|&c| !seen[v].get(c).copied().unwrap_or(false))
            .unwrap();
        color[v] = c;
        for &u in g.neighbors(v) {
            if color[u] == UNCOLORED {
                if seen[u].len() <= c {
                    seen[u].resize(c + 1, false);
                }
                if !seen[u][c] {
                    seen[u][c] = true;
                    saturation[u] += 1;
                }
            }
        }
    }
    let w = ColoringWitness::from_assignment(color);
    (w.k, w)
}

/// A proper coloring with at most `k` colors, or `None` if none exists.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<Option<ColoringWitness>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(ColoringWitness::from_assignment(vec![])));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut parts = Vec::new();
    for block in blocks(g) {
        let sub = g.induced_subgraph(&block);
        match color_block(&sub, k)? {
            Some(c) => parts.push((block, c)),
            None => return Ok(None),
        }
    }
    Ok(Some(glue(n, &parts)))
}

/// Chromatic number with an optimal coloring. The empty graph gives 0.
pub fn chromatic_number(g: &Graph) -> Result<(usize, ColoringWitness)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, ColoringWitness::from_assignment(vec![])));
    }
    let mut parts = Vec::new();
    for block in blocks(g) {
        let sub = g.induced_subgraph(&block);
        let (_, c) = block_chromatic(&sub)?;
        parts.push((block, c));
    }
    let w = glue(n, &parts);
    Ok((w.k, w))
}

fn block_chromatic(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let (lower, clique) = max_clique(g);
    let (upper, greedy) = greedy_dsatur_bound(g);
    for k in lower..upper {
        if let Some(c) = search(g, k, &clique.vertices)? {
            return Ok((k, c));
        }
    }
    Ok((upper, greedy.assignment))
}

fn color_block(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    let (upper, greedy) = greedy_dsatur_bound(g);
    if k >= upper {
        return Ok(Some(greedy.assignment));
    }
    let (lower, clique) = max_clique(g);
    if k < lower {
        return Ok(None);
    }
    search(g, k, &clique.vertices)
}

/// Combines per-block colorings (block vertex lists in `g` ids) into one.
/// Blocks are visited breadth-first through shared cut vertices, so each
/// new block meets the colored part in exactly one vertex.
fn glue(n: usize, parts: &[(Vec<Vertex>, Vec<usize>)]) -> ColoringWitness {
    let mut color = vec![UNCOLORED; n];
    let mut blocks_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, (verts, _)) in parts.iter().enumerate() {
        for &v in verts {
            blocks_of[v].push(b);
        }
    }
    let mut done = vec![false; parts.len()];
    for start in 0..parts.len() {
        if done[start] {
            continue;
        }
        done[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            let (verts, local) = &parts[b];
            let anchor = verts.iter().position(|&v| color[v] != UNCOLORED);
            // swap the anchor's local color with its global one
            let (from, to) = anchor.map_or((0, 0), |i| (local[i], color[verts[i]]));
            for (i, &v) in verts.iter().enumerate() {
                let c = local[i];
                let c = if c == from {
                    to
                } else if c == to {
                    from
                } else {
                    c
                };
                if color[v] == UNCOLORED {
                    color[v] = c;
                }
                debug_assert_eq!(color[v], c);
                for &nb in &blocks_of[v] {
                    if !done[nb] {
                        done[nb] = true;
                        queue.push_back(nb);
                    }
                }
            }
        }
    }
    for c in &mut color {
        if *c == UNCOLORED {
            *c = 0;
        }
    }
    ColoringWitness::from_assignment(color)
}

/// Exhaustive DSATUR search for a `k`-coloring of `g`; `clique` gets colors
/// `0..|clique|` up front.
fn search(g: &Graph, k: usize, clique: &[Vertex]) -> Result<Option<Vec<usize>>> {
    if k > MAX_SEARCH_COLORS {
        return Err(Error::param(format!(
            "exact coloring search supports at most {MAX_SEARCH_COLORS} colors, asked for {k}"
        )));
    }
    if clique.len() > k {
        return Ok(None);
    }
    let n = g.n();
    let mut s = DsaturSearch {
        g,
        k,
        color: vec![UNCOLORED; n],
        counts: vec![0; n * k],
        mask: vec![0; n],
        uncolored: n,
    };
    for (c, &v) in clique.iter().enumerate() {
        s.assign(v, c);
    }
    let max_used = clique.len();
    if s.solve(max_used) {
        Ok(Some(s.color))
    } else {
        Ok(None)
    }
}

struct DsaturSearch<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    /// neighbor-color multiplicities, `n * k`
    counts: Vec<u32>,
    /// bit c set iff some neighbor has color c
    mask: Vec<u64>,
    uncolored: usize,
}

impl DsaturSearch<'_> {
    fn assign(&mut self, v: Vertex, c: usize) {
        self.color[v] = c;
        self.uncolored -= 1;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot += 1;
            if *slot == 1 {
                self.mask[u] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: Vertex, c: usize) {
        self.color[v] = UNCOLORED;
        self.uncolored += 1;
        for &u in self.g.neighbors(v) {
            let slot = &mut self.counts[u * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.mask[u] &= !(1 << c);
            }
        }
    }

    /// `opened` is the number of colors in use so far.
    fn solve(&mut self, opened: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let v = (0..self.g.n())
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| {
                (
                    self.mask[v].count_ones(),
                    self.g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        if self.mask[v].count_ones() as usize >= self.k {
            return false;
        }
        // colors beyond the first unopened one are symmetric
        let allowed = (opened + 1).min(self.k);
        for c in 0..allowed {
            if self.mask[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            if self.solve(opened.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}
