//! Biconnected components (blocks). Two blocks share at most one vertex, a
//! cut vertex, so colorings of blocks can be glued by permuting colors.

use crate::graph::{Graph, Vertex};

/// Vertex sets of all blocks with at least one edge, each sorted; blocks are
/// ordered by their smallest vertex, then lexicographically.
pub fn blocks(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&u) = g.neighbors(v).get(*next) {
                *next += 1;
                if disc[u] == usize::MAX {
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    edge_stack.push((v, u));
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                // parent separates v's subtree: pop one block
                let mut verts = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    verts.push(a);
                    verts.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                verts.sort_unstable();
                verts.dedup();
                out.push(verts);
            }
        }
    }
    out.sort();
    out
}
