use std::collections::BTreeSet;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A face as a strictly increasing vertex list.
pub type Face = Vec<Vertex>;

/// Default cap on the total number of enumerated faces.
pub const DEFAULT_FACE_LIMIT: usize = 10_000_000;

/// All faces of a complex by dimension, each list strictly sorted so that a
/// face's position is its row/column index in boundary matrices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceTable {
    by_dim: Vec<Vec<Face>>,
}

impl FaceTable {
    /// Highest dimension present in the table (lists may be empty).
    pub fn max_dim(&self) -> Option<usize> {
        self.by_dim.len().checked_sub(1)
    }

    /// Faces of dimension `dim`, or `None` if the table stops below `dim`.
    pub fn faces(&self, dim: usize) -> Option<&[Face]> {
        self.by_dim.get(dim).map(Vec::as_slice)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.by_dim.get(dim).map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, face: &[Vertex]) -> Option<usize> {
        let dim = face.len().checked_sub(1)?;
        self.by_dim
            .get(dim)?
            .binary_search_by(|f| f.as_slice().cmp(face))
            .ok()
    }
}

/// Enumerates every face of dimension `<= max_dim`. Fails with
/// [`Error::Budget`] as soon as more than `limit` distinct faces are found.
pub fn faces_up_to(c: &SimplicialComplex, max_dim: usize, limit: usize) -> Result<FaceTable> {
    let mut by_dim = Vec::with_capacity(max_dim + 1);
    let mut total = 0usize;
    for dim in 0..=max_dim {
        let size = dim + 1;
        let mut set: BTreeSet<Face> = BTreeSet::new();
        for facet in c.facets().iter().filter(|f| f.len() >= size) {
            let mut over = false;
            for_each_subset(facet, size, |s| {
                if !over && !set.contains(s) {
                    set.insert(s.to_vec());
                    over = total + set.len() > limit;
                }
                !over
            });
            if over {
                return Err(Error::Budget { dim, limit });
            }
        }
        total += set.len();
        by_dim.push(set.into_iter().collect());
    }
    Ok(FaceTable { by_dim })
}

/// Calls `f` on every `size`-subset of `items` in lexicographic order until it
/// returns false.
fn for_each_subset(items: &[Vertex], size: usize, mut f: impl FnMut(&[Vertex]) -> bool) {
    let n = items.len();
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf: Vec<Vertex> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if !f(&buf) {
            return;
        }
        let mut i = size;
        while i > 0 && idx[i - 1] == n - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..size {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i - 1..size {
            buf[j] = items[idx[j]];
        }
    }
}

/// Alternating face count over all dimensions (unreduced; 0 for the empty complex).
pub fn euler_characteristic(c: &SimplicialComplex, limit: usize) -> Result<i64> {
    let Some(dim) = c.dimension() else {
        return Ok(0);
    };
    let table = faces_up_to(c, dim, limit)?;
    Ok((0..=dim)
        .map(|i| {
            let n = table.count(i) as i64;
            if i % 2 == 0 {
                n
            } else {
                -n
            }
        })
        .sum())
}
