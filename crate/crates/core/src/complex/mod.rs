//! Abstract simplicial complexes stored by their facets.
//!
//! Only maximal faces are kept; every nonempty subset of a facet is a face.
//! Lower faces are produced on demand by [`faces_up_to`].

mod faces;
pub mod facet_file;
mod union_find;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use faces::{euler_characteristic, faces_up_to, Face, FaceTable, DEFAULT_FACE_LIMIT};
pub use union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Complex generated by `faces`: each face is sorted and deduplicated,
    /// then non-maximal faces are dropped. Facets end up in lexicographic order.
    pub fn from_faces<I, F>(num_vertices: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut all: Vec<Face> = Vec::new();
        for face in faces {
            let mut f: Face = face.into_iter().collect();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(Error::param("empty face in facet list"));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::param(format!(
                    "face vertex {v} outside ground set of size {num_vertices}"
                )));
            }
            all.push(f);
        }
        Ok(SimplicialComplex {
            num_vertices,
            facets: maximal_faces(all),
        })
    }

    /// Size of the ground set `0..n`; some ids may lie in no face.
    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest facet dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    /// Ground-set ids that lie in at least one face, ascending.
    pub fn support(&self) -> Vec<Vertex> {
        let mut used = vec![false; self.num_vertices];
        for f in &self.facets {
            for &v in f {
                used[v] = true;
            }
        }
        (0..self.num_vertices).filter(|&v| used[v]).collect()
    }

    /// Number of connected components of the 1-skeleton, counting only
    /// vertices that belong to some face.
    pub fn component_count(&self) -> usize {
        let (count, _) = self.components();
        count
    }

    /// Component count and, for every ground-set id, its component
    /// representative (`None` for ids in no face).
    pub fn components(&self) -> (usize, Vec<Option<Vertex>>) {
        let mut uf = UnionFind::new(self.num_vertices);
        for f in &self.facets {
            for w in f.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let support = self.support();
        let mut reps: Vec<Vertex> = support.iter().map(|&v| uf.find(v)).collect();
        let mut map = vec![None; self.num_vertices];
        for (&v, &r) in support.iter().zip(&reps) {
            map[v] = Some(r);
        }
        reps.sort_unstable();
        reps.dedup();
        (reps.len(), map)
    }

    /// The cone over this complex with a new apex vertex `num_vertices`.
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.num_vertices;
        let facets = if self.facets.is_empty() {
            vec![vec![apex]]
        } else {
            self.facets
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.push(apex);
                    g
                })
                .collect()
        };
        SimplicialComplex {
            num_vertices: apex + 1,
            facets,
        }
    }

    /// Boundary of the `n`-simplex on `0..=n`: all `n`-element subsets.
    pub fn simplex_boundary(n: usize) -> SimplicialComplex {
        let facets = (0..=n)
            .rev()
            .map(|skip| (0..=n).filter(|&v| v != skip).collect())
            .collect::<Vec<Face>>();
        SimplicialComplex::from_faces(n + 1, facets).expect("valid boundary complex")
    }
}

/// Keeps inclusion-maximal faces, deduplicated, in lexicographic order.
fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable();
    faces.dedup();
    // a face can only be contained in a strictly larger one
    let mut by_size: Vec<usize> = (0..faces.len()).collect();
    by_size.sort_by_key(|&i| std::cmp::Reverse(faces[i].len()));
    let mut keep = vec![false; faces.len()];
    let mut kept: Vec<usize> = Vec::new();
    for &i in &by_size {
        let f = &faces[i];
        let covered = kept
            .iter()
            .any(|&j| faces[j].len() > f.len() && is_subset(f, &faces[j]));
        if !covered {
            keep[i] = true;
            kept.push(i);
        }
    }
    faces
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect()
}

/// Subset test on sorted slices.
pub(crate) fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

/// The neighborhood complex: faces are vertex sets with a common neighbor.
/// Its facets are the maximal nonempty neighborhoods; ground set is `0..n`.
pub fn neighborhood_complex(g: &Graph) -> SimplicialComplex {
    let neighborhoods = (0..g.n())
        .map(|v| g.neighbors(v).to_vec())
        .filter(|nb| !nb.is_empty())
        .collect();
    SimplicialComplex {
        num_vertices: g.n(),
        facets: maximal_faces(neighborhoods),
    }
}
