//! Reduced integral homology of simplicial complexes and the connectivity
//! certificate built on it.
//!
//! Homology is computed from the Smith normal forms of the boundary matrices.
//! Degree 0 uses the augmentation map, so `H̃0` of a complex with `c`
//! components has rank `c - 1`.

mod matrix;
mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::complex::{faces_up_to, FaceTable, SimplicialComplex};
use crate::error::{Error, Result};

pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, smith_normal_form_with_transforms, SnfResult, SnfTransforms};

/// Homology degrees computed unless asked otherwise.
pub const DEFAULT_CAP: usize = 2;

/// Boundary operator from `dim`-faces to `(dim-1)`-faces. Dropping the
/// `j`-th vertex of a sorted face gets sign `(-1)^j`.
pub fn boundary_matrix(table: &FaceTable, dim: usize) -> Result<IntegerMatrix> {
    if dim == 0 {
        return Err(Error::param("boundary matrices start at dimension 1"));
    }
    let upper = table.faces(dim).ok_or(Error::MissingDimension(dim))?;
    let lower = table
        .faces(dim - 1)
        .ok_or(Error::MissingDimension(dim - 1))?;
    let mut columns = Vec::with_capacity(upper.len());
    let mut sub = Vec::with_capacity(dim);
    for face in upper {
        let mut col: Vec<(usize, BigInt)> = Vec::with_capacity(face.len());
        for j in 0..face.len() {
            sub.clear();
            sub.extend(
                face.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &v)| v),
            );
            let row = lower
                .binary_search(&sub)
                .map_err(|_| Error::MissingDimension(dim - 1))?;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            col.push((row, BigInt::from(sign)));
        }
        col.sort_by_key(|e| e.0);
        columns.push(col);
    }
    IntegerMatrix::from_columns(lower.len(), columns)
}

/// One reduced homology group `Z^betti ⊕ Z/t1 ⊕ ... ⊕ Z/tk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    #[serde(rename = "dim")]
    pub dimension: usize,
    pub betti: usize,
    #[serde(serialize_with = "decimal_strings")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "H~{} = 0", self.dimension)
        } else {
            write!(f, "H~{} = {}", self.dimension, parts.join(" + "))
        }
    }
}

pub(crate) fn decimal_strings<S: Serializer>(
    xs: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(ToString::to_string))
}

/// Reduced homology in degrees `0..=cap`.
pub fn reduced_homology_up_to(
    c: &SimplicialComplex,
    cap: usize,
    limit: usize,
) -> Result<Vec<HomologyGroup>> {
    let table = faces_up_to(c, cap + 1, limit)?;
    let boundaries = (1..=cap + 1)
        .map(|d| boundary_matrix(&table, d))
        .collect::<Result<Vec<_>>>()?;
    // independent matrices; collect keeps degree order
    let snfs: Vec<SnfResult> = boundaries.par_iter().map(smith_normal_form).collect();
    let augmentation_rank = usize::from(!c.is_empty());
    Ok((0..=cap)
        .map(|i| {
            let rank_in = if i == 0 {
                augmentation_rank
            } else {
                snfs[i - 1].rank()
            };
            let out = &snfs[i];
            HomologyGroup {
                dimension: i,
                betti: table.count(i) - rank_in - out.rank(),
                torsion: out.torsion(),
            }
        })
        .collect())
}

pub fn reduced_homology(c: &SimplicialComplex, dim: usize, limit: usize) -> Result<HomologyGroup> {
    let mut groups = reduced_homology_up_to(c, dim, limit)?;
    Ok(groups.pop().expect("dim + 1 groups"))
}

/// Homologically estimated connectivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologicalConnectivity {
    /// Empty complex (reported as conn = -2).
    Empty,
    /// First nonvanishing reduced degree minus one.
    Exactly(i64),
    /// All reduced groups vanish through the cap.
    AtLeast(usize),
}

impl HomologicalConnectivity {
    pub fn from_groups(nonempty: bool, groups: &[HomologyGroup]) -> Self {
        if !nonempty {
            return HomologicalConnectivity::Empty;
        }
        match groups.iter().find(|g| !g.is_trivial()) {
            Some(g) => HomologicalConnectivity::Exactly(g.dimension as i64 - 1),
            None => HomologicalConnectivity::AtLeast(groups.len().saturating_sub(1)),
        }
    }
}

impl fmt::Display for HomologicalConnectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologicalConnectivity::Empty => f.write_str("empty"),
            HomologicalConnectivity::Exactly(k) => write!(f, "{k}"),
            HomologicalConnectivity::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

impl Serialize for HomologicalConnectivity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            HomologicalConnectivity::Exactly(k) => s.serialize_i64(*k),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

pub fn homological_connectivity(
    c: &SimplicialComplex,
    cap: usize,
    limit: usize,
) -> Result<HomologicalConnectivity> {
    if c.is_empty() {
        return Ok(HomologicalConnectivity::Empty);
    }
    let groups = reduced_homology_up_to(c, cap, limit)?;
    Ok(HomologicalConnectivity::from_groups(true, &groups))
}

/// Evidence for `conn = 0`: nonempty, path-connected, and `H1 != 0`, which
/// forces a nontrivial fundamental group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityCertificate {
    pub nonempty: bool,
    pub connected: bool,
    pub components: usize,
    pub h1: HomologyGroup,
    pub certified_conn_zero: bool,
    pub homological_connectivity: HomologicalConnectivity,
    /// Set when the certificate fails: the connectivity value above then
    /// only reflects homology, not homotopy.
    pub homological_only: bool,
    /// Reduced homology in degrees `0..=cap`.
    pub homology: Vec<HomologyGroup>,
}

pub fn certify_conn_zero(c: &SimplicialComplex, limit: usize) -> Result<ConnectivityCertificate> {
    certify_conn_zero_with_cap(c, DEFAULT_CAP, limit)
}

/// As [`certify_conn_zero`], reporting homology through degree `max(cap, 1)`.
pub fn certify_conn_zero_with_cap(
    c: &SimplicialComplex,
    cap: usize,
    limit: usize,
) -> Result<ConnectivityCertificate> {
    let cap = cap.max(1);
    let nonempty = !c.is_empty();
    let components = c.component_count();
    let connected = nonempty && components == 1;
    let homology = reduced_homology_up_to(c, cap, limit)?;
    let h1 = homology[1].clone();
    let certified = nonempty && connected && !h1.is_trivial();
    Ok(ConnectivityCertificate {
        nonempty,
        connected,
        components,
        certified_conn_zero: certified,
        homological_connectivity: HomologicalConnectivity::from_groups(nonempty, &homology),
        homological_only: !certified,
        h1,
        homology,
    })
}

/// True when `d1 | d2 | ...` holds for a list of positive integers.
pub fn is_divisibility_chain(xs: &[BigInt]) -> bool {
    use num_integer::Integer;
    xs.iter().all(|x| x >= &BigInt::one()) && xs.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{neighborhood_complex, DEFAULT_FACE_LIMIT};
    use crate::graph::{construct_family, Family};

    fn ncx(f: Family) -> SimplicialComplex {
        neighborhood_complex(&construct_family(f).unwrap())
    }

    fn bettis(c: &SimplicialComplex, cap: usize) -> Vec<usize> {
        reduced_homology_up_to(c, cap, DEFAULT_FACE_LIMIT)
            .unwrap()
            .iter()
            .map(|g| g.betti)
            .collect()
    }

    #[test]
    fn single_edge_boundary() {
        let c = SimplicialComplex::from_faces(2, vec![vec![0, 1]]).unwrap();
        let t = faces_up_to(&c, 1, 10).unwrap();
        let d = boundary_matrix(&t, 1).unwrap();
        assert_eq!(
            d.to_rows(),
            vec![vec![BigInt::from(-1)], vec![BigInt::from(1)]]
        );
        assert!(matches!(
            boundary_matrix(&t, 2),
            Err(Error::MissingDimension(2))
        ));
        assert!(boundary_matrix(&t, 0).is_err());
    }

    #[test]
    fn hollow_triangle_boundary_rank() {
        let c = SimplicialComplex::simplex_boundary(2);
        let t = faces_up_to(&c, 1, 10).unwrap();
        let d = boundary_matrix(&t, 1).unwrap();
        assert_eq!((d.rows(), d.cols()), (3, 3));
        assert_eq!(smith_normal_form(&d).rank(), 2);
    }

    #[test]
    fn boundary_squares_to_zero_on_k4_complex() {
        let c = ncx(Family::Complete { p: 4 });
        let t = faces_up_to(&c, 3, DEFAULT_FACE_LIMIT).unwrap();
        let d1 = boundary_matrix(&t, 1).unwrap();
        let d2 = boundary_matrix(&t, 2).unwrap();
        assert!(d1.mul(&d2).unwrap().is_zero());
    }

    #[test]
    fn reference_homology() {
        let simplex = SimplicialComplex::from_faces(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(bettis(&simplex, 2), vec![0, 0, 0]);
        assert_eq!(bettis(&ncx(Family::Cycle { n: 4 }), 1), vec![1, 0]);
        assert_eq!(bettis(&ncx(Family::Complete { p: 4 }), 2), vec![0, 0, 1]);
        let g = reduced_homology(&ncx(Family::Complete { p: 4 }), 2, DEFAULT_FACE_LIMIT).unwrap();
        assert_eq!(g.to_string(), "H~2 = Z");
    }

    #[test]
    fn petersen_neighborhood_complex() {
        // frozen from an independent sympy Smith-form computation
        let c = ncx(Family::Kneser { n: 5, k: 2 });
        let groups = reduced_homology_up_to(&c, 2, DEFAULT_FACE_LIMIT).unwrap();
        assert_eq!(
            groups.iter().map(|g| g.betti).collect::<Vec<_>>(),
            vec![0, 11, 0]
        );
        assert!(groups.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn certificates() {
        let cert = certify_conn_zero(&ncx(Family::Cycle { n: 5 }), DEFAULT_FACE_LIMIT).unwrap();
        assert!(cert.certified_conn_zero);
        assert_eq!(cert.h1.betti, 1);
        assert_eq!(
            cert.homological_connectivity,
            HomologicalConnectivity::Exactly(0)
        );

        let cert = certify_conn_zero(&ncx(Family::Cycle { n: 4 }), DEFAULT_FACE_LIMIT).unwrap();
        assert!(!cert.connected && !cert.certified_conn_zero && cert.homological_only);
        assert_eq!(
            cert.homological_connectivity,
            HomologicalConnectivity::Exactly(-1)
        );

        let cert = certify_conn_zero(&ncx(Family::Complete { p: 4 }), DEFAULT_FACE_LIMIT).unwrap();
        assert!(cert.connected && !cert.certified_conn_zero);
        assert_eq!(
            cert.homological_connectivity,
            HomologicalConnectivity::Exactly(1)
        );
    }

    #[test]
    fn connectivity_values() {
        let lim = DEFAULT_FACE_LIMIT;
        let empty = SimplicialComplex::default();
        assert_eq!(
            homological_connectivity(&empty, 2, lim).unwrap(),
            HomologicalConnectivity::Empty
        );
        let k3 = ncx(Family::Complete { p: 3 });
        assert_eq!(
            homological_connectivity(&k3, 2, lim).unwrap(),
            HomologicalConnectivity::Exactly(0)
        );
        let k4 = ncx(Family::Complete { p: 4 });
        assert_eq!(
            homological_connectivity(&k4, 2, lim).unwrap(),
            HomologicalConnectivity::Exactly(1)
        );
        assert_eq!(
            homological_connectivity(&k4, 1, lim).unwrap(),
            HomologicalConnectivity::AtLeast(1)
        );
        let simplex = SimplicialComplex::from_faces(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            homological_connectivity(&simplex, 2, lim).unwrap(),
            HomologicalConnectivity::AtLeast(2)
        );
        assert_eq!(
            serde_json::to_string(&HomologicalConnectivity::AtLeast(2)).unwrap(),
            "\">=2\""
        );
        assert_eq!(
            serde_json::to_string(&HomologicalConnectivity::Exactly(-1)).unwrap(),
            "-1"
        );
    }

    #[test]
    fn homology_json_uses_decimal_strings() {
        let g = HomologyGroup {
            dimension: 1,
            betti: 2,
            torsion: vec![BigInt::from(2), BigInt::from(6)],
        };
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"dim":1,"betti":2,"torsion":["2","6"]}"#
        );
    }
}
