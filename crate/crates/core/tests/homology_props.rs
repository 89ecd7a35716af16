mod common;

use nbhd::complex::{euler_characteristic, faces_up_to, SimplicialComplex, DEFAULT_FACE_LIMIT};
use nbhd::homology::{
    boundary_matrix, is_divisibility_chain, reduced_homology_up_to, smith_normal_form,
    smith_normal_form_with_transforms, IntegerMatrix,
};
use proptest::prelude::*;

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=8).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=4.min(n)), 1..=5).prop_map(
            move |faces| {
                SimplicialComplex::from_faces(
                    n,
                    faces.into_iter().map(|f| f.into_iter().collect::<Vec<_>>()),
                )
                .unwrap()
            },
        )
    })
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

/// Determinant over the integers by fraction-free elimination.
fn det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn boundary_of_boundary_vanishes(c in complex_strategy()) {
        let dim = c.dimension().unwrap();
        let table = faces_up_to(&c, dim, DEFAULT_FACE_LIMIT).unwrap();
        for i in 2..=dim {
            let d = boundary_matrix(&table, i - 1).unwrap().mul(&boundary_matrix(&table, i).unwrap()).unwrap();
            prop_assert!(d.is_zero());
        }
    }

    #[test]
    fn snf_matches_minors(data in matrix_strategy()) {
        let m = IntegerMatrix::from_rows(&data).unwrap();
        let expected = common::invariant_factors_by_minors(&data);
        let r = smith_normal_form(&m);
        prop_assert_eq!(&r.invariant_factors, &expected);
        prop_assert!(is_divisibility_chain(&r.invariant_factors));
    }

    #[test]
    fn snf_transforms_are_unimodular(data in matrix_strategy()) {
        let m = IntegerMatrix::from_rows(&data).unwrap();
        let r = smith_normal_form_with_transforms(&m);
        let t = r.transforms.unwrap();
        prop_assert_eq!(t.u.mul(&m).unwrap().mul(&t.v).unwrap(), t.diagonal);
        for x in [&t.u, &t.v] {
            let rows: Vec<Vec<i128>> = x.to_rows().iter()
                .map(|row| row.iter().map(|v| i128::try_from(v).unwrap()).collect())
                .collect();
            prop_assert_eq!(det(rows).abs(), 1);
        }
    }

    #[test]
    fn homology_ignores_facet_order(c in complex_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut facets = c.facets().to_vec();
        facets.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = SimplicialComplex::from_faces(c.num_vertices(), facets).unwrap();
        prop_assert_eq!(
            reduced_homology_up_to(&c, 3, DEFAULT_FACE_LIMIT).unwrap(),
            reduced_homology_up_to(&shuffled, 3, DEFAULT_FACE_LIMIT).unwrap()
        );
    }

    #[test]
    fn euler_characteristic_matches_betti_sum(c in complex_strategy()) {
        let dim = c.dimension().unwrap();
        let h = reduced_homology_up_to(&c, dim, DEFAULT_FACE_LIMIT).unwrap();
        let reduced: i64 = h.iter().map(|g| if g.dimension % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum();
        prop_assert_eq!(reduced + 1, euler_characteristic(&c, DEFAULT_FACE_LIMIT).unwrap());
    }

    #[test]
    fn cones_are_acyclic(c in complex_strategy()) {
        let cone = c.cone();
        let dim = cone.dimension().unwrap();
        let h = reduced_homology_up_to(&cone, dim, DEFAULT_FACE_LIMIT).unwrap();
        prop_assert!(h.iter().all(|g| g.is_trivial()));
    }
}

#[test]
fn simplex_boundaries_are_spheres() {
    for n in 2..=5 {
        let h = reduced_homology_up_to(
            &SimplicialComplex::simplex_boundary(n),
            n,
            DEFAULT_FACE_LIMIT,
        )
        .unwrap();
        let betti: Vec<usize> = h.iter().map(|g| g.betti).collect();
        let mut want = vec![0; n + 1];
        want[n - 1] = 1;
        assert_eq!(betti, want, "n = {n}");
        assert!(h.iter().all(|g| g.torsion.is_empty()));
    }
}

#[test]
fn projective_plane_has_two_torsion() {
    let rp2 = SimplicialComplex::from_faces(
        6,
        [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [2, 4, 5],
            [1, 3, 5],
        ]
        .map(|f| f.to_vec()),
    )
    .unwrap();
    let h = reduced_homology_up_to(&rp2, 2, DEFAULT_FACE_LIMIT).unwrap();
    assert_eq!(h[1].to_string(), "H~1 = Z/2");
    assert!(h[0].is_trivial() && h[2].is_trivial());
}
