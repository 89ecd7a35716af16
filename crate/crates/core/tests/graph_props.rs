mod common;

use nbhd::complex::neighborhood_complex;
use nbhd::graph::dimacs::{parse_dimacs, to_dimacs};
use nbhd::graph::{build_gadget, construct_family, mycielskian, Family, GadgetSpec, Graph};
use nbhd::invariants::{chromatic_number, contains_triangle, greedy_dsatur_bound, max_clique};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solvers_match_brute_force(g in graph_strategy(8)) {
        let (chi, w) = chromatic_number(&g).unwrap();
        let (omega, c) = max_clique(&g);
        prop_assert_eq!(chi, common::brute_chromatic(&g));
        prop_assert_eq!(omega, common::brute_clique(&g));
        prop_assert!(w.check(&g).is_ok() && c.check(&g).is_ok());
        prop_assert!(chi <= greedy_dsatur_bound(&g).0);
    }

    #[test]
    fn mycielskian_counts(g in graph_strategy(9)) {
        let m = mycielskian(&g).unwrap();
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(m.edge_count(), 3 * g.edge_count() + g.n());
        if contains_triangle(&g).is_none() {
            prop_assert!(contains_triangle(&m).is_none());
        }
    }

    #[test]
    fn gadget_sizes(h in graph_strategy(6), k in graph_strategy(6), x in 0usize..6, y in 0usize..6) {
        let (x, y) = (x % h.n(), y % k.n());
        let gadget = build_gadget(&GadgetSpec::new(h.clone(), x, k.clone(), y).unwrap()).unwrap();
        prop_assert_eq!(gadget.graph.n(), h.n() + k.n() + 1);
        prop_assert_eq!(gadget.graph.edge_count(), h.edge_count() + k.edge_count() + 2);
        prop_assert_eq!(gadget.graph.neighbors(gadget.z), &[x, h.n() + y][..]);
    }

    #[test]
    fn dimacs_round_trip(g in graph_strategy(10)) {
        let text = to_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&back.graph, &g);
        prop_assert_eq!(to_dimacs(&back.graph), text);
    }

    #[test]
    fn neighborhood_complex_components(g in graph_strategy(9)) {
        prop_assume!(g.is_connected() && g.edge_count() > 0);
        let c = neighborhood_complex(&g);
        let want = if g.is_bipartite().is_bipartite() { 2 } else { 1 };
        prop_assert_eq!(c.component_count(), want);
        for (i, f) in c.facets().iter().enumerate() {
            prop_assert!(c.facets().iter().enumerate().all(|(j, e)| i == j || !f.iter().all(|v| e.contains(v))));
        }
    }
}

#[test]
fn kneser_degrees() {
    for n in 1..=7 {
        for k in 1..=n / 2 {
            let g = construct_family(Family::Kneser { n, k }).unwrap();
            assert_eq!(g.n(), binomial(n, k));
            assert!(
                (0..g.n()).all(|v| g.degree(v) == binomial(n - k, k)),
                "KG({n},{k})"
            );
        }
    }
}

#[test]
fn corpus_facets_are_antichains() {
    for (name, g) in common::corpus() {
        let c = neighborhood_complex(&g);
        let facets = c.facets();
        for (i, f) in facets.iter().enumerate() {
            for (j, e) in facets.iter().enumerate() {
                assert!(
                    i == j || !f.iter().all(|v| e.contains(v)),
                    "{name}: {f:?} inside {e:?}"
                );
            }
        }
    }
}

#[test]
fn mycielski_iterates_of_k2() {
    let k2 = construct_family(Family::Complete { p: 2 }).unwrap();
    let c5 = mycielskian(&k2).unwrap();
    let grotzsch = mycielskian(&c5).unwrap();
    assert_eq!((c5.n(), c5.edge_count()), (5, 5));
    assert_eq!((grotzsch.n(), grotzsch.edge_count()), (11, 20));
    assert_eq!(chromatic_number(&grotzsch).unwrap().0, 4);
    assert_eq!(max_clique(&grotzsch).0, 2);
}
