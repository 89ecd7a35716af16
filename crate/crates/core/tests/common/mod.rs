//! Brute-force oracles, random generators and the shared graph corpus.
#![allow(dead_code)]

use nbhd::complex::SimplicialComplex;
use nbhd::graph::{
    build_corollary_graph, build_gadget, construct_family, mycielskian, triangle_free_chromatic,
    CorollaryParams, Family, GadgetSpec, Graph,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn family(f: Family) -> Graph {
    construct_family(f).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random complex on at most 8 vertices with 1..=5 random facets of size 1..=4.
pub fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.gen_range(1..=8);
    let count = rng.gen_range(1..=5);
    let faces: Vec<Vec<usize>> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=4.min(n));
            let mut f: Vec<usize> = Vec::new();
            while f.len() < size {
                let v = rng.gen_range(0..n);
                if !f.contains(&v) {
                    f.push(v);
                }
            }
            f.sort_unstable();
            f
        })
        .collect();
    SimplicialComplex::from_faces(n, faces).unwrap()
}

/// Chromatic number by DP over independent sets (`n <= 16`).
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .collect();
    let mut dp = vec![usize::MAX; full + 1];
    dp[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let s = sub | low;
            if independent[s] && dp[mask ^ s] != usize::MAX {
                dp[mask] = dp[mask].min(dp[mask ^ s] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    dp[full]
}

/// Clique number by scanning every vertex subset.
pub fn brute_clique(g: &Graph) -> usize {
    let n = g.n();
    (0usize..1 << n)
        .filter(|&s| {
            (0..n)
                .all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn det(m: &[Vec<i64>]) -> BigInt {
    match m.len() {
        0 => BigInt::from(1),
        1 => BigInt::from(m[0][0]),
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign * m[0][j]) * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0usize..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Nonzero invariant factors as quotients of successive determinantal divisors
/// (gcd of all `k x k` minors).
pub fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g.abs());
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Named graphs used by the structural and soundness checks.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for p in 1..=6 {
        out.push((format!("K{p}"), family(Family::Complete { p })));
    }
    for n in 3..=9 {
        out.push((format!("C{n}"), family(Family::Cycle { n })));
    }
    for (l, m) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)] {
        out.push((
            format!("K{l},{m}"),
            family(Family::CompleteBipartite { l, m }),
        ));
    }
    for (n, k) in [(4, 1), (5, 2), (6, 2), (7, 2), (7, 3)] {
        out.push((format!("KG({n},{k})"), family(Family::Kneser { n, k })));
    }
    for q in 3..=5 {
        out.push((format!("T{q}"), triangle_free_chromatic(q).unwrap()));
    }
    out.push((
        "M(C5)".into(),
        mycielskian(&family(Family::Cycle { n: 5 })).unwrap(),
    ));
    out.push((
        "M(K3)".into(),
        mycielskian(&family(Family::Complete { p: 3 })).unwrap(),
    ));
    let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    out.push(("P5".into(), path));
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    out.push(("star3".into(), star));
    out.push(("empty4".into(), Graph::empty(4)));
    out.push((
        "K3+K2".into(),
        family(Family::Complete { p: 3 }).disjoint_union(&family(Family::Complete { p: 2 })),
    ));
    for (hn, h, kn, k) in base_pairs() {
        let spec = GadgetSpec::new(h, 0, k, 0).unwrap();
        out.push((
            format!("gadget({hn},{kn})"),
            build_gadget(&spec).unwrap().graph,
        ));
    }
    for (l, m, p, q) in [(1, 2, 2, 3), (2, 2, 3, 3), (2, 3, 3, 4)] {
        let g = build_corollary_graph(CorollaryParams { l, m, p, q })
            .unwrap()
            .graph;
        out.push((format!("corollary({l},{m},{p},{q})"), g));
    }
    let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
    for i in 0..40 {
        let n = rng.gen_range(2..=10);
        out.push((format!("random{i}"), random_graph(&mut rng, n, 0.45)));
    }
    out
}

pub type NamedPair = (&'static str, Graph, &'static str, Graph);

/// Every unordered pair (with repetition) from K3, K4, C5, C7.
pub fn base_pairs() -> Vec<NamedPair> {
    let base = [
        ("K3", family(Family::Complete { p: 3 })),
        ("K4", family(Family::Complete { p: 4 })),
        ("C5", family(Family::Cycle { n: 5 })),
        ("C7", family(Family::Cycle { n: 7 })),
    ];
    let mut out = Vec::new();
    for i in 0..base.len() {
        for j in i..base.len() {
            out.push((base[i].0, base[i].1.clone(), base[j].0, base[j].1.clone()));
        }
    }
    out
}
