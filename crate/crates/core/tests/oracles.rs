//! Cross-checks against a from-scratch model of P(n,k) that shares no code
//! with the library.

use gpcover::cover::{is_cover, semi_optimal, stats};
use gpcover::harness::sampling::{random_nontrivial_cover, rng_for};
use gpcover::solver::{beta_bruteforce, beta_exact, enumerate_min_covers};
use gpcover::{Cover, GraphParams, PetersenGraph, Side, VertexId};
use proptest::prelude::*;

/// Dense adjacency bitsets: `u_i -> i - 1`, `v_i -> n + i - 1`.
fn adjacency(n: usize, k: usize) -> Vec<u64> {
    let mut adj = vec![0u64; 2 * n];
    let mut add = |a: usize, b: usize| {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    };
    for i in 0..n {
        add(i, (i + 1) % n);
        add(i, n + i);
        add(n + i, n + (i + k) % n);
    }
    adj
}

/// Plain include/exclude recursion for the independence number.
fn mis(adj: &[u64], rest: u64) -> u32 {
    if rest == 0 {
        return 0;
    }
    let v = rest.trailing_zeros() as usize;
    let nb = adj[v] & rest;
    let take = 1 + mis(adj, rest & !nb & !(1 << v));
    if nb == 0 {
        return take;
    }
    take.max(mis(adj, rest & !(1 << v)))
}

fn oracle_beta(n: usize, k: usize) -> usize {
    2 * n - mis(&adjacency(n, k), (1u64 << (2 * n)) - 1) as usize
}

fn two_color(adj: &[u64]) -> bool {
    let mut color = vec![-1i8; adj.len()];
    for s in 0..adj.len() {
        if color[s] >= 0 {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in 0..adj.len() {
                if adj[v] >> w & 1 == 1 {
                    if color[w] < 0 {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `BETA[n - 3][k - 1]`, produced by `oracle_beta` and frozen.
const BETA: [&[usize]; 14] = [
    &[4],
    &[4],
    &[6, 6],
    &[6, 8],
    &[8, 9, 9],
    &[8, 10, 8],
    &[10, 11, 11, 11],
    &[10, 12, 10, 12],
    &[12, 14, 13, 13, 14],
    &[12, 15, 12, 15, 12],
    &[14, 16, 15, 15, 16, 16],
    &[14, 17, 14, 17, 14, 16],
    &[16, 18, 17, 18, 18, 18, 18],
    &[16, 20, 16, 18, 16, 19, 16],
];

fn params() -> impl Strategy<Value = GraphParams> {
    (3usize..=30).prop_flat_map(|n| (Just(n), 1..=(n - 1) / 2)).prop_map(|(n, k)| GraphParams::new(n, k).unwrap())
}

#[test]
fn frozen_table_matches_oracle() {
    for n in 3..=12 {
        for k in 1..=(n - 1) / 2 {
            assert_eq!(oracle_beta(n, k), BETA[n - 3][k - 1], "P({n},{k})");
        }
    }
}

#[test]
fn solvers_match_frozen_table() {
    for n in 3..=16 {
        for k in 1..=(n - 1) / 2 {
            let g = PetersenGraph::new(n, k).unwrap();
            let expected = BETA[n - 3][k - 1];
            let exact = beta_exact(&g).unwrap();
            assert_eq!(exact.beta, expected, "branch and bound P({n},{k})");
            assert!(is_cover(&g, &exact.witness));
            assert_eq!(exact.witness.size(), expected);
            if g.vertex_count() <= 26 {
                assert_eq!(beta_bruteforce(&g).unwrap().beta, expected, "brute force P({n},{k})");
            }
        }
    }
}

#[test]
fn solver_matches_oracle_beyond_table() {
    for n in 17..=20 {
        for k in 1..=(n - 1) / 2 {
            let g = PetersenGraph::new(n, k).unwrap();
            assert_eq!(beta_exact(&g).unwrap().beta, oracle_beta(n, k), "P({n},{k})");
        }
    }
}

#[test]
fn edges_match_definition() {
    for p in GraphParams::admissible_up_to(20) {
        let g = PetersenGraph::from_params(p);
        let adj = adjacency(p.n(), p.k());
        for (v, row) in adj.iter().enumerate() {
            let mut mine: Vec<usize> = (0..adj.len()).filter(|w| row >> w & 1 == 1).collect();
            let mut theirs = g.dense_neighbors(v).to_vec();
            mine.sort();
            theirs.sort();
            assert_eq!(mine, theirs, "{p} vertex {v}");
        }
    }
}

#[test]
fn enumeration_matches_brute_force_count() {
    for p in GraphParams::admissible_up_to(9) {
        let g = PetersenGraph::from_params(p);
        let adj = adjacency(p.n(), p.k());
        let beta = BETA[p.n() - 3][p.k() - 1];
        let full = (1u64 << (2 * p.n())) - 1;
        let mut expected: Vec<u128> = (0..=full)
            .filter(|m| m.count_ones() as usize == beta)
            .filter(|m| {
                // complement independent
                let out = full & !m;
                (0..adj.len()).all(|v| out >> v & 1 == 0 || adj[v] & out == 0)
            })
            .map(u128::from)
            .collect();
        expected.sort();
        let all = enumerate_min_covers(&g).unwrap();
        let got: Vec<u128> = all.covers.iter().map(Cover::mask).collect();
        assert_eq!(all.beta, beta, "{p}");
        assert_eq!(got, expected, "{p}");
    }
}

#[test]
fn bipartite_iff_parity() {
    for p in GraphParams::admissible_up_to(20) {
        let g = PetersenGraph::from_params(p);
        let bfs = two_color(&adjacency(p.n(), p.k()));
        assert_eq!(bfs, p.n() % 2 == 0 && p.k() % 2 == 1, "{p}");
        assert_eq!(g.is_bipartite().is_bipartite(), bfs, "{p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cubic_with_3n_edges(p in params()) {
        let g = PetersenGraph::from_params(p);
        prop_assert_eq!(g.edge_count(), 3 * p.n());
        prop_assert_eq!(g.edges().len(), 3 * p.n());
        for v in 0..g.vertex_count() {
            let nb = g.dense_neighbors(v);
            prop_assert!(nb.iter().all(|&w| w != v));
            prop_assert!(nb[0] != nb[1] && nb[1] != nb[2] && nb[0] != nb[2]);
            for w in nb {
                prop_assert!(g.dense_neighbors(w).contains(&v));
            }
        }
    }

    #[test]
    fn twin_is_involution(p in params(), i in 1usize..=30, inner in any::<bool>()) {
        let i = (i - 1) % p.n() + 1;
        let v = if inner { VertexId::inner(i) } else { VertexId::outer(i) };
        let g = PetersenGraph::from_params(p);
        prop_assert_eq!(g.twin(g.twin(v)), v);
        prop_assert_ne!(g.twin(v).side, v.side);
        prop_assert!(g.has_edge(v, g.twin(v)));
        prop_assert_eq!(VertexId::from_dense(v.dense(p.n()), p.n()), v);
    }

    #[test]
    fn inner_cycles_partition_v(p in params()) {
        let g = PetersenGraph::from_params(p);
        let cycles = g.inner_cycles();
        prop_assert_eq!(cycles.len(), p.gcd());
        let mut seen = vec![false; p.n() + 1];
        for c in &cycles {
            prop_assert_eq!(c.len(), p.n() / p.gcd());
            for (j, v) in c.iter().enumerate() {
                prop_assert_eq!(v.side, Side::Inner);
                prop_assert!(!seen[v.index]);
                seen[v.index] = true;
                prop_assert!(g.has_edge(*v, c[(j + 1) % c.len()]));
            }
        }
    }

    #[test]
    fn complement_of_witness_is_independent(p in params()) {
        prop_assume!(p.n() <= 24);
        let g = PetersenGraph::from_params(p);
        let r = beta_exact(&g).unwrap();
        let independent: Vec<VertexId> = g.vertices().filter(|v| !r.witness.contains(*v)).collect();
        prop_assert_eq!(independent.len(), r.independence_number());
        for a in &independent {
            for b in g.neighbors(*a) {
                prop_assert!(r.witness.contains(b));
            }
        }
    }

    #[test]
    fn exact_matches_brute_force(n in 3usize..=13, k in 1usize..=6) {
        prop_assume!(2 * k < n);
        let g = PetersenGraph::new(n, k).unwrap();
        prop_assert_eq!(beta_exact(&g).unwrap().beta, beta_bruteforce(&g).unwrap().beta);
    }

    #[test]
    fn semi_optimal_contracts(p in params(), seed in any::<u64>()) {
        let g = PetersenGraph::from_params(p);
        let c = random_nontrivial_cover(&g, &mut rng_for(&g, seed));
        prop_assert!(is_cover(&g, &c));
        prop_assert!(!c.is_trivial());
        let st = stats(&c).unwrap();
        let so = semi_optimal(&g, &c).unwrap();
        prop_assert!(is_cover(&g, &so));
        prop_assert_eq!(so.size(), p.n() + st.a_minus_b() / 2);
        prop_assert!(so.size() <= c.size());
    }

    #[test]
    fn mask_round_trip(p in params(), bits in any::<u128>()) {
        let mask = bits & ((1u128 << p.vertex_count()) - 1);
        let c = Cover::from_mask(p, mask);
        prop_assert_eq!(c.mask(), mask);
        prop_assert_eq!(Cover::from_certificate(&c.to_certificate()).unwrap(), c);
    }
}
