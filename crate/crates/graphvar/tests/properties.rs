//! Property tests for the matroid primitives and exact polynomial engines.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

use graphvar::graph::{EdgeSet, ExtNat, Graph};
use graphvar::partition::{enumerate_partitions, SetPartition};
use graphvar::polynomial::{q_integer, QPolynomial, XYPolynomial};
use graphvar::tutte::{spanning_tree_count, tutte_corank_nullity, tutte_deletion_contraction};

fn arb_simple_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, edges).expect("valid edges")
        })
    })
}

fn arb_multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |edges| Graph::new(n, edges).expect("valid edges"))
    })
}

fn arb_qpoly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-9i64..=9, 0..6)
        .prop_map(|cs| QPolynomial::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

fn arb_xypoly() -> impl Strategy<Value = XYPolynomial> {
    prop::collection::vec(((0u32..4, 0u32..4), -9i64..=9), 0..5).prop_map(|terms| {
        let mut p = XYPolynomial::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, &BigInt::from(c));
        }
        p
    })
}

/// Shortest cycle by exhaustive edge-subset search (independent of the BFS).
fn brute_girth(g: &Graph) -> ExtNat {
    let m = g.edge_count();
    let mut best = u64::MAX;
    for mask in 1u64..(1 << m) {
        let set = EdgeSet(mask as u128);
        if g.nullity(set) != 1 {
            continue;
        }
        let mut deg = vec![0usize; g.vertex_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if set.contains(i) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.iter().all(|&d| d == 0 || d == 2) {
            best = best.min(set.len() as u64);
        }
    }
    if best == u64::MAX {
        ExtNat::Infinity
    } else {
        ExtNat::Finite(best)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_monotone_submodular_nullity_supermodular(g in arb_multigraph(5, 8)) {
        let m = g.edge_count();
        for a in 0u64..(1 << m) {
            for b in 0u64..(1 << m) {
                let (sa, sb) = (EdgeSet(a as u128), EdgeSet(b as u128));
                let union = EdgeSet((a | b) as u128);
                let inter = EdgeSet((a & b) as u128);
                if a & b == a {
                    prop_assert!(g.rank(sa) <= g.rank(sb));
                }
                prop_assert!(g.rank(union) + g.rank(inter) <= g.rank(sa) + g.rank(sb));
                prop_assert!(
                    g.nullity(union) + g.nullity(inter) >= g.nullity(sa) + g.nullity(sb)
                );
            }
        }
    }

    #[test]
    fn contraction_subtracts_rank(g in arb_multigraph(5, 8)) {
        let m = g.edge_count();
        for mask in 0u64..(1 << m) {
            let a = EdgeSet(mask as u128);
            prop_assert_eq!(g.contract(a).rank_all(), g.rank_all() - g.rank(a));
        }
    }

    #[test]
    fn girth_agrees_with_brute_force(g in arb_multigraph(7, 10)) {
        prop_assert_eq!(g.girth(), brute_girth(&g));
    }

    #[test]
    fn tutte_routes_agree(g in arb_simple_graph(6)) {
        prop_assume!(g.edge_count() <= 12);
        prop_assert_eq!(
            tutte_deletion_contraction(&g),
            tutte_corank_nullity(&g).unwrap()
        );
    }

    #[test]
    fn tutte_at_one_one_counts_spanning_trees(g in arb_simple_graph(6)) {
        prop_assume!(g.is_connected());
        let n = g.vertex_count();
        let m = g.edge_count();
        let mut count = 0u64;
        for mask in 0u64..(1 << m) {
            let a = EdgeSet(mask as u128);
            if a.len() == n - 1 && g.rank(a) == n - 1 {
                count += 1;
            }
        }
        prop_assert_eq!(spanning_tree_count(&g).to_u64().unwrap(), count);
    }

    #[test]
    fn qpolynomial_ring_laws(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(
                (&a * &b).degree(),
                Some(a.degree().unwrap() + b.degree().unwrap())
            );
        }
    }

    #[test]
    fn q_integer_geometric_identity(d in 1u32..12) {
        // (q - 1) * [d] = q^d - 1.
        let q_minus_1 = QPolynomial::from_coeffs(vec![BigInt::from(-1), BigInt::one()]);
        let lhs = &q_minus_1 * &q_integer(d).unwrap();
        let mut coeffs = vec![BigInt::from(0); d as usize + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[d as usize] = BigInt::one();
        prop_assert_eq!(lhs, QPolynomial::from_coeffs(coeffs));
    }

    #[test]
    fn xypolynomial_ring_laws(a in arb_xypoly(), b in arb_xypoly(), c in arb_xypoly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn partition_blocks_round_trip(n in 1usize..8, seed in 0u64..1000) {
        let all: Vec<SetPartition> = enumerate_partitions(n).unwrap().collect();
        let pi = &all[(seed as usize) % all.len()];
        let back = SetPartition::from_blocks(n, &pi.blocks()).unwrap();
        prop_assert_eq!(&back, pi);
    }

    #[test]
    fn canonical_key_is_permutation_invariant(g in arb_simple_graph(6), seed in 0u64..5000) {
        let n = g.vertex_count();
        // A seeded permutation of the vertex labels.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = Graph::new(
            n,
            g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        )
        .unwrap();
        prop_assert_eq!(g.canonical_key(), relabeled.canonical_key());
    }
}
