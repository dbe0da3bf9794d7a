use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use lpl_core::connectivity::{classify, restricted_edge_connectivity, LambdaPrimeOptions};
use lpl_core::families::{circulant, random_regular};
use lpl_core::graph::{contract, validate_certificate};
use lpl_core::group::{
    cayley_graph, cyclic_group, semidirect_product, shift_action, shift_semidirect_input, validate_group, Action,
    ActionMap, CayleySpec, Group,
};
use lpl_core::replacement::{default_rotation_map, replacement_product, RotationStrategy};
use lpl_core::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..n * 3)
            .prop_map(move |pairs| Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap())
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        // a random spanning tree plus random chords
        let mut state = seed | 1;
        let mut next = move |m: usize| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % m as u64) as usize
        };
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (next(v), v)).collect();
        for _ in 0..next(2 * n) {
            let (u, v) = (next(n), next(n));
            if u != v {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

fn arb_regular() -> impl Strategy<Value = Graph> {
    (4usize..=14, 2usize..=6, any::<u64>())
        .prop_filter("n·d even and d < n", |(n, d, _)| n * d % 2 == 0 && d < n)
        .prop_filter_map("construction failed", |(n, d, s)| random_regular(n, d, s).ok())
}

fn arb_circulant() -> impl Strategy<Value = Graph> {
    (5usize..=24).prop_flat_map(|n| {
        prop::collection::btree_set(1..=n / 2, 1..=3)
            .prop_map(move |gens| circulant(n, &gens.into_iter().collect::<Vec<_>>()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjacency_is_symmetric(g in arb_graph(20)) {
        for u in 0..g.vertex_count() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
                prop_assert_ne!(u, v);
            }
        }
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn regular_graphs_have_edge_degree_two_d_minus_two(g in arb_regular()) {
        let d = g.regular_degree().unwrap();
        prop_assert_eq!(g.min_edge_degree().unwrap(), 2 * d - 2);
    }

    #[test]
    fn contraction_preserves_boundaries(g in arb_graph(14), cut in 1usize..13) {
        let n = g.vertex_count();
        let cut = cut.min(n - 1);
        let left: Vec<usize> = (0..cut).collect();
        let right: Vec<usize> = (cut..n).collect();
        let (mg, map) = contract(&g, &[left.clone(), right]).unwrap();
        prop_assert_eq!(mg.capacity(0, 1) as usize, g.edge_boundary(&left).len());
        prop_assert!(map.iter().all(|&b| b < 2));
    }

    #[test]
    fn restricted_cut_certificates_disconnect_without_isolating(g in arb_connected(12)) {
        let Ok(cut) = restricted_edge_connectivity(&g, &LambdaPrimeOptions::default()) else {
            return Ok(());
        };
        prop_assert!(validate_certificate(&g, &cut.certificate).is_ok());
        let removed: BTreeSet<(usize, usize)> = cut.certificate.cut_edges.iter().copied().collect();
        let rest = Graph::from_edges(g.vertex_count(), g.edges().filter(|e| !removed.contains(e))).unwrap();
        prop_assert!(!rest.is_connected());
        prop_assert!((0..rest.vertex_count()).all(|v| rest.degree(v) > 0));
        prop_assert_eq!(removed.len(), cut.value);
    }

    #[test]
    fn connectivity_sandwich(g in arb_connected(12)) {
        let r = classify(&g, &LambdaPrimeOptions::default()).unwrap();
        prop_assert!(r.kappa <= r.lambda && r.lambda <= r.delta);
        if let (Some(lp), Some(xi)) = (r.lambda_prime, r.xi) {
            prop_assert!(r.lambda <= lp && lp <= xi);
            prop_assert_eq!(r.super_lambda, lp > r.lambda);
        }
    }

    #[test]
    fn circulant_rotation_is_an_automorphism(g in arb_circulant()) {
        let n = g.vertex_count();
        for (u, v) in g.edges() {
            prop_assert!(g.has_edge((u + 1) % n, (v + 1) % n));
        }
    }

    #[test]
    fn transitivity_shortcut_agrees_on_circulants(g in arb_circulant()) {
        prop_assume!(g.is_connected());
        let plain = restricted_edge_connectivity(&g, &LambdaPrimeOptions::default()).map(|c| c.value);
        let fast = restricted_edge_connectivity(&g, &LambdaPrimeOptions::transitive()).map(|c| c.value);
        prop_assert_eq!(plain.ok(), fast.ok());
    }

    #[test]
    fn replacement_product_shape(g1 in arb_regular(), seed in any::<u64>(), d2 in 1usize..4) {
        let d1 = g1.regular_degree().unwrap();
        prop_assume!(d2 < d1 && d1 * d2 % 2 == 0);
        let g2 = random_regular(d1, d2, seed).unwrap();
        let rot = default_rotation_map(&g1, RotationStrategy::SortedNeighbors).unwrap();
        let (p, blocks) = replacement_product(&g1, &rot, &g2).unwrap();
        prop_assert_eq!(p.vertex_count(), g1.vertex_count() * d1);
        prop_assert_eq!(p.regular_degree(), Some(d2 + 1));
        for (u, v) in p.edges() {
            let same = blocks.block_of(u) == blocks.block_of(v);
            if same {
                prop_assert!(g2.has_edge(u % d1, v % d1));
            } else {
                prop_assert!(g1.has_edge(blocks.block_of(u), blocks.block_of(v)));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn semidirect_products_satisfy_group_axioms(n in 2usize..=6, seed in any::<u64>()) {
        let product = semidirect_product(shift_action(n).unwrap(), seed).unwrap();
        prop_assert!(validate_group(product.as_ref(), seed).is_ok());
        prop_assert_eq!(product.order(), n << n);
    }

    #[test]
    fn cyclic_actions_by_automorphisms_give_groups(m in 3usize..=9, k in 1usize..9) {
        // ℤ₂ acting on ℤ_m by inversion when k is odd, trivially otherwise
        let a: Arc<dyn Group> = Arc::new(cyclic_group(m).unwrap());
        let b: Arc<dyn Group> = Arc::new(cyclic_group(2).unwrap());
        let table = vec![(0..m).collect(), (0..m).map(|x| if k % 2 == 1 { (m - x) % m } else { x }).collect()];
        let product = semidirect_product(Action::new(b, a, ActionMap::Table(table)), 0).unwrap();
        prop_assert!(validate_group(product.as_ref(), 0).is_ok());
    }

    #[test]
    fn left_translation_is_a_cayley_automorphism(n in 3usize..=5, g in any::<usize>(), wide in any::<bool>()) {
        let gens: Vec<usize> = if wide && n >= 5 { vec![1, 2] } else { vec![1] };
        let input = shift_semidirect_input(n, &gens).unwrap();
        let product = semidirect_product(input.action.clone(), 0).unwrap();
        let s: Vec<usize> = input
            .b_gens
            .iter()
            .map(|&b| product.id(0, b))
            .chain([product.id(input.x, 0)])
            .collect();
        let spec = CayleySpec::new(product.clone(), s).unwrap();
        let cay = cayley_graph(&spec);
        let g = g % product.order();
        for (u, v) in cay.edges() {
            prop_assert!(cay.has_edge(product.op(g, u), product.op(g, v)));
        }
    }
}
