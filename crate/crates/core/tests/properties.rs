use inertia_core::cycles::{analyze_cycles, contract_cycles, frontier_edges};
use inertia_core::generator::{generate_extremal, GeneratorParams, Residue};
use inertia_core::inertia::{
    adjacency_matrix, inertia, inertia_charpoly_oracle, inertia_congruence,
};
use inertia_core::lemmas::lemma_suite;
use inertia_core::matching::{matching_bruteforce, matching_number};
use inertia_core::theorems::{Facts, TheoremReport};
use inertia_core::{Edge, EdgeSet, Graph};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let edges = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e);
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Random trees from Prüfer sequences.
fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| {
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::new();
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn congruence_matches_charpoly(g in arb_graph(10)) {
        let a = adjacency_matrix(&g);
        let i = inertia_congruence(&a).unwrap();
        prop_assert_eq!(i, inertia_charpoly_oracle(&a).unwrap());
        prop_assert_eq!(i.order(), g.order());
    }

    #[test]
    fn blossom_matches_bruteforce(g in arb_graph(10)) {
        prop_assert_eq!(matching_number(&g), matching_bruteforce(&g).unwrap());
    }

    #[test]
    fn bounds_and_classifiers(g in arb_graph(9)) {
        let r = TheoremReport::of(&g);
        prop_assert!(r.bounds_ok);
        prop_assert!(r.classifiers_consistent(), "{:?}", r);
        prop_assert_ne!(r.unicyclic_consistent(), Some(false));
    }

    #[test]
    fn lemmas_hold(g in arb_graph(8)) {
        let facts = Facts::of(&g);
        for o in lemma_suite(&g, &facts) {
            prop_assert!(o.holds, "{} on {:?}", o.name, g);
        }
    }

    #[test]
    fn matching_drops_by_at_most_one(g in arb_graph(9)) {
        let m = matching_number(&g);
        for v in 0..g.order() {
            let h = matching_number(&g.without(&[v]));
            prop_assert!(h <= m && h + 1 >= m);
        }
        for e in g.edges() {
            let only: EdgeSet = [e].into_iter().collect();
            let h = matching_number(&g.delete_edges(&only).unwrap());
            prop_assert!(h <= m && h + 1 >= m);
        }
    }

    #[test]
    fn disjoint_cycle_structure(g in arb_graph(10)) {
        let cs = analyze_cycles(&g);
        if cs.disjoint {
            prop_assert_eq!(cs.cycles.len(), g.cyclomatic_number());
            for c in &cs.cycles {
                prop_assert!(c.len() >= 3);
                for k in 0..c.len() {
                    prop_assert!(g.has_edge(c[k], c[(k + 1) % c.len()]));
                }
            }
            let t = contract_cycles(&g, &cs).unwrap();
            prop_assert!(t.forest.is_forest());
            let f = frontier_edges(&g, &cs).unwrap();
            let idx = cs.cycle_index(g.order());
            for e in g.edges() {
                let (u, v) = e.endpoints();
                let off = idx[u].is_none() && idx[v].is_none();
                let inside = idx[u].is_some() && idx[u] == idx[v];
                prop_assert_eq!(
                    [off, inside, f.contains(&Edge::new(u, v))].iter().filter(|&&b| b).count(),
                    1
                );
            }
        }
    }

    #[test]
    fn trees_have_equal_indices(t in arb_tree(12)) {
        let i = inertia(&t);
        let m = matching_number(&t);
        prop_assert_eq!((i.positive, i.negative), (m, m));
        prop_assert_eq!(i.rank(), 2 * m);
    }

    #[test]
    fn generator_outputs_are_extremal(seed in any::<u64>(), residue in 0usize..3, cycles in 0usize..3, steps in 0usize..6) {
        let residue = [Residue::Zero, Residue::One, Residue::Three][residue];
        let mut params = GeneratorParams::new(residue, cycles, steps, seed);
        params.num_isolated_seeds = 1;
        let g = generate_extremal(&params);
        let facts = Facts::of(&g);
        for &(index, side) in residue.attained_bounds() {
            prop_assert!(facts.attains(index, side));
        }
    }
}
