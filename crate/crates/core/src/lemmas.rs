//! Checkers for the supporting lemmas. Each returns `None` when its premise
//! does not apply to the graph, otherwise whether the conclusion holds.

use alloc::vec::Vec;

use crate::cycles::{
    analyze_cycles, contract_cycles, frontier_edges, in_reduced_class, non_cyclic_forest,
    pendant_cycles, CycleStructure,
};
use crate::graph::{Edge, Graph};
use crate::inertia::{inertia, Inertia};
use crate::matching::{
    edge_in_some_maximum_matching, every_max_matching_avoids, every_max_matching_covers,
    exists_max_matching_avoiding, matching_number,
};
use crate::theorems::{Facts, Index, Side};

/// Deleting a pendant vertex and its neighbour lowers `p` and `n` by one and
/// keeps the nullity. Checked for every pendant vertex.
pub fn pendant_reduction(g: &Graph, facts: &Facts) -> Option<bool> {
    let pendants = g.pendant_vertices();
    if pendants.is_empty() {
        return None;
    }
    Some(pendants.iter().all(|&u| {
        let v = g.neighbors(u)[0];
        inertia(&g.without(&[u, v])) + Inertia::new(1, 1, 0) == facts.inertia
    }))
}

/// Inertia of a disjoint union is the sum over components.
pub fn union_additivity(g: &Graph, facts: &Facts) -> Option<bool> {
    let comps = g.components();
    if comps.len() < 2 {
        return None;
    }
    let sum = comps
        .iter()
        .map(|c| inertia(&g.induced(c)))
        .fold(Inertia::default(), |a, b| a + b);
    Some(sum == facts.inertia)
}

/// `p(G) - 1 <= p(G - v) <= p(G)` and likewise for `n`, for every vertex.
pub fn interlacing(g: &Graph, facts: &Facts) -> Option<bool> {
    if g.order() == 0 {
        return None;
    }
    let (p, n) = (facts.inertia.positive, facts.inertia.negative);
    Some((0..g.order()).all(|v| {
        let i = inertia(&g.without(&[v]));
        i.positive <= p && i.positive + 1 >= p && i.negative <= n && i.negative + 1 >= n
    }))
}

/// `m(G - v) = m(G) - 1` for every quasi-pendant `v`.
pub fn quasi_pendant_matching(g: &Graph, facts: &Facts) -> Option<bool> {
    let quasi = g.quasi_pendant_vertices();
    if quasi.is_empty() {
        return None;
    }
    Some(
        quasi
            .iter()
            .all(|&v| matching_number(&g.without(&[v])) + 1 == facts.matching),
    )
}

/// For forests, `p = n = m` and `eta = |V| - 2m`.
pub fn acyclic_identity(g: &Graph, facts: &Facts) -> Option<bool> {
    if facts.cyclomatic != 0 {
        return None;
    }
    let i = facts.inertia;
    let m = facts.matching;
    Some(i.positive == m && i.negative == m && i.nullity + 2 * m == g.order())
}

/// `eta(T) <= s(T) - 1` for trees on at least two vertices.
pub fn tree_nullity(g: &Graph, facts: &Facts) -> Option<bool> {
    (g.is_tree() && g.order() >= 2).then(|| facts.inertia.nullity < g.pendant_vertices().len())
}

/// Stripping every pendant vertex of a tree on at least two vertices strictly
/// lowers the matching number.
pub fn tree_pendant_stripping(g: &Graph, facts: &Facts) -> Option<bool> {
    if !g.is_tree() || g.order() < 2 {
        return None;
    }
    let leaves: Vec<usize> = g.pendant_vertices().into_iter().collect();
    Some(matching_number(&g.without(&leaves)) < facts.matching)
}

/// A graph attaining any of the four bounds has pairwise vertex-disjoint cycles.
pub fn no_common_vertex(facts: &Facts, cs: &CycleStructure) -> Option<bool> {
    let attains_any = [Index::Positive, Index::Negative]
        .into_iter()
        .any(|i| facts.attains(i, Side::Upper) || facts.attains(i, Side::Lower));
    attains_any.then_some(cs.disjoint)
}

fn forest_matchings(g: &Graph, cs: &CycleStructure) -> (usize, usize) {
    let c = contract_cycles(g, cs).expect("disjoint cycles contract to a forest");
    (
        matching_number(&c.forest),
        matching_number(&non_cyclic_forest(&c)),
    )
}

/// In the reduced class with `m(T_G) = m([T_G])`: `G` has a pendant vertex and
/// no quasi-pendant vertex lies on a cycle.
pub fn pendant_existence(g: &Graph, cs: &CycleStructure) -> Option<bool> {
    if !in_reduced_class(g, cs) {
        return None;
    }
    let (whole, non_cyclic) = forest_matchings(g, cs);
    if whole != non_cyclic {
        return None;
    }
    let has_pendant = !g.pendant_vertices().is_empty();
    let quasi_off_cycles = g
        .quasi_pendant_vertices()
        .iter()
        .all(|v| !cs.cyclic_vertices.contains(v));
    Some(has_pendant && quasi_off_cycles)
}

/// In the reduced class with a maximum matching avoiding `𝓕(G)`:
/// `m(G) = m([T_G]) + Σ ⌊|C|/2⌋`, and if every cycle is odd then also
/// `m(T_G) = m([T_G])`.
pub fn avoiding_matching_decomposition(
    g: &Graph,
    facts: &Facts,
    cs: &CycleStructure,
) -> Option<bool> {
    if !in_reduced_class(g, cs) {
        return None;
    }
    let frontier = frontier_edges(g, cs).ok()?;
    if !exists_max_matching_avoiding(g, &frontier).ok()? {
        return None;
    }
    let (whole, non_cyclic) = forest_matchings(g, cs);
    let on_cycles: usize = cs.cycles.iter().map(|c| c.len() / 2).sum();
    let sum_ok = facts.matching == non_cyclic + on_cycles;
    let all_odd = cs.cycles.iter().all(|c| c.len() % 2 == 1);
    Some(sum_ok && (!all_odd || whole == non_cyclic))
}

/// In the reduced class with only odd cycles: `m(T_G) = m([T_G])` exactly when
/// some maximum matching avoids `𝓕(G)`.
pub fn odd_cycle_equivalence(g: &Graph, cs: &CycleStructure) -> Option<bool> {
    if !in_reduced_class(g, cs) || cs.cycles.iter().any(|c| c.len() % 2 == 0) {
        return None;
    }
    let (whole, non_cyclic) = forest_matchings(g, cs);
    let frontier = frontier_edges(g, cs).ok()?;
    let avoiding = exists_max_matching_avoiding(g, &frontier).ok()?;
    Some((whole == non_cyclic) == avoiding)
}

/// For each cycle `C_s` joined to the rest `K` by a single edge `xy` in a graph
/// with `p = m - c`: `4 | s`, `xy` lies in no maximum matching, every maximum
/// matching of `K` covers `y`, `m(K + x) = m(K)`, and
/// `m(G) = m(C_s) + m(K) = m(C_s) + m(K + x)`.
pub fn even_pendant_cycle(g: &Graph, facts: &Facts, cs: &CycleStructure) -> Option<bool> {
    if !cs.disjoint || !facts.attains(Index::Positive, Side::Lower) {
        return None;
    }
    let candidates: Vec<_> = pendant_cycles(g, cs)
        .ok()?
        .into_iter()
        .filter(|pc| pc.outside_degree == 1)
        .collect();
    if candidates.is_empty() {
        return None;
    }
    Some(candidates.iter().all(|pc| {
        let cycle = &cs.cycles[pc.cycle];
        let s = cycle.len();
        let (x, y) = (pc.attachment, pc.outside);
        let (k, map) = g.delete_vertices(&cycle.iter().copied().collect());
        let y_in_k = map[y].expect("y lies outside the cycle");
        let others: Vec<usize> = cycle.iter().copied().filter(|&v| v != x).collect();
        let k_plus_x = g.without(&others);
        let m_k = matching_number(&k);
        let m_kx = matching_number(&k_plus_x);
        let m_c = s / 2;

        s % 4 == 0
            && edge_in_some_maximum_matching(g, Edge::new(x, y)) == Ok(false)
            && every_max_matching_covers(&k, y_in_k) == Ok(true)
            && m_kx == m_k
            && facts.matching == m_c + m_k
    }))
}

/// In the reduced class with `p = m - c`, every maximum matching avoids `𝓕(G)`.
pub fn lower_bound_avoidance(g: &Graph, facts: &Facts, cs: &CycleStructure) -> Option<bool> {
    if !in_reduced_class(g, cs) || !facts.attains(Index::Positive, Side::Lower) {
        return None;
    }
    let frontier = frontier_edges(g, cs).ok()?;
    every_max_matching_avoids(g, &frontier).ok()
}

/// Outcome of one lemma on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub name: &'static str,
    pub holds: bool,
}

/// Runs every lemma whose premise applies to `g`.
pub fn lemma_suite(g: &Graph, facts: &Facts) -> Vec<LemmaOutcome> {
    let cs = analyze_cycles(g);
    let checks: [(&'static str, Option<bool>); 13] = [
        ("pendant_reduction", pendant_reduction(g, facts)),
        ("union_additivity", union_additivity(g, facts)),
        ("interlacing", interlacing(g, facts)),
        ("quasi_pendant_matching", quasi_pendant_matching(g, facts)),
        ("acyclic_identity", acyclic_identity(g, facts)),
        ("tree_nullity", tree_nullity(g, facts)),
        ("tree_pendant_stripping", tree_pendant_stripping(g, facts)),
        ("no_common_vertex", no_common_vertex(facts, &cs)),
        ("pendant_existence", pendant_existence(g, &cs)),
        (
            "avoiding_matching_decomposition",
            avoiding_matching_decomposition(g, facts, &cs),
        ),
        ("odd_cycle_equivalence", odd_cycle_equivalence(g, &cs)),
        ("even_pendant_cycle", even_pendant_cycle(g, facts, &cs)),
        (
            "lower_bound_avoidance",
            lower_bound_avoidance(g, facts, &cs),
        ),
    ];
    checks
        .into_iter()
        .filter_map(|(name, r)| r.map(|holds| LemmaOutcome { name, holds }))
        .collect()
}
