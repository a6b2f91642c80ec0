//! Bounds `m(G) - c(G) <= p(G), n(G) <= m(G) + c(G)` and the characterizations
//! of the graphs attaining each of the four bounds.
//!
//! Every verdict is computed twice: once from the exact inertia and once from
//! purely combinatorial conditions on cycles and matchings. The two paths share
//! no code beyond the matching number, so their agreement on a corpus is the
//! verification signal.

use alloc::vec::Vec;

use crate::cycles::{
    analyze_cycles, contract_cycles, enumerate_simple_cycles, frontier_edges, non_cyclic_forest,
    CycleStructure,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::inertia::{inertia, Inertia};
use crate::matching::{every_max_matching_avoids, exists_max_matching_avoiding, matching_number};

/// Which inertia index a statement is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Index {
    Positive,
    Negative,
}

impl Index {
    pub fn of(self, i: &Inertia) -> usize {
        match self {
            Index::Positive => i.positive,
            Index::Negative => i.negative,
        }
    }
}

/// Which side of `m ± c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Upper,
    Lower,
}

/// The spectral side: inertia, matching number and cyclomatic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facts {
    pub inertia: Inertia,
    pub matching: usize,
    pub cyclomatic: usize,
}

impl Facts {
    pub fn of(g: &Graph) -> Self {
        Facts {
            inertia: inertia(g),
            matching: matching_number(g),
            cyclomatic: g.cyclomatic_number(),
        }
    }

    /// Whether the chosen index equals `m + c` or `m - c`.
    pub fn attains(&self, index: Index, side: Side) -> bool {
        let x = index.of(&self.inertia);
        match side {
            Side::Upper => x == self.matching + self.cyclomatic,
            Side::Lower => x + self.cyclomatic == self.matching,
        }
    }

    pub fn bounds_hold(&self) -> bool {
        let (m, c) = (self.matching, self.cyclomatic);
        [self.inertia.positive, self.inertia.negative]
            .into_iter()
            .all(|x| x + c >= m && x <= m + c)
    }
}

/// The combinatorial side: cycle disjointness, residues mod 4, and the two
/// matching conditions on `T_G` and `𝓕(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conditions {
    pub disjoint_cycles: bool,
    /// Cycle lengths mod 4; empty when the cycles are not disjoint.
    pub residues: Vec<u8>,
    /// `m(T_G) = m([T_G])`.
    pub forest_matchings_equal: bool,
    /// Some maximum matching avoids `𝓕(G)`.
    pub avoiding_matching_exists: bool,
}

impl Conditions {
    pub fn of(g: &Graph) -> Self {
        Self::from_cycles(g, &analyze_cycles(g))
    }

    pub fn from_cycles(g: &Graph, cs: &CycleStructure) -> Self {
        if !cs.disjoint {
            return Conditions {
                disjoint_cycles: false,
                residues: Vec::new(),
                forest_matchings_equal: false,
                avoiding_matching_exists: false,
            };
        }
        let contraction = contract_cycles(g, cs).expect("disjoint cycles contract to a forest");
        let frontier = frontier_edges(g, cs).expect("cycles are disjoint");
        Conditions {
            disjoint_cycles: true,
            residues: cs.cycles.iter().map(|c| (c.len() % 4) as u8).collect(),
            forest_matchings_equal: matching_number(&contraction.forest)
                == matching_number(&non_cyclic_forest(&contraction)),
            avoiding_matching_exists: exists_max_matching_avoiding(g, &frontier)
                .expect("frontier edges belong to the graph"),
        }
    }

    fn residues_all(&self, r: u8) -> bool {
        self.disjoint_cycles && self.residues.iter().all(|&x| x == r)
    }

    /// Required residue for each bound; the lower bounds share residue 0.
    pub fn residue_for(index: Index, side: Side) -> u8 {
        match (index, side) {
            (Index::Positive, Side::Upper) => 1,
            (Index::Negative, Side::Upper) => 3,
            (_, Side::Lower) => 0,
        }
    }

    /// Disjoint cycles, the right residue, and `m(T_G) = m([T_G])`.
    pub fn with_forest_matching(&self, index: Index, side: Side) -> bool {
        self.residues_all(Self::residue_for(index, side)) && self.forest_matchings_equal
    }

    /// Disjoint cycles, the right residue, and a maximum matching avoiding `𝓕(G)`.
    pub fn with_avoiding_matching(&self, index: Index, side: Side) -> bool {
        self.residues_all(Self::residue_for(index, side)) && self.avoiding_matching_exists
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpperVerdict {
    /// The index equals `m + c`.
    pub attained: bool,
    /// Conditions with `m(T_G) = m([T_G])`.
    pub forest_form: bool,
    /// Conditions with a maximum matching avoiding `𝓕(G)`.
    pub matching_form: bool,
}

impl UpperVerdict {
    pub fn consistent(&self) -> bool {
        self.attained == self.forest_form && self.attained == self.matching_form
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerVerdict {
    /// The index equals `m - c`.
    pub attained: bool,
    pub conditions: bool,
}

impl LowerVerdict {
    pub fn consistent(&self) -> bool {
        self.attained == self.conditions
    }
}

fn upper(facts: &Facts, cond: &Conditions, index: Index) -> UpperVerdict {
    UpperVerdict {
        attained: facts.attains(index, Side::Upper),
        forest_form: cond.with_forest_matching(index, Side::Upper),
        matching_form: cond.with_avoiding_matching(index, Side::Upper),
    }
}

fn lower(facts: &Facts, cond: &Conditions, index: Index) -> LowerVerdict {
    LowerVerdict {
        attained: facts.attains(index, Side::Lower),
        conditions: cond.with_forest_matching(index, Side::Lower),
    }
}

/// `m - c <= p <= m + c` and the same for `n`.
pub fn check_bounds(g: &Graph) -> bool {
    Facts::of(g).bounds_hold()
}

pub fn classify_p_upper(g: &Graph) -> UpperVerdict {
    upper(&Facts::of(g), &Conditions::of(g), Index::Positive)
}

pub fn classify_n_upper(g: &Graph) -> UpperVerdict {
    upper(&Facts::of(g), &Conditions::of(g), Index::Negative)
}

pub fn classify_p_lower(g: &Graph) -> LowerVerdict {
    lower(&Facts::of(g), &Conditions::of(g), Index::Positive)
}

pub fn classify_n_lower(g: &Graph) -> LowerVerdict {
    lower(&Facts::of(g), &Conditions::of(g), Index::Negative)
}

/// Predicted `(n(G), p(G))` for a connected graph with exactly one cycle `C_q`,
/// from the matching number alone:
///
/// | q mod 4 | extra condition                          | (n, p)         |
/// |---------|------------------------------------------|----------------|
/// | 0       | every maximum matching avoids `𝓕(G)`     | (m - 1, m - 1) |
/// | 1       | `m(G) = m(G - C_q) + (q - 1) / 2`        | (m, m + 1)     |
/// | 3       | `m(G) = m(G - C_q) + (q - 1) / 2`        | (m + 1, m)     |
/// | else    |                                          | (m, m)         |
pub fn classify_unicyclic(g: &Graph) -> Result<(usize, usize)> {
    if !g.is_connected() || g.cyclomatic_number() != 1 {
        return Err(Error::Precondition("graph must be connected and unicyclic"));
    }
    let cs = analyze_cycles(g);
    let cycle = &cs.cycles[0];
    let q = cycle.len();
    let m = matching_number(g);
    let off_cycle_matching = || matching_number(&g.without(cycle)) + (q - 1) / 2 == m;
    let prediction = match q % 4 {
        0 if every_max_matching_avoids(g, &frontier_edges(g, &cs)?)? => (m - 1, m - 1),
        1 if off_cycle_matching() => (m, m + 1),
        3 if off_cycle_matching() => (m + 1, m),
        _ => (m, m),
    };
    Ok(prediction)
}

/// For every attained bound and every vertex `v` on a cycle, checks the five
/// consequences of deleting `v`: the index drops by one (upper) or stays put
/// (lower), `G - v` attains the same bound, `m(G - v)` stays (upper) or drops
/// by one (lower), `c(G - v) = c(G) - 1`, and `v` is not quasi-pendant.
pub fn check_deletion_corollaries(g: &Graph) -> Result<bool> {
    let facts = Facts::of(g);
    if facts.cyclomatic == 0 {
        return Err(Error::Precondition("graph has no cycle"));
    }
    let attained: Vec<(Index, Side)> = [Index::Positive, Index::Negative]
        .into_iter()
        .flat_map(|i| [(i, Side::Upper), (i, Side::Lower)])
        .filter(|&(i, s)| facts.attains(i, s))
        .collect();
    if attained.is_empty() {
        return Err(Error::Precondition("graph attains none of the four bounds"));
    }
    let quasi = g.quasi_pendant_vertices();
    let cs = analyze_cycles(g);
    for &v in &cs.cyclic_vertices {
        let sub = Facts::of(&g.without(&[v]));
        for &(index, side) in &attained {
            let x = index.of(&facts.inertia);
            let y = index.of(&sub.inertia);
            let ok = match side {
                Side::Upper => y + 1 == x && sub.matching == facts.matching,
                Side::Lower => y == x && sub.matching + 1 == facts.matching,
            } && sub.attains(index, side)
                && sub.cyclomatic + 1 == facts.cyclomatic
                && !quasi.contains(&v);
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `eta(T) <= s(T) - 1` for a tree with at least two vertices, where `s(T)` is
/// the number of pendant vertices.
pub fn check_tree_nullity(t: &Graph) -> Result<bool> {
    if !t.is_tree() || t.order() < 2 {
        return Err(Error::Precondition(
            "input must be a tree on at least two vertices",
        ));
    }
    Ok(inertia(t).nullity < t.pendant_vertices().len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DifferenceBounds {
    /// `|p - n| <= c_1`.
    pub odd_cycles_ok: bool,
    /// `-c_3 <= p - n <= c_5`. Conjectural; reported, never enforced.
    pub conjecture_ok: bool,
}

pub fn check_difference_bounds(g: &Graph) -> Result<DifferenceBounds> {
    let counts = enumerate_simple_cycles(g)?;
    let i = inertia(g);
    let diff = i.positive as i64 - i.negative as i64;
    Ok(DifferenceBounds {
        odd_cycles_ok: diff.unsigned_abs() <= counts.odd,
        conjecture_ok: -(counts.three_mod_four as i64) <= diff
            && diff <= counts.one_mod_four as i64,
    })
}

/// Everything the verdicts need about one graph, computed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub facts: Facts,
    pub conditions: Conditions,
    pub bounds_ok: bool,
    pub p_upper: UpperVerdict,
    pub n_upper: UpperVerdict,
    pub p_lower: LowerVerdict,
    pub n_lower: LowerVerdict,
    /// `(n, p)` predicted for connected unicyclic graphs.
    pub unicyclic_prediction: Option<(usize, usize)>,
}

impl TheoremReport {
    pub fn of(g: &Graph) -> Self {
        let facts = Facts::of(g);
        let conditions = Conditions::of(g);
        TheoremReport {
            bounds_ok: facts.bounds_hold(),
            p_upper: upper(&facts, &conditions, Index::Positive),
            n_upper: upper(&facts, &conditions, Index::Negative),
            p_lower: lower(&facts, &conditions, Index::Positive),
            n_lower: lower(&facts, &conditions, Index::Negative),
            unicyclic_prediction: classify_unicyclic(g).ok(),
            facts,
            conditions,
        }
    }

    pub fn classifiers_consistent(&self) -> bool {
        self.p_upper.consistent()
            && self.n_upper.consistent()
            && self.p_lower.consistent()
            && self.n_lower.consistent()
            && self.p_lower.attained == self.n_lower.attained
    }

    /// `None` when the graph is not connected unicyclic.
    pub fn unicyclic_consistent(&self) -> Option<bool> {
        let i = &self.facts.inertia;
        self.unicyclic_prediction
            .map(|pred| pred == (i.negative, i.positive))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_squares_bridged() -> Graph {
        Graph::cycle(4)
            .disjoint_union(&Graph::cycle(4))
            .extended(0, &[(0, 4)])
            .unwrap()
    }

    /// `C_q` on `0..q` with the path `0 - q - q+1` attached.
    fn cycle_with_tail(q: usize) -> Graph {
        Graph::cycle(q).extended(2, &[(0, q), (q, q + 1)]).unwrap()
    }

    /// `C_q` with a single pendant vertex `q` at 0.
    fn cycle_with_leaf(q: usize) -> Graph {
        Graph::cycle(q).extended(1, &[(0, q)]).unwrap()
    }

    #[test]
    fn bounds_examples() {
        let f = Facts::of(&Graph::cycle(5));
        assert!(f.bounds_hold());
        assert!(f.attains(Index::Positive, Side::Upper));

        let f = Facts::of(&Graph::cycle(4));
        assert!(f.bounds_hold());
        assert!(f.attains(Index::Positive, Side::Lower));

        let f = Facts::of(&two_squares_bridged());
        assert_eq!(f.inertia.positive, 3);
        assert_eq!(f.inertia.negative, 3);
        assert_eq!((f.matching, f.cyclomatic), (4, 2));
        assert!(f.bounds_hold());
        assert!(!f.attains(Index::Positive, Side::Upper));
        assert!(!f.attains(Index::Positive, Side::Lower));
    }

    #[test]
    fn p_upper_examples() {
        let v = classify_p_upper(&cycle_with_tail(5));
        assert_eq!(
            v,
            UpperVerdict {
                attained: true,
                forest_form: true,
                matching_form: true
            }
        );
        let v = classify_p_upper(&cycle_with_leaf(5));
        assert!(!v.attained && v.consistent());
        for t in [Graph::path(6), Graph::star(4), Graph::empty(3)] {
            let v = classify_p_upper(&t);
            assert!(v.attained && v.consistent());
        }
    }

    #[test]
    fn n_upper_examples() {
        let v = classify_n_upper(&Graph::cycle(3));
        assert!(v.attained && v.consistent());
        let v = classify_n_upper(&Graph::cycle(5));
        assert!(!v.attained && v.consistent());
        let v = classify_n_upper(&cycle_with_tail(3));
        assert!(v.attained && v.consistent());
    }

    #[test]
    fn lower_examples() {
        let v = classify_p_lower(&Graph::cycle(4));
        assert!(v.attained && v.consistent());

        let g = two_squares_bridged();
        let v = classify_p_lower(&g);
        assert_eq!(
            v,
            LowerVerdict {
                attained: false,
                conditions: false
            }
        );
        let cond = Conditions::of(&g);
        assert_eq!(cond.residues, alloc::vec![0, 0]);
        assert!(!cond.forest_matchings_equal);

        let g = cycle_with_tail(4);
        assert_eq!(inertia(&g).positive, 2);
        let v = classify_p_lower(&g);
        assert!(v.attained && v.consistent());
        assert_eq!(classify_n_lower(&g), v);
    }

    #[test]
    fn unicyclic_examples() {
        assert_eq!(classify_unicyclic(&cycle_with_leaf(3)), Ok((2, 2)));
        let i = inertia(&cycle_with_leaf(3));
        assert_eq!((i.negative, i.positive), (2, 2));

        assert_eq!(classify_unicyclic(&cycle_with_tail(4)), Ok((2, 2)));
        assert_eq!(classify_unicyclic(&Graph::cycle(5)), Ok((2, 3)));
        assert_eq!(classify_unicyclic(&Graph::cycle(3)), Ok((2, 1)));

        assert!(classify_unicyclic(&Graph::path(4)).is_err());
        assert!(classify_unicyclic(&two_squares_bridged()).is_err());
        assert!(classify_unicyclic(&Graph::cycle(3).disjoint_union(&Graph::path(2))).is_err());
    }

    #[test]
    fn deletion_corollary_examples() {
        assert_eq!(check_deletion_corollaries(&Graph::cycle(5)), Ok(true));
        assert_eq!(check_deletion_corollaries(&Graph::cycle(4)), Ok(true));
        assert_eq!(check_deletion_corollaries(&cycle_with_tail(5)), Ok(true));
        assert!(check_deletion_corollaries(&Graph::path(4)).is_err());
        assert!(check_deletion_corollaries(&two_squares_bridged()).is_err());
    }

    #[test]
    fn deleting_a_cycle_vertex_of_c5_gives_p4() {
        let h = Graph::cycle(5).without(&[0]);
        assert_eq!(h, Graph::path(4));
        let f = Facts::of(&h);
        assert_eq!((f.inertia.positive, f.matching, f.cyclomatic), (2, 2, 0));
    }

    #[test]
    fn tree_nullity_examples() {
        assert_eq!(inertia(&Graph::star(4)).nullity, 3);
        assert_eq!(check_tree_nullity(&Graph::star(4)), Ok(true));
        assert_eq!(check_tree_nullity(&Graph::path(4)), Ok(true));
        assert_eq!(check_tree_nullity(&Graph::path(3)), Ok(true));
        assert!(check_tree_nullity(&Graph::cycle(4)).is_err());
        assert!(check_tree_nullity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn difference_examples() {
        for q in [3, 4, 5] {
            let d = check_difference_bounds(&Graph::cycle(q)).unwrap();
            assert!(d.odd_cycles_ok && d.conjecture_ok, "C_{q}");
        }
        assert!(check_difference_bounds(&Graph::path(15)).is_err());
    }

    #[test]
    fn report_is_consistent_on_examples() {
        for g in [
            Graph::cycle(5),
            two_squares_bridged(),
            cycle_with_tail(4),
            cycle_with_leaf(3),
            Graph::complete(5),
        ] {
            let r = TheoremReport::of(&g);
            assert!(r.bounds_ok);
            assert!(r.classifiers_consistent(), "{g:?}");
            assert_ne!(r.unicyclic_consistent(), Some(false));
        }
    }
}
