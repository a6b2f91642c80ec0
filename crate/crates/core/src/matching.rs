//! Maximum matchings and the matching-number queries used by the extremal
//! characterizations.
//!
//! Universal queries ("every maximum matching avoids/covers ...") are answered
//! by recomputing matching numbers of subgraphs rather than by enumerating
//! maximum matchings.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    /// Rejects edge sets in which two edges share a vertex.
    pub fn new(edges: EdgeSet) -> Result<Self> {
        let mut used = alloc::collections::BTreeSet::new();
        for e in &edges {
            let (u, v) = e.endpoints();
            if !used.insert(u) || !used.insert(v) {
                return Err(Error::Precondition(
                    "matching edges must be vertex-disjoint",
                ));
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e.contains(v))
    }
}

/// Edmonds' blossom search, one augmenting path per exposed root.
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let g = self.g;
        let n = g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    self.queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.g.order() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum-cardinality matching. Deterministic for a given graph, but which
/// maximum matching is returned is not part of the contract.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mate = Blossom::new(g).run();
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| Edge::new(v, w))
        .collect();
    Matching { edges }
}

/// `m(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Largest order accepted by [`matching_bruteforce`].
pub const BRUTEFORCE_MAX_ORDER: usize = 12;
/// Edge budget that admits larger, sparse graphs to [`matching_bruteforce`].
pub const BRUTEFORCE_MAX_SIZE: usize = 24;

/// Exhaustive maximum matching size, branching on the lowest remaining vertex:
/// either it stays unmatched or it is matched to one of its remaining
/// neighbours.
pub fn matching_bruteforce(g: &Graph) -> Result<usize> {
    if g.order() > BRUTEFORCE_MAX_ORDER && g.size() > BRUTEFORCE_MAX_SIZE {
        return Err(Error::BudgetExceeded {
            what: "brute-force matching",
            detail: "needs at most 12 vertices or at most 24 edges",
        });
    }
    fn best(g: &Graph, alive: &mut [bool], from: usize) -> usize {
        let Some(v) = (from..alive.len()).find(|&v| alive[v]) else {
            return 0;
        };
        alive[v] = false;
        let mut top = best(g, alive, v + 1);
        for &w in g.neighbors(v) {
            if alive[w] {
                alive[w] = false;
                top = top.max(1 + best(g, alive, v + 1));
                alive[w] = true;
            }
        }
        alive[v] = true;
        top
    }
    Ok(best(g, &mut vec![true; g.order()], 0))
}

fn require_edge(g: &Graph, e: Edge) -> Result<()> {
    let (u, v) = e.endpoints();
    if g.has_edge(u, v) {
        Ok(())
    } else {
        Err(Error::MissingEdge(u, v))
    }
}

/// Whether some maximum matching of `g` contains `e`, i.e. whether
/// `1 + m(G - {u, v}) = m(G)`.
pub fn edge_in_some_maximum_matching(g: &Graph, e: Edge) -> Result<bool> {
    require_edge(g, e)?;
    let (u, v) = e.endpoints();
    Ok(1 + matching_number(&g.without(&[u, v])) == matching_number(g))
}

/// Whether some maximum matching of `g` uses no edge of `avoid`, i.e. whether
/// removing those edges leaves the matching number unchanged.
pub fn exists_max_matching_avoiding(g: &Graph, avoid: &EdgeSet) -> Result<bool> {
    let h = g.delete_edges(avoid)?;
    Ok(matching_number(&h) == matching_number(g))
}

/// Whether every maximum matching of `g` avoids every edge of `avoid`.
pub fn every_max_matching_avoids(g: &Graph, avoid: &EdgeSet) -> Result<bool> {
    for &e in avoid {
        if edge_in_some_maximum_matching(g, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every maximum matching of `g` covers `v`, i.e. `m(G - v) = m(G) - 1`.
pub fn every_max_matching_covers(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(matching_number(&g.without(&[v])) + 1 == matching_number(g))
}
