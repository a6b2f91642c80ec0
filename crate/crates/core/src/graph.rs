//! Immutable simple undirected graphs and elementary structural queries.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 64_000;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics if `a == b`; graphs never contain loops.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: usize) -> usize {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

pub type VertexSet = BTreeSet<usize>;
pub type EdgeSet = BTreeSet<Edge>;

/// A simple undirected graph on vertices `0..order`.
///
/// Neighbour lists are kept sorted, so iteration order is deterministic and
/// adjacency tests are a binary search.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); order],
            size: 0,
        }
    }

    /// Builds a graph from vertex pairs. Repeated pairs collapse into one edge;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I, E>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        if order > MAX_VERTICES {
            return Err(Error::TooManyVertices(order));
        }
        let mut adj = vec![Vec::new(); order];
        for e in edges {
            let (u, v) = e.into();
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut size = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            size += list.len();
        }
        Ok(Graph {
            adj,
            size: size / 2,
        })
    }

    fn from_valid_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::from_edges(order, edges).expect("edge list built internally is valid")
    }

    /// The cycle `C_n`; `n` must be at least 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_valid_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_valid_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_valid_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_valid_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// Number of vertices, `|V(G)|`.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, `|E(G)|`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| Edge(u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = VertexSet::new();
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// `θ(G)`.
    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// `c(G) = |E| - |V| + θ(G)`, the dimension of the cycle space.
    pub fn cyclomatic_number(&self) -> usize {
        // |E| + θ >= |V| holds for every graph, so this never underflows.
        self.size + self.component_count() - self.order()
    }

    pub fn is_forest(&self) -> bool {
        self.cyclomatic_number() == 0
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.size + 1 == self.order()
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to a pendant vertex that are not pendant themselves.
    /// Both ends of a `K_2` component are pendant, so neither is quasi-pendant.
    pub fn quasi_pendant_vertices(&self) -> VertexSet {
        (0..self.order())
            .filter(|&v| self.degree(v) != 1 && self.adj[v].iter().any(|&w| self.degree(w) == 1))
            .collect()
    }

    /// The subgraph induced by `V \ removed`, relabelled contiguously in the
    /// original order. The second value maps old indices to new ones.
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let n = self.order();
        let mut map = vec![None; n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut adj = vec![Vec::new(); next];
        let mut size = 0;
        for (u, list) in self.adj.iter().enumerate() {
            if let Some(nu) = map[u] {
                adj[nu] = list.iter().filter_map(|&w| map[w]).collect();
                size += adj[nu].len();
            }
        }
        (
            Graph {
                adj,
                size: size / 2,
            },
            map,
        )
    }

    /// `G - W` without the index map.
    pub fn without(&self, removed: &[usize]) -> Graph {
        self.delete_vertices(&removed.iter().copied().collect()).0
    }

    /// The subgraph induced by `keep`, relabelled in ascending order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let removed = (0..self.order()).filter(|v| !keep.contains(v)).collect();
        self.delete_vertices(&removed).0
    }

    /// Same vertex set, edges `E \ removed`. Every removed edge must exist.
    pub fn delete_edges(&self, removed: &EdgeSet) -> Result<Graph> {
        if let Some(e) = removed.iter().find(|e| !self.has_edge(e.0, e.1)) {
            return Err(Error::MissingEdge(e.0, e.1));
        }
        let mut g = self.clone();
        for e in removed {
            g.adj[e.0].retain(|&w| w != e.1);
            g.adj[e.1].retain(|&w| w != e.0);
        }
        g.size -= removed.len();
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self
            .edges()
            .map(Edge::endpoints)
            .chain(other.edges().map(|e| (e.0 + shift, e.1 + shift)));
        Self::from_valid_edges(shift + other.order(), edges)
    }

    /// A copy of `self` with extra vertices and edges appended.
    pub fn extended(&self, extra_vertices: usize, extra_edges: &[(usize, usize)]) -> Result<Graph> {
        let edges = self
            .edges()
            .map(Edge::endpoints)
            .chain(extra_edges.iter().copied());
        Self::from_edges(self.order() + extra_vertices, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn construction_rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        assert_eq!(
            Graph::from_edges(MAX_VERTICES + 1, core::iter::empty::<(usize, usize)>()),
            Err(Error::TooManyVertices(MAX_VERTICES + 1))
        );
        let k2 = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(k2.size(), 1);
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::cycle(4).components(), vec![set(&[0, 1, 2, 3])]);
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_eq!(two.components(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn cyclomatic_examples() {
        assert_eq!(Graph::star(4).cyclomatic_number(), 0);
        assert_eq!(Graph::path(7).cyclomatic_number(), 0);
        assert_eq!(Graph::cycle(4).cyclomatic_number(), 1);
        let two_squares = Graph::cycle(4)
            .disjoint_union(&Graph::cycle(4))
            .extended(0, &[(0, 4)])
            .unwrap();
        assert_eq!(two_squares.cyclomatic_number(), 2);
        assert_eq!(Graph::complete(4).cyclomatic_number(), 3);
        assert_eq!(Graph::empty(0).cyclomatic_number(), 0);
    }

    #[test]
    fn pendant_and_quasi_pendant() {
        let star = Graph::star(3);
        assert_eq!(star.pendant_vertices(), set(&[1, 2, 3]));
        assert_eq!(star.quasi_pendant_vertices(), set(&[0]));

        let c4 = Graph::cycle(4);
        assert!(c4.pendant_vertices().is_empty());
        assert!(c4.quasi_pendant_vertices().is_empty());

        let p3 = Graph::path(3);
        assert_eq!(p3.pendant_vertices(), set(&[0, 2]));
        assert_eq!(p3.quasi_pendant_vertices(), set(&[1]));

        let k2 = Graph::path(2);
        assert_eq!(k2.pendant_vertices(), set(&[0, 1]));
        assert!(k2.quasi_pendant_vertices().is_empty());
    }

    #[test]
    fn vertex_deletion() {
        let (p, map) = Graph::cycle(4).delete_vertices(&set(&[0]));
        assert_eq!(p, Graph::path(3));
        assert_eq!(map, vec![None, Some(0), Some(1), Some(2)]);

        // C_4 on 0..4 with the path 0-4-5 hanging off vertex 0.
        let g = Graph::cycle(4).extended(2, &[(0, 4), (4, 5)]).unwrap();
        assert_eq!(g.without(&[4, 5]), Graph::cycle(4));

        let (gone, map) = Graph::complete(3).delete_vertices(&set(&[0, 1, 2]));
        assert_eq!(gone.order(), 0);
        assert!(map.iter().all(Option::is_none));
    }

    #[test]
    fn edge_deletion() {
        let c4 = Graph::cycle(4);
        let p4 = c4
            .delete_edges(&[Edge::new(3, 0)].into_iter().collect())
            .unwrap();
        assert_eq!(p4, Graph::path(4));

        let k2 = Graph::path(2);
        let split = k2.delete_edges(&k2.edge_set()).unwrap();
        assert_eq!(split, Graph::empty(2));

        assert_eq!(c4.delete_edges(&EdgeSet::new()).unwrap(), c4);
        assert_eq!(
            c4.delete_edges(&[Edge::new(0, 2)].into_iter().collect()),
            Err(Error::MissingEdge(0, 2))
        );
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    fn has_cycle_dfs(g: &Graph) -> bool {
        let n = g.order();
        let mut seen = vec![false; n];
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let mut stack = vec![(root, usize::MAX)];
            seen[root] = true;
            while let Some((v, parent)) = stack.pop() {
                for &w in g.neighbors(v) {
                    if w == parent {
                        continue;
                    }
                    if seen[w] {
                        return true;
                    }
                    seen[w] = true;
                    stack.push((w, v));
                }
            }
        }
        false
    }

    proptest! {
        #[test]
        fn components_partition_vertices(g in arb_graph(9)) {
            let comps = g.components();
            let mut owner = vec![usize::MAX; g.order()];
            for (i, c) in comps.iter().enumerate() {
                for &v in c {
                    prop_assert_eq!(owner[v], usize::MAX);
                    owner[v] = i;
                }
                prop_assert!(g.induced(c).is_connected());
            }
            prop_assert!(owner.iter().all(|&o| o != usize::MAX));
            for e in g.edges() {
                let (u, v) = e.endpoints();
                prop_assert_eq!(owner[u], owner[v]);
            }
        }

        #[test]
        fn forest_iff_no_dfs_cycle(g in arb_graph(9)) {
            prop_assert_eq!(g.is_forest(), !has_cycle_dfs(&g));
        }

        #[test]
        fn deleting_nothing_is_identity(g in arb_graph(9)) {
            let (h, map) = g.delete_vertices(&VertexSet::new());
            prop_assert_eq!(&h, &g);
            prop_assert!(map.iter().enumerate().all(|(i, m)| *m == Some(i)));
        }
    }
}
