//! Cycle-level structure: block decomposition, vertex-disjoint cycles,
//! frontier edges, contraction of cycles to a forest, and simple-cycle counts.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, VertexSet};

const NONE: usize = usize::MAX;

/// Biconnected blocks as sorted edge lists, ordered by their smallest edge.
/// Every edge lies in exactly one block; isolated vertices belong to none.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<Edge>> {
    let n = g.order();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    // (vertex, parent, index of next neighbour to scan)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, NONE, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(&w) = g.neighbors(v).get(top.2) {
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == NONE {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == NONE {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                let closing = Edge::new(parent, v);
                let mut block = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    block.push(e);
                    if e == closing {
                        break;
                    }
                }
                block.sort_unstable();
                blocks.push(block);
            }
        }
    }
    blocks.sort();
    blocks
}

/// Cycles of a graph and whether they are pairwise vertex-disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleStructure {
    /// Each cycle as a vertex sequence starting at its smallest vertex and
    /// continuing towards the smaller of that vertex's two cycle neighbours.
    /// Filled only when `disjoint` holds.
    pub cycles: Vec<Vec<usize>>,
    /// Vertices lying on at least one cycle.
    pub cyclic_vertices: VertexSet,
    /// No two cycles share a vertex.
    pub disjoint: bool,
}

impl CycleStructure {
    /// For each vertex, the index of the cycle containing it.
    pub fn cycle_index(&self, order: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; order];
        for (i, c) in self.cycles.iter().enumerate() {
            for &v in c {
                idx[v] = Some(i);
            }
        }
        idx
    }

    fn require_disjoint(&self) -> Result<()> {
        if self.disjoint {
            Ok(())
        } else {
            Err(Error::CyclesNotDisjoint)
        }
    }

    pub fn has_cycles(&self) -> bool {
        !self.cyclic_vertices.is_empty()
    }
}

/// Decides whether the cycles of `g` are pairwise vertex-disjoint, via blocks:
/// that holds exactly when every block is a bridge or a chordless cycle and no
/// vertex sits in two cycle blocks.
pub fn analyze_cycles(g: &Graph) -> CycleStructure {
    let mut cyclic_vertices = VertexSet::new();
    let mut cycle_blocks = Vec::new();
    let mut disjoint = true;
    let mut seen_in_cycle = vec![false; g.order()];

    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            continue;
        }
        let verts: VertexSet = block
            .iter()
            .flat_map(|e| {
                let (u, v) = e.endpoints();
                [u, v]
            })
            .collect();
        if block.len() != verts.len() {
            disjoint = false;
        }
        for &v in &verts {
            if seen_in_cycle[v] {
                disjoint = false;
            }
            seen_in_cycle[v] = true;
        }
        cyclic_vertices.extend(verts.iter().copied());
        cycle_blocks.push((block, verts));
    }

    let cycles = if disjoint {
        cycle_blocks
            .iter()
            .map(|(block, verts)| walk_cycle(g, block, verts))
            .collect()
    } else {
        Vec::new()
    };
    CycleStructure {
        cycles,
        cyclic_vertices,
        disjoint,
    }
}

fn walk_cycle(g: &Graph, block: &[Edge], verts: &VertexSet) -> Vec<usize> {
    let in_block = |u: usize, v: usize| block.binary_search(&Edge::new(u, v)).is_ok();
    let start = *verts.first().expect("a cycle block has vertices");
    let mut seq = vec![start];
    let mut prev = NONE;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && in_block(cur, w))
            .expect("every vertex of a cycle block has two block neighbours");
        if next == start {
            return seq;
        }
        seq.push(next);
        prev = cur;
        cur = next;
    }
}

/// Length of each cycle modulo 4.
pub fn cycle_lengths_mod4(cs: &CycleStructure) -> Result<Vec<u8>> {
    cs.require_disjoint()?;
    Ok(cs.cycles.iter().map(|c| (c.len() % 4) as u8).collect())
}

/// `𝓕(G)`: edges with an endpoint on a cycle and the other endpoint off that
/// cycle. An edge joining two different cycles is included.
pub fn frontier_edges(g: &Graph, cs: &CycleStructure) -> Result<EdgeSet> {
    cs.require_disjoint()?;
    let idx = cs.cycle_index(g.order());
    Ok(g.edges()
        .filter(|e| {
            let (u, v) = e.endpoints();
            (idx[u].is_some() || idx[v].is_some()) && idx[u] != idx[v]
        })
        .collect())
}

/// Whether `g` lies in the class of graphs with at least one cycle, pairwise
/// vertex-disjoint cycles, and not merely a disjoint union of trees and cycles.
pub fn in_reduced_class(g: &Graph, cs: &CycleStructure) -> bool {
    cs.disjoint && !cs.cycles.is_empty() && frontier_edges(g, cs).is_ok_and(|f| !f.is_empty())
}

/// The forest `T_G` obtained by collapsing every cycle to one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub forest: Graph,
    /// Original vertex to contracted vertex.
    pub image: Vec<usize>,
    /// Contracted vertices that came from a cycle.
    pub cyclic_images: VertexSet,
}

/// Contracts every cycle to a single vertex. Contracted vertices are numbered
/// in order of the smallest original vertex they contain.
pub fn contract_cycles(g: &Graph, cs: &CycleStructure) -> Result<Contraction> {
    cs.require_disjoint()?;
    let n = g.order();
    let idx = cs.cycle_index(n);
    let mut image = vec![NONE; n];
    let mut cycle_image = vec![NONE; cs.cycles.len()];
    let mut cyclic_images = VertexSet::new();
    let mut next = 0;
    for v in 0..n {
        match idx[v] {
            Some(c) => {
                if cycle_image[c] == NONE {
                    cycle_image[c] = next;
                    cyclic_images.insert(next);
                    next += 1;
                }
                image[v] = cycle_image[c];
            }
            None => {
                image[v] = next;
                next += 1;
            }
        }
    }

    let mut edges = EdgeSet::new();
    for e in g.edges() {
        let (u, v) = e.endpoints();
        if idx[u].is_some() && idx[u] == idx[v] {
            continue;
        }
        if !edges.insert(Edge::new(image[u], image[v])) {
            return Err(Error::Internal("cycle contraction produced a multi-edge"));
        }
    }
    let forest = Graph::from_edges(next, edges.iter().map(|e| e.endpoints()))?;
    if !forest.is_forest() {
        return Err(Error::Internal("cycle contraction did not yield a forest"));
    }
    Ok(Contraction {
        forest,
        image,
        cyclic_images,
    })
}

/// `[T_G]`: the subgraph of `T_G` induced by the non-cyclic vertices.
pub fn non_cyclic_forest(c: &Contraction) -> Graph {
    c.forest.delete_vertices(&c.cyclic_images).0
}

/// A cycle with exactly one vertex adjacent to something outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantCycle {
    /// Index into `CycleStructure::cycles`.
    pub cycle: usize,
    /// The attachment vertex on the cycle.
    pub attachment: usize,
    /// Smallest outside neighbour of the attachment vertex.
    pub outside: usize,
    /// Number of outside neighbours of the attachment vertex.
    pub outside_degree: usize,
}

pub fn pendant_cycles(g: &Graph, cs: &CycleStructure) -> Result<Vec<PendantCycle>> {
    cs.require_disjoint()?;
    let idx = cs.cycle_index(g.order());
    let mut out = Vec::new();
    for (ci, cycle) in cs.cycles.iter().enumerate() {
        let mut attached = cycle.iter().filter_map(|&v| {
            let outside: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| idx[w] != Some(ci))
                .collect();
            (!outside.is_empty()).then_some((v, outside))
        });
        if let (Some((u, outside)), None) = (attached.next(), attached.next()) {
            out.push(PendantCycle {
                cycle: ci,
                attachment: u,
                outside: outside[0],
                outside_degree: outside.len(),
            });
        }
    }
    Ok(out)
}

/// Counts of simple cycles by length class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CycleCounts {
    pub total: u64,
    /// Odd length.
    pub odd: u64,
    /// Length ≡ 3 (mod 4).
    pub three_mod_four: u64,
    /// Length ≡ 1 (mod 4).
    pub one_mod_four: u64,
}

pub const CYCLE_ENUMERATION_MAX_ORDER: usize = 14;

/// Counts every simple cycle by backtracking from each start vertex through
/// larger vertices only. Each cycle is found once per direction.
pub fn enumerate_simple_cycles(g: &Graph) -> Result<CycleCounts> {
    if g.order() > CYCLE_ENUMERATION_MAX_ORDER {
        return Err(Error::BudgetExceeded {
            what: "simple-cycle enumeration",
            detail: "needs at most 14 vertices",
        });
    }
    // by_length[k] counts directed closed walks found of length k.
    let mut by_length = vec![0u64; g.order() + 1];

    fn extend(
        g: &Graph,
        start: usize,
        v: usize,
        len: usize,
        on_path: &mut [bool],
        by_length: &mut [u64],
    ) {
        for &w in g.neighbors(v) {
            if w == start && len >= 3 {
                by_length[len] += 1;
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                extend(g, start, w, len + 1, on_path, by_length);
                on_path[w] = false;
            }
        }
    }

    let mut on_path = vec![false; g.order()];
    for start in 0..g.order() {
        on_path[start] = true;
        extend(g, start, start, 1, &mut on_path, &mut by_length);
        on_path[start] = false;
    }

    let mut counts = CycleCounts::default();
    for (len, &twice) in by_length.iter().enumerate() {
        let k = twice / 2;
        counts.total += k;
        if len % 2 == 1 {
            counts.odd += k;
        }
        match len % 4 {
            1 => counts.one_mod_four += k,
            3 => counts.three_mod_four += k,
            _ => {}
        }
    }
    Ok(counts)
}
