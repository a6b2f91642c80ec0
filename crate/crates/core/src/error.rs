use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    MissingEdge(usize, usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix entry ({0}, {1}) is not an integer")]
    NotInteger(usize, usize),
    #[error("{what} exceeds its enumeration budget ({detail})")]
    BudgetExceeded {
        what: &'static str,
        detail: &'static str,
    },
    #[error("cycles of the graph are not pairwise vertex-disjoint")]
    CyclesNotDisjoint,
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}
