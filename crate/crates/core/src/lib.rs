//! Exact spectral and combinatorial invariants of simple undirected graphs.
//!
//! The crate computes the inertia `(p, n, eta)` of the adjacency matrix with exact
//! rational arithmetic, the matching number, the cyclomatic number and the cycle
//! structure needed to decide when `p` or `n` reaches `m(G) ± c(G)`.
//!
//! Everything here is pure and allocation-only; IO, file formats and the command
//! line live in the `inertia-verify` companion crate.
//!
//! ```
//! use inertia_core::{graph::Graph, inertia::inertia, matching::matching_number};
//!
//! let c5 = Graph::cycle(5);
//! let i = inertia(&c5);
//! assert_eq!((i.positive, i.negative, i.nullity), (3, 2, 0));
//! assert_eq!(matching_number(&c5), 2);
//! assert_eq!(c5.cyclomatic_number(), 1);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cycles;
pub mod error;
pub mod generator;
pub mod graph;
pub mod inertia;
pub mod lemmas;
pub mod matching;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexSet};
pub use inertia::Inertia;
