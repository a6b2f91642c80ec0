//! File formats, corpora, the verification runner and report writers for
//! `inertia-core`. The `inertia` binary is a thin command-line layer on top.
//!
//! ```
//! use inertia_verify::corpus::enumerate_labeled;
//! use inertia_verify::run::{run_verification, RunConfig};
//!
//! let corpus = enumerate_labeled(4).unwrap();
//! let report = run_verification(&corpus, &RunConfig::all()).unwrap();
//! assert_eq!(report.rows.len(), 64);
//! assert!(!report.has_counterexamples());
//! ```

pub mod corpus;
pub mod format;
pub mod report;
pub mod run;

pub use corpus::{Corpus, CorpusEntry, CorpusSource};
pub use format::{encode_graph6, parse_edge_list, parse_graph6, FormatError};
pub use report::{emit_report, Format};
pub use run::{run_verification, Check, RunConfig, RunReport};
