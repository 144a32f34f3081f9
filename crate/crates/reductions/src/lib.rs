//! Executable graph reductions.
//!
//! Each reduction builds one or more reduced graphs, consults an oracle for
//! the target problem (passed in as a closure), and translates the answer
//! back. Construction never solves the source problem itself; correctness
//! is established by comparing against the direct solvers on random
//! instances. Every run returns a [`ReductionReport`] recording oracle-call
//! counts and per-call graph sizes, the machine-checkable form of the
//! sparsity accounting.

mod error;
mod report;
mod transcript;

pub mod directed;
pub mod undirected;

pub use error::ReductionError;
pub use report::ReductionReport;
pub use transcript::{BinarySearchTranscript, ProbeRecord};
