//! Core graph representation shared by the solvers, reductions and the
//! verification harness.
//!
//! Graphs are simple (no self-loops, no parallel edges), immutable after
//! construction, and carry exact unsigned integer weights. Ordinary graphs
//! require strictly positive weights; graphs built by gadget constructions
//! are flagged and may carry zero-weight edges. Unreachable distances are a
//! distinguished [`Dist::Inf`] value, never a large number.

mod bits;
mod dist;
mod dot;
mod gadget;
mod graph;
mod json;
mod random;
mod split;

pub use bits::{bit_unchecked, ceil_log2, BitIndexOutOfRange, VertexLabelBits};
pub use dist::Dist;
pub use dot::export_dot;
pub use gadget::GadgetGraph;
pub use graph::{Edge, Graph, GraphError, WeightProfile};
pub use json::{
    gadget_from_json, gadget_to_json, graph_from_json, graph_to_json, ParseError,
};
pub use random::{random_graph, RandomGraphSpec};
pub use split::{split_all_vertices, SplitMap};
