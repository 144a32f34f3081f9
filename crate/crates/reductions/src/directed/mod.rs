//! Directed reductions: the vertex-split chain gadget (minimum weight cycle
//! to second shortest path, all-nodes shortest cycles to replacement
//! paths), the detour gadget (replacement paths to all-nodes shortest
//! cycles), the hub-and-bit-encoding gadget (second shortest path to
//! radius, replacement paths to eccentricities), and the binary-search
//! probe gadgets targeting betweenness centrality.

mod chain;
mod detour;
mod probes;
mod radius;

use graph_core::Graph;
use oracle_solvers::canonical_shortest_path;

use crate::error::ReductionError;

pub use chain::{
    ansc_via_replacement_paths, build_cycle_chain_gadget, mwc_via_two_sisp,
    mwc_via_two_sisp_faulty_offset,
};
pub use detour::{
    build_detour_gadget, replacement_paths_via_ansc, two_sisp_via_replacement_paths,
};
pub use probes::{
    ansc_via_pos_anbc, build_bc_probe_gadget, build_cycle_probe_gadget, two_sisp_via_bc,
};
pub use radius::{
    build_radius_gadget, replacement_paths_via_eccentricities, two_sisp_via_radius,
};

/// The canonical shortest `s -> t` path plus exact prefix distances
/// `d(s, v_j)` and suffix distances `d(v_j, t)` read off the path itself.
pub(crate) struct SourceTargetPath {
    pub vertices: Vec<u32>,
    pub to_vertex: Vec<u64>,
    pub to_target: Vec<u64>,
}

impl SourceTargetPath {
    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }
}

pub(crate) fn source_target_path(
    g: &Graph,
    s: u32,
    t: u32,
) -> Result<SourceTargetPath, ReductionError> {
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    if s == t {
        return Err(ReductionError::TrivialPath);
    }
    let path = canonical_shortest_path(g, s, t).ok_or(ReductionError::NoPath { s, t })?;
    let mut to_vertex = vec![0u64; path.vertices.len()];
    for (j, pair) in path.vertices.windows(2).enumerate() {
        to_vertex[j + 1] = to_vertex[j] + g.weight(pair[0], pair[1]).unwrap();
    }
    let total = path.weight;
    let to_target = to_vertex.iter().map(|&d| total - d).collect();
    Ok(SourceTargetPath {
        vertices: path.vertices,
        to_vertex,
        to_target,
    })
}
