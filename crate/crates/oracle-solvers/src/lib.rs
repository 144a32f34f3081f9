//! Direct, independently correct solvers for the graph problems the
//! reductions target: shortest paths with predecessor matrices, minimum
//! weight cycles, per-vertex shortest cycles, k shortest simple paths and
//! cycles, replacement paths, eccentricities, strict betweenness centrality
//! and brute-force dominating sets.
//!
//! These double as the oracle targets of the reductions and as the ground
//! truth the harness compares against, so they favour clarity and
//! determinism over speed. All solvers are pure functions of immutable
//! graphs.

mod apsp;
mod centrality;
mod cycles;
mod dijkstra;
mod domination;
mod replacement;
mod yen;

pub use apsp::{apsd, apsp, ApspResult};
pub use centrality::{anbc_strict, bc_strict, diameter, eccentricities, pos_anbc, radius};
pub use cycles::{
    ansc_direct, ansc_weights, canonical_cycle, cycle_witness_is_valid,
    enumerate_cycles_through, k_sisc_bruteforce, mwc_direct, CycleWitness,
};
pub use dijkstra::{
    dijkstra, dijkstra_avoiding, dijkstra_filtered, normalize_edge, reconstruct_path,
    ShortestPathTree,
};
pub use domination::{dominates, k_dominating_set_bruteforce};
pub use replacement::{replacement_paths, two_sisp_direct, NoPath, ReplacementPaths};
pub use yen::{canonical_shortest_path, k_sisp_yen, path_witness_is_valid, PathWitness};
