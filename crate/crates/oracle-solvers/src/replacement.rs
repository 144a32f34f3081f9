use std::collections::HashSet;

use graph_core::{Dist, Graph};

use crate::dijkstra::{dijkstra_avoiding, normalize_edge};
use crate::yen::{canonical_shortest_path, PathWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("target {t} unreachable from source {s}")]
pub struct NoPath {
    pub s: u32,
    pub t: u32,
}

/// Replacement paths along the canonical shortest path `P`.
#[derive(Clone, Debug)]
pub struct ReplacementPaths {
    /// The canonical shortest path the per-edge answers refer to.
    pub path: PathWitness,
    /// `per_edge[j]` is the weight of a shortest `s -> t` path avoiding the
    /// `j`-th edge of `P`, `Inf` when removal disconnects `t`.
    pub per_edge: Vec<Dist>,
}

/// One Dijkstra per edge of the canonical shortest path.
pub fn replacement_paths(g: &Graph, s: u32, t: u32) -> Result<ReplacementPaths, NoPath> {
    let path = canonical_shortest_path(g, s, t).ok_or(NoPath { s, t })?;
    let mut per_edge = Vec::with_capacity(path.vertices.len().saturating_sub(1));
    for pair in path.vertices.windows(2) {
        let removed: HashSet<_> = [normalize_edge(g, pair[0], pair[1])].into_iter().collect();
        let tree = dijkstra_avoiding(g, s, &removed);
        per_edge.push(tree.dist[t as usize]);
    }
    Ok(ReplacementPaths { path, per_edge })
}

/// The weight of the minimum replacement path over the edges of the
/// canonical shortest path. On instances with a unique shortest path this
/// is the second simple shortest path weight.
pub fn two_sisp_direct(g: &Graph, s: u32, t: u32) -> Result<Dist, NoPath> {
    let r = replacement_paths(g, s, t)?;
    Ok(r.per_edge.iter().copied().min().unwrap_or(Dist::Inf))
}
