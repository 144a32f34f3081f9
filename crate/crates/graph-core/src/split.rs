use crate::{Graph, GraphError};

/// Records where each original vertex went in a vertex-split graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMap {
    pairs: Vec<(u32, u32)>,
}

impl SplitMap {
    pub fn in_copy(&self, v: u32) -> u32 {
        self.pairs[v as usize].0
    }

    pub fn out_copy(&self, v: u32) -> u32 {
        self.pairs[v as usize].1
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// The original vertex a split id belongs to.
    pub fn original(&self, id: u32) -> u32 {
        id / 2
    }
}

/// Replaces every vertex `z` of a directed graph by `z_in`/`z_out` joined by
/// a zero-weight edge, re-routing each original edge `(u, v, w)` to
/// `(u_out, v_in, w)`. Directed cycles through `z` become `z_out -> z_in`
/// paths of the same weight.
pub fn split_all_vertices(g: &Graph) -> Result<(Graph, SplitMap), GraphError> {
    assert!(g.is_directed(), "vertex splitting applies to directed graphs");
    let n = g.vertex_count();
    let pairs: Vec<(u32, u32)> = (0..n).map(|z| (2 * z, 2 * z + 1)).collect();

    let mut edges = Vec::with_capacity(g.edge_count() + n as usize);
    for &(z_in, z_out) in &pairs {
        edges.push((z_in, z_out, 0));
    }
    for e in g.edges() {
        edges.push((pairs[e.u as usize].1, pairs[e.v as usize].0, e.w));
    }
    let split = Graph::new_gadget(2 * n, true, edges)?;
    Ok((split, SplitMap { pairs }))
}
