use std::collections::BTreeMap;

use graph_core::{GadgetGraph, Graph, VertexLabelBits};
use oracle_solvers::{canonical_cycle, CycleWitness, PathWitness};

use crate::error::ReductionError;
use crate::report::ReportBuilder;
use crate::ReductionReport;

/// The bit-`i` split of vertex `x`: `x`'s slot becomes the endpoint for
/// neighbours whose `i`-th bit is 0, a fresh vertex `n` the endpoint for
/// the rest. Cycles through `x` whose two `x`-neighbours differ in bit `i`
/// become `x0 -> x1` paths of the same weight.
pub fn build_split_neighborhood(
    g: &Graph,
    x: u32,
    i: u32,
) -> Result<GadgetGraph, ReductionError> {
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    let n = g.vertex_count();
    let bits = VertexLabelBits::for_n(n);
    if i < 1 || i > bits.width() {
        return Err(ReductionError::ParamOutOfRange {
            name: "bit_index",
            value: i as u64,
            low: 1,
            high: bits.width() as u64,
        });
    }

    let mut edges = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        if e.u != x && e.v != x {
            edges.push((e.u, e.v, e.w));
            continue;
        }
        let y = if e.u == x { e.v } else { e.u };
        let endpoint = if bits.bit(y, i).unwrap() == 0 { x } else { n };
        edges.push((y, endpoint, e.w));
    }

    let mut roles = BTreeMap::new();
    roles.insert("x0".to_string(), x);
    roles.insert("x1".to_string(), n);
    for v in 0..n {
        if v != x {
            roles.insert(format!("v_copy[{v}]"), v);
        }
    }
    let mut recovery = BTreeMap::new();
    recovery.insert("x".to_string(), x as u64);
    recovery.insert("bit_index".to_string(), i as u64);

    Ok(GadgetGraph {
        graph: Graph::new(n + 1, false, edges)?,
        roles,
        recovery,
    })
}

/// k shortest simple cycles through `x` via a k-shortest-simple-paths
/// oracle: one `x0 -> x1` query per label bit, then canonicalize, dedup and
/// merge by (weight, vertex sequence).
pub fn k_sisc_via_k_sisp<F>(
    g: &Graph,
    x: u32,
    k: usize,
    mut ksisp_oracle: F,
) -> Result<(Vec<CycleWitness>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32, u32, usize) -> Vec<PathWitness>,
{
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    let bits = VertexLabelBits::for_n(g.vertex_count());
    let mut builder = ReportBuilder::new("ksisc-to-ksisp", g);
    builder
        .declare_calls(bits.width() as usize)
        .declare_size(g.vertex_count() + 1, g.edge_count());

    let mut merged: Vec<CycleWitness> = Vec::new();
    for i in 1..=bits.width() {
        let member = build_split_neighborhood(g, x, i)?;
        builder.record_call(&member.graph);
        let paths = ksisp_oracle(&member.graph, member.role("x0"), member.role("x1"), k);
        for p in paths {
            // Path x0, y, .., y', x1 closes into the cycle x, y, .., y'.
            debug_assert!(p.vertices.len() >= 3);
            let mut vertices = p.vertices;
            vertices.pop();
            vertices[0] = x;
            merged.push(CycleWitness {
                weight: p.weight,
                vertices: canonical_cycle(&vertices, false),
            });
        }
    }
    builder.construction_done();
    merged.sort_by(|a, b| (a.weight, &a.vertices).cmp(&(b.weight, &b.vertices)));
    merged.dedup();
    merged.truncate(k);
    Ok((merged, builder.finish()))
}
