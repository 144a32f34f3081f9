use std::collections::BTreeMap;

use graph_core::{Dist, GadgetGraph, Graph};

use crate::directed::source_target_path;
use crate::error::ReductionError;
use crate::report::ReportBuilder;
use crate::ReductionReport;

/// The detour gadget: one terminal `z[j]` per edge `j` of the canonical
/// shortest path, wired so that a shortest cycle through `z[j]` is exactly
/// a shortest `s -> t` path avoiding that edge (`z[j] -> v_j` carries
/// `d(s, v_j)`, `v_{j+1} -> z[j]` carries `d(v_{j+1}, t)`, and the zero
/// chain `z[j] -> z[j-1]` lets detours span several path edges).
pub fn build_detour_gadget(g: &Graph, s: u32, t: u32) -> Result<GadgetGraph, ReductionError> {
    let path = source_target_path(g, s, t)?;
    let n = g.vertex_count();
    let l = path.len();

    let on_path = |u: u32, v: u32| {
        path.vertices
            .windows(2)
            .any(|pair| pair[0] == u && pair[1] == v)
    };
    let mut edges = Vec::new();
    for e in g.edges() {
        if !on_path(e.u, e.v) {
            edges.push((e.u, e.v, e.w));
        }
    }
    for j in 0..l {
        let z = n + j as u32;
        edges.push((z, path.vertices[j], path.to_vertex[j]));
        edges.push((path.vertices[j + 1], z, path.to_target[j + 1]));
        if j >= 1 {
            edges.push((z, z - 1, 0));
        }
    }

    let mut roles = BTreeMap::new();
    for v in 0..n {
        roles.insert(format!("v_copy[{v}]"), v);
    }
    for j in 0..l {
        roles.insert(format!("z[{j}]"), n + j as u32);
    }
    let mut recovery = BTreeMap::new();
    recovery.insert("n".to_string(), n as u64);
    recovery.insert("l".to_string(), l as u64);

    Ok(GadgetGraph {
        graph: Graph::new_gadget(n + l as u32, true, edges)?,
        roles,
        recovery,
    })
}

/// Replacement paths via one all-nodes-shortest-cycles query on the detour
/// gadget: entry `j` is the shortest-cycle weight through `z[j]`, `Inf`
/// when no replacement exists.
pub fn replacement_paths_via_ansc<F>(
    g: &Graph,
    s: u32,
    t: u32,
    mut ansc_oracle: F,
) -> Result<(Vec<Dist>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> Vec<Dist>,
{
    let gadget = build_detour_gadget(g, s, t)?;
    let l = gadget.recovery("l") as usize;
    let mut builder = ReportBuilder::new("repl-to-ansc", g);
    builder
        .declare_calls(1)
        .declare_size(g.vertex_count() + l as u32, g.edge_count() + 2 * l);
    builder.record_call(&gadget.graph);
    builder.construction_done();

    let cycles = ansc_oracle(&gadget.graph);
    let answers = (0..l)
        .map(|j| cycles[gadget.role(&format!("z[{j}]")) as usize])
        .collect();
    Ok((answers, builder.finish()))
}

/// Second simple shortest path as the minimum over the replacement-path
/// oracle's per-edge answers.
pub fn two_sisp_via_replacement_paths<F>(
    g: &Graph,
    s: u32,
    t: u32,
    mut replacement_oracle: F,
) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32, u32) -> Vec<Dist>,
{
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    if s == t {
        return Err(ReductionError::TrivialPath);
    }
    let mut builder = ReportBuilder::new("2sisp-to-repl", g);
    builder
        .declare_calls(1)
        .declare_size(g.vertex_count(), g.edge_count());
    builder.record_call(g);
    builder.construction_done();
    let per_edge = replacement_oracle(g, s, t);
    let answer = per_edge.into_iter().min().unwrap_or(Dist::Inf);
    Ok((answer, builder.finish()))
}
