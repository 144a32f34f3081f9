use std::collections::BTreeMap;

use graph_core::{split_all_vertices, Dist, GadgetGraph, Graph};

use crate::error::ReductionError;
use crate::report::ReportBuilder;
use crate::ReductionReport;

/// The vertex-split graph extended with a zero-weight chain `p[0] .. p[n]`.
///
/// Entering the split graph at `v_out[j-1]` from `p[j-1]` costs
/// `(n - j + 1) * Q` and leaving from `v_in[j-1]` to `p[j]` costs `j * Q`
/// with `Q = n * M`, so a chain detour replacing edge `(p[j-1], p[j])`
/// costs `(n + 1) * Q` plus the weight of a cycle through vertex `j - 1`.
pub fn build_cycle_chain_gadget(g: &Graph) -> Result<GadgetGraph, ReductionError> {
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    let n = g.vertex_count();
    let profile = g.weight_profile()?;
    let step = n as u64 * profile.max_weight;

    let (split, map) = split_all_vertices(g)?;
    let chain_base = split.vertex_count();
    let mut edges: Vec<(u32, u32, u64)> = split
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.w))
        .collect();
    for j in 0..n {
        edges.push((chain_base + j, chain_base + j + 1, 0));
    }
    for j in 1..=n as u64 {
        let vertex = (j - 1) as u32;
        edges.push((
            chain_base + vertex,
            map.out_copy(vertex),
            (n as u64 - j + 1) * step,
        ));
        edges.push((map.in_copy(vertex), chain_base + j as u32, j * step));
    }

    let mut roles = BTreeMap::new();
    for v in 0..n {
        roles.insert(format!("v_in[{v}]"), map.in_copy(v));
        roles.insert(format!("v_out[{v}]"), map.out_copy(v));
    }
    for j in 0..=n {
        roles.insert(format!("p[{j}]"), chain_base + j);
    }
    let mut recovery = BTreeMap::new();
    recovery.insert("n".to_string(), n as u64);
    recovery.insert("M".to_string(), profile.max_weight);
    recovery.insert("Q".to_string(), step);
    recovery.insert("offset".to_string(), (n as u64 + 1) * step);
    recovery.insert("cutoff".to_string(), step);

    Ok(GadgetGraph {
        graph: Graph::new_gadget(chain_base + n + 1, true, edges)?,
        roles,
        recovery,
    })
}

/// Recovers a weight from the gadget scale: subtract the chain offset and
/// report `Inf` beyond the cutoff (no simple cycle weighs more than
/// `n * M`, so larger recovered values certify chain-skipping artifacts).
fn recover(value: Dist, offset: u64, cutoff: u64) -> Dist {
    match value {
        Dist::Inf => Dist::Inf,
        Dist::Finite(v) => {
            assert!(v >= offset, "gadget answer {v} below chain offset {offset}");
            if v - offset > cutoff {
                Dist::Inf
            } else {
                Dist::Finite(v - offset)
            }
        }
    }
}

fn mwc_via_two_sisp_inner<F>(
    g: &Graph,
    mut two_sisp_oracle: F,
    offset_slack: u64,
    name: &'static str,
) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32, u32) -> Dist,
{
    let gadget = build_cycle_chain_gadget(g)?;
    let mut builder = ReportBuilder::new(name, g);
    builder.declare_calls(1).declare_size(
        3 * g.vertex_count() + 1,
        g.edge_count() + 4 * g.vertex_count() as usize,
    );
    builder.record_call(&gadget.graph);
    builder.construction_done();

    let n = g.vertex_count();
    let answer = two_sisp_oracle(
        &gadget.graph,
        gadget.role("p[0]"),
        gadget.role(&format!("p[{n}]")),
    );
    let recovered = recover(
        answer,
        gadget.recovery("offset") - offset_slack,
        gadget.recovery("cutoff"),
    );
    Ok((recovered, builder.finish()))
}

/// Minimum weight cycle via one second-simple-shortest-path query on the
/// chain gadget; `Inf` when the graph is acyclic.
pub fn mwc_via_two_sisp<F>(
    g: &Graph,
    two_sisp_oracle: F,
) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32, u32) -> Dist,
{
    mwc_via_two_sisp_inner(g, two_sisp_oracle, 0, "mwc-to-2sisp")
}

/// Deliberately broken variant subtracting one chain step too little, which
/// pushes every finite answer past the plausibility cutoff. Negative-control
/// fixture for harness sensitivity.
pub fn mwc_via_two_sisp_faulty_offset<F>(
    g: &Graph,
    two_sisp_oracle: F,
) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32, u32) -> Dist,
{
    let slack = g.vertex_count() as u64 * g.weight_profile()?.max_weight;
    mwc_via_two_sisp_inner(g, two_sisp_oracle, slack, "corrupt-mwc-to-2sisp-offset")
}

/// All-nodes shortest cycles via one replacement-paths query on the chain
/// gadget: the replacement for chain edge `(p[x], p[x+1])` recovers the
/// shortest cycle through vertex `x`.
pub fn ansc_via_replacement_paths<F>(
    g: &Graph,
    mut replacement_oracle: F,
) -> Result<(Vec<Dist>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32, u32) -> Vec<Dist>,
{
    let gadget = build_cycle_chain_gadget(g)?;
    let mut builder = ReportBuilder::new("ansc-to-repl", g);
    builder.declare_calls(1).declare_size(
        3 * g.vertex_count() + 1,
        g.edge_count() + 4 * g.vertex_count() as usize,
    );
    builder.record_call(&gadget.graph);
    builder.construction_done();

    let n = g.vertex_count();
    let per_edge = replacement_oracle(
        &gadget.graph,
        gadget.role("p[0]"),
        gadget.role(&format!("p[{n}]")),
    );
    assert_eq!(
        per_edge.len(),
        n as usize,
        "chain gadget shortest path must be the n-edge chain"
    );
    let offset = gadget.recovery("offset");
    let cutoff = gadget.recovery("cutoff");
    let answers = per_edge
        .into_iter()
        .map(|d| recover(d, offset, cutoff))
        .collect();
    Ok((answers, builder.finish()))
}
