use std::collections::BTreeMap;

use graph_core::{ceil_log2, Dist, GadgetGraph, Graph};

use crate::directed::radius::HubLayout;
use crate::directed::source_target_path;
use crate::error::ReductionError;
use crate::report::ReportBuilder;
use crate::transcript::{BinarySearchTranscript, ProbeRecord};
use crate::ReductionReport;

/// The betweenness probe gadget: the hub layout with `z_in[j] -> y_in[j]`
/// at `9nM`, a single hub `A` with `y_out[j] -> A` free and
/// `A -> y_in[j]` at `9nM + q`. Exactly the pairs `(y_out[j], y_in[j])`
/// with `q` strictly below the detour distance route uniquely through `A`,
/// so `BC(A) = l` iff `q` undercuts every replacement path.
pub fn build_bc_probe_gadget(
    g: &Graph,
    s: u32,
    t: u32,
    probe: u64,
) -> Result<GadgetGraph, ReductionError> {
    let path = source_target_path(g, s, t)?;
    let n = g.vertex_count();
    let max_weight = g.weight_profile()?.max_weight;
    let unit = n as u64 * max_weight;
    if probe > unit {
        return Err(ReductionError::ProbeOutOfRange {
            probe,
            max: unit,
        });
    }
    let layout = HubLayout::new(n, path.len());

    let mut edges = Vec::new();
    layout.core_edges(g, &path, 9 * unit, 3 * unit, &mut edges);

    let hub_a = layout.next_free();
    for j in 0..path.len() {
        edges.push((layout.y_out[j], hub_a, 0));
        edges.push((hub_a, layout.y_in[j], 9 * unit + probe));
    }

    let mut roles = BTreeMap::new();
    layout.insert_roles(&mut roles);
    roles.insert("A".to_string(), hub_a);

    let mut recovery = BTreeMap::new();
    recovery.insert("n".to_string(), n as u64);
    recovery.insert("M".to_string(), max_weight);
    recovery.insert("M_prime".to_string(), 9 * unit);
    recovery.insert("probe".to_string(), probe);
    recovery.insert("cutoff".to_string(), unit);
    recovery.insert("l".to_string(), path.len() as u64);

    Ok(GadgetGraph {
        graph: Graph::new_gadget(hub_a + 1, true, edges)?,
        roles,
        recovery,
    })
}

/// Second simple shortest path weight via a binary search over the probe
/// weight: the predicate `BC(A) = l` is monotone non-increasing in `q`, and
/// the first `q` with `BC(A) < l` is the minimum replacement weight. At
/// most `ceil(log2(nM + 2)) + 1` oracle calls; a search that exhausts
/// `[0, nM]` reports `Inf`.
pub fn two_sisp_via_bc<F>(
    g: &Graph,
    s: u32,
    t: u32,
    mut bc_oracle: F,
) -> Result<(Dist, BinarySearchTranscript, ReductionReport), ReductionError>
where
    F: FnMut(&Graph, u32) -> u64,
{
    // Validate the pair and pin l before probing.
    let path = source_target_path(g, s, t)?;
    let l = path.len() as u64;
    let unit = g.vertex_count() as u64 * g.weight_profile()?.max_weight;

    let mut builder = ReportBuilder::new("2sisp-to-bc", g);
    builder
        .declare_calls(BinarySearchTranscript::call_bound(unit + 2))
        .declare_size(
            g.vertex_count() + 4 * l as u32 + 2 * ceil_log2(l as u32) + 1,
            g.edge_count() + 8 * l as usize + 2 * l as usize * ceil_log2(l as u32) as usize,
        );

    let mut transcript = BinarySearchTranscript::default();
    let mut lo = 0u64;
    let mut hi = unit + 1;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let gadget = build_bc_probe_gadget(g, s, t, mid)?;
        builder.record_call(&gadget.graph);
        let bc = bc_oracle(&gadget.graph, gadget.role("A"));
        transcript.probes.push(ProbeRecord::Count {
            probe: mid,
            answer: bc,
        });
        if bc < l {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    builder.construction_done();

    let answer = if lo > unit { Dist::Inf } else { Dist::Finite(lo) };
    Ok((answer, transcript, builder.finish()))
}

/// The cycle probe gadget: every vertex `x` split into `v_in[x]`/`v_out[x]`
/// plus a probe vertex `z[x]` with `v_out[x] -> z[x]` free and
/// `z[x] -> v_in[x]` at weight `probes[x]`, so `BC(z[x]) > 0` iff the
/// shortest cycle through `x` weighs strictly more than `probes[x]`.
pub fn build_cycle_probe_gadget(g: &Graph, probes: &[u64]) -> Result<GadgetGraph, ReductionError> {
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    let n = g.vertex_count();
    assert_eq!(probes.len(), n as usize);
    let max_weight = g.weight_profile()?.max_weight;
    let unit = n as u64 * max_weight;
    if let Some(&bad) = probes.iter().find(|&&q| q > unit) {
        return Err(ReductionError::ProbeOutOfRange {
            probe: bad,
            max: unit,
        });
    }

    let split_in = |x: u32| 2 * x;
    let split_out = |x: u32| 2 * x + 1;
    let probe_vertex = |x: u32| 2 * n + x;
    let mut edges = Vec::new();
    for x in 0..n {
        edges.push((split_in(x), split_out(x), 0));
        edges.push((split_out(x), probe_vertex(x), 0));
        edges.push((probe_vertex(x), split_in(x), probes[x as usize]));
    }
    for e in g.edges() {
        edges.push((split_out(e.u), split_in(e.v), e.w));
    }

    let mut roles = BTreeMap::new();
    let mut recovery = BTreeMap::new();
    for x in 0..n {
        roles.insert(format!("v_in[{x}]"), split_in(x));
        roles.insert(format!("v_out[{x}]"), split_out(x));
        roles.insert(format!("z[{x}]"), probe_vertex(x));
        recovery.insert(format!("q[{x}]"), probes[x as usize]);
    }
    recovery.insert("n".to_string(), n as u64);
    recovery.insert("M".to_string(), max_weight);
    recovery.insert("cutoff".to_string(), unit);

    Ok(GadgetGraph {
        graph: Graph::new_gadget(3 * n, true, edges)?,
        roles,
        recovery,
    })
}

/// All-nodes shortest cycles via simultaneous per-vertex binary searches:
/// each oracle call installs every vertex's current probe and answers all
/// predicates at once. At most `ceil(log2(nM + 2)) + 1` calls; vertices
/// whose search exhausts `[0, nM]` report `Inf`.
pub fn ansc_via_pos_anbc<F>(
    g: &Graph,
    mut pos_anbc_oracle: F,
) -> Result<(Vec<Dist>, BinarySearchTranscript, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> Vec<bool>,
{
    if !g.is_directed() {
        return Err(ReductionError::NotDirected);
    }
    let n = g.vertex_count() as usize;
    let mut builder = ReportBuilder::new("ansc-to-pos-anbc", g);
    let mut transcript = BinarySearchTranscript::default();
    if g.edge_count() == 0 {
        builder.declare_calls(0);
        return Ok((vec![Dist::Inf; n], transcript, builder.finish()));
    }
    let unit = g.vertex_count() as u64 * g.weight_profile()?.max_weight;
    builder
        .declare_calls(BinarySearchTranscript::call_bound(unit + 2))
        .declare_size(3 * g.vertex_count(), g.edge_count() + 3 * n);

    let mut lo = vec![0u64; n];
    let mut hi = vec![unit + 1; n];
    while (0..n).any(|x| lo[x] < hi[x]) {
        let probes: Vec<u64> = (0..n)
            .map(|x| {
                if lo[x] < hi[x] {
                    lo[x] + (hi[x] - lo[x]) / 2
                } else {
                    // Finished vertices keep a valid installed weight.
                    lo[x].min(unit)
                }
            })
            .collect();
        let gadget = build_cycle_probe_gadget(g, &probes)?;
        builder.record_call(&gadget.graph);
        let positive = pos_anbc_oracle(&gadget.graph);
        let answers: Vec<bool> = (0..n)
            .map(|x| positive[gadget.role(&format!("z[{x}]")) as usize])
            .collect();
        transcript.probes.push(ProbeRecord::Positives {
            probes: probes.clone(),
            answers: answers.clone(),
        });
        for x in 0..n {
            if lo[x] < hi[x] {
                // BC(z[x]) > 0 means the cycle weight still exceeds the
                // probe; the search looks for the first probe with BC = 0.
                if answers[x] {
                    lo[x] = probes[x] + 1;
                } else {
                    hi[x] = probes[x];
                }
            }
        }
    }
    builder.construction_done();

    let answers = (0..n)
        .map(|x| {
            if lo[x] > unit {
                Dist::Inf
            } else {
                Dist::Finite(lo[x])
            }
        })
        .collect();
    Ok((answers, transcript, builder.finish()))
}
