use std::collections::BTreeMap;

use graph_core::{bit_unchecked, ceil_log2, Dist, GadgetGraph, Graph};

use crate::directed::{source_target_path, SourceTargetPath};
use crate::error::ReductionError;
use crate::report::ReportBuilder;
use crate::ReductionReport;

/// Shared layout of the hub gadgets: detour terminals `z_out[j]`/`z_in[j]`
/// per edge `j` of the canonical shortest path, probe vertices
/// `y_out[j]`/`y_in[j]`, and the bit-encoding columns `C[r][s]` that give
/// every cross pair `y_out[j] -> y_in[k]`, `k != j`, a two-hop path of
/// weight `6nM` without adding any same-index path.
pub(crate) struct HubLayout {
    pub n: u32,
    pub l: usize,
    pub columns: u32,
    pub z_out: Vec<u32>,
    pub z_in: Vec<u32>,
    pub y_out: Vec<u32>,
    pub y_in: Vec<u32>,
    pub column_base: u32,
}

impl HubLayout {
    pub fn new(n: u32, l: usize) -> HubLayout {
        // ceil(log2 l) columns; for l = 1 there are no cross pairs to wire
        // and a column would leave unreachable vertices, so none are built.
        let columns = ceil_log2(l as u32);
        let base = n;
        HubLayout {
            n,
            l,
            columns,
            z_out: (0..l as u32).map(|j| base + j).collect(),
            z_in: (0..l as u32).map(|j| base + l as u32 + j).collect(),
            y_out: (0..l as u32).map(|j| base + 2 * l as u32 + j).collect(),
            y_in: (0..l as u32).map(|j| base + 3 * l as u32 + j).collect(),
            column_base: base + 4 * l as u32,
        }
    }

    pub fn column(&self, r: u32, s: u8) -> u32 {
        debug_assert!(r >= 1 && r <= self.columns);
        self.column_base + 2 * (r - 1) + s as u32
    }

    /// Vertices after the C columns start here.
    pub fn next_free(&self) -> u32 {
        self.column_base + 2 * self.columns
    }

    /// Core edges shared by the radius and betweenness gadgets: the source
    /// graph minus the path edges, the detour wiring, `y_out -> z_out`,
    /// `z_in -> y_in` (weight chosen by the caller), and the C columns.
    pub fn core_edges(
        &self,
        g: &Graph,
        path: &SourceTargetPath,
        y_in_weight: u64,
        cross_hop: u64,
        edges: &mut Vec<(u32, u32, u64)>,
    ) {
        let l = self.l;
        let on_path = |u: u32, v: u32| {
            path.vertices
                .windows(2)
                .any(|pair| pair[0] == u && pair[1] == v)
        };
        for e in g.edges() {
            if !on_path(e.u, e.v) {
                edges.push((e.u, e.v, e.w));
            }
        }
        for j in 0..l {
            edges.push((self.z_out[j], path.vertices[j], path.to_vertex[j]));
            edges.push((path.vertices[j + 1], self.z_in[j], path.to_target[j + 1]));
            edges.push((self.z_in[j], self.z_out[j], 0));
            if j >= 1 {
                edges.push((self.z_out[j], self.z_in[j - 1], 0));
            }
            edges.push((self.y_out[j], self.z_out[j], 0));
            edges.push((self.z_in[j], self.y_in[j], y_in_weight));
        }
        for j in 0..l as u32 {
            for r in 1..=self.columns {
                let s = bit_unchecked(j, r);
                edges.push((self.y_out[j as usize], self.column(r, s), cross_hop));
                edges.push((self.column(r, 1 - s), self.y_in[j as usize], cross_hop));
            }
        }
    }

    pub fn insert_roles(&self, roles: &mut BTreeMap<String, u32>) {
        for v in 0..self.n {
            roles.insert(format!("v_copy[{v}]"), v);
        }
        for j in 0..self.l {
            roles.insert(format!("z_out[{j}]"), self.z_out[j]);
            roles.insert(format!("z_in[{j}]"), self.z_in[j]);
            roles.insert(format!("y_out[{j}]"), self.y_out[j]);
            roles.insert(format!("y_in[{j}]"), self.y_in[j]);
        }
        for r in 1..=self.columns {
            for s in 0..=1u8 {
                roles.insert(format!("C[{r}][{s}]"), self.column(r, s));
            }
        }
    }
}

/// The radius gadget: detour terminals for each path edge, probe vertices
/// with `z_in[j] -> y_in[j]` of weight `13nM`, hubs `A`, `B` tying the
/// `y_out` layer together (`y_out -> A` free, `A -> B` free, `B -> y_out`
/// at `9nM`), and the bit-encoding columns at `3nM` per hop. The center is
/// forced into the `y_out` layer, and the radius is `13nM` plus the
/// smallest replacement-path weight.
///
/// The probe hop must exceed `12nM`: a column whose bit disagrees with `j`
/// is reachable from `y_out[j]` only through `B` at cost `12nM`, so a
/// cheaper probe hop would let the columns dominate the eccentricity and
/// erase the replacement-path signal.
pub fn build_radius_gadget(g: &Graph, s: u32, t: u32) -> Result<GadgetGraph, ReductionError> {
    let path = source_target_path(g, s, t)?;
    let n = g.vertex_count();
    let max_weight = g.weight_profile()?.max_weight;
    let unit = n as u64 * max_weight;
    let layout = HubLayout::new(n, path.len());

    let mut edges = Vec::new();
    layout.core_edges(g, &path, 13 * unit, 3 * unit, &mut edges);

    let hub_a = layout.next_free();
    let hub_b = hub_a + 1;
    edges.push((hub_a, hub_b, 0));
    for j in 0..path.len() {
        edges.push((layout.y_out[j], hub_a, 0));
        edges.push((hub_b, layout.y_out[j], 9 * unit));
    }

    let mut roles = BTreeMap::new();
    layout.insert_roles(&mut roles);
    roles.insert("A".to_string(), hub_a);
    roles.insert("B".to_string(), hub_b);

    let mut recovery = BTreeMap::new();
    recovery.insert("n".to_string(), n as u64);
    recovery.insert("M".to_string(), max_weight);
    recovery.insert("M_prime".to_string(), 9 * unit);
    recovery.insert("offset".to_string(), 13 * unit);
    recovery.insert("cutoff".to_string(), unit);
    recovery.insert("l".to_string(), path.len() as u64);

    Ok(GadgetGraph {
        graph: Graph::new_gadget(hub_b + 1, true, edges)?,
        roles,
        recovery,
    })
}

fn recover(value: Dist, offset: u64, cutoff: u64) -> Dist {
    match value {
        Dist::Inf => Dist::Inf,
        Dist::Finite(v) => {
            assert!(v >= offset, "gadget answer {v} below offset {offset}");
            if v - offset > cutoff {
                Dist::Inf
            } else {
                Dist::Finite(v - offset)
            }
        }
    }
}

/// Second simple shortest path weight via one radius query on the hub
/// gadget. Requires every gadget vertex to be reachable from the probe
/// layer (which the harness enforces when sampling instances); recovered
/// values beyond `nM` certify that no replacement path exists and report
/// `Inf`.
pub fn two_sisp_via_radius<F>(
    g: &Graph,
    s: u32,
    t: u32,
    mut radius_oracle: F,
) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> (Dist, u32),
{
    let gadget = build_radius_gadget(g, s, t)?;
    let l = gadget.recovery("l") as usize;
    let mut builder = ReportBuilder::new("2sisp-to-radius", g);
    builder.declare_calls(1).declare_size(
        g.vertex_count() + 4 * l as u32 + 2 * ceil_log2(l as u32) + 2,
        g.edge_count() + 7 * l + 2 * l * ceil_log2(l as u32) as usize,
    );
    builder.record_call(&gadget.graph);
    builder.construction_done();

    let (value, _center) = radius_oracle(&gadget.graph);
    let answer = recover(value, gadget.recovery("offset"), gadget.recovery("cutoff"));
    Ok((answer, builder.finish()))
}

/// Replacement-path weights for every edge of the canonical shortest path
/// via one eccentricities query: entry `j` is `ecc(y_out[j]) - 11nM`, with
/// the same `nM` plausibility cutoff per entry.
pub fn replacement_paths_via_eccentricities<F>(
    g: &Graph,
    s: u32,
    t: u32,
    mut ecc_oracle: F,
) -> Result<(Vec<Dist>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> Vec<Dist>,
{
    let gadget = build_radius_gadget(g, s, t)?;
    let l = gadget.recovery("l") as usize;
    let mut builder = ReportBuilder::new("repl-to-ecc", g);
    builder.declare_calls(1).declare_size(
        g.vertex_count() + 4 * l as u32 + 2 * ceil_log2(l as u32) + 2,
        g.edge_count() + 7 * l + 2 * l * ceil_log2(l as u32) as usize,
    );
    builder.record_call(&gadget.graph);
    builder.construction_done();

    let ecc = ecc_oracle(&gadget.graph);
    let offset = gadget.recovery("offset");
    let cutoff = gadget.recovery("cutoff");
    let answers = (0..l)
        .map(|j| {
            let v = gadget.role(&format!("y_out[{j}]"));
            recover(ecc[v as usize], offset, cutoff)
        })
        .collect();
    Ok((answers, builder.finish()))
}
