use std::collections::BTreeMap;

use graph_core::{Dist, GadgetGraph, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HardnessError {
    #[error("even-subset gadget needs an even k, got {0}")]
    KOdd(usize),
    #[error("odd-subset gadget needs an odd k >= 3, got {0}")]
    KEven(usize),
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: u32 },
    #[error("domination gadgets are defined on undirected graphs")]
    NotUndirected,
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}

/// Closed neighbourhood masks; n is limited to machine-word subsets, which
/// covers every desk-scale instance by a wide margin.
fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 63, "subset gadgets support at most 63 vertices");
    (0..n)
        .map(|v| {
            let mut mask = 1u64 << v;
            for a in g.out_arcs(v) {
                mask |= 1 << a.to;
            }
            mask
        })
        .collect()
}

/// All size-`r` subsets of `0..n` in lexicographic order, as cover masks.
fn subset_covers(n: u32, r: usize, neighborhoods: &[u64]) -> Vec<u64> {
    let mut covers = Vec::new();
    let mut current: Vec<u32> = (0..r as u32).collect();
    if r == 0 || r > n as usize {
        return covers;
    }
    loop {
        covers.push(current.iter().map(|&v| neighborhoods[v as usize]).fold(0, |a, b| a | b));
        // Advance to the next lexicographic combination.
        let mut i = r;
        loop {
            if i == 0 {
                return covers;
            }
            i -= 1;
            if current[i] != n - (r - i) as u32 {
                break;
            }
        }
        current[i] += 1;
        for j in i + 1..r {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn build_subset_gadget(
    g: &Graph,
    r: usize,
    kept: &[u32],
    recovery: BTreeMap<String, u64>,
) -> Result<GadgetGraph, HardnessError> {
    let n = g.vertex_count();
    let covers = subset_covers(n, r, &closed_neighborhoods(g));
    let side = covers.len() as u32;

    let mut roles = BTreeMap::new();
    for rank in 0..side {
        roles.insert(format!("subset[{rank}]"), rank);
    }
    let mut vertex_ids = BTreeMap::new();
    for (offset, &x) in kept.iter().enumerate() {
        let id = side + offset as u32;
        roles.insert(format!("v_copy[{x}]"), id);
        vertex_ids.insert(x, id);
    }

    let mut edges = Vec::new();
    for (rank, cover) in covers.iter().enumerate() {
        for &x in kept {
            if cover & (1 << x) == 0 {
                edges.push((rank as u32, vertex_ids[&x], 1));
            }
        }
    }
    for (i, &x) in kept.iter().enumerate() {
        for &y in &kept[i + 1..] {
            edges.push((vertex_ids[&x], vertex_ids[&y], 1));
        }
    }

    Ok(GadgetGraph {
        graph: Graph::new_gadget(side + kept.len() as u32, false, edges)?,
        roles,
        recovery,
    })
}

/// The even-k gadget: one vertex per size-`k/2` subset, one per original
/// vertex, an edge where the subset fails to dominate the vertex, and a
/// clique on the vertex side. Diameter 3 (or more, in the degenerate case
/// of an isolated subset vertex) exactly when a size-k dominating set
/// exists; diameter 2 otherwise.
pub fn build_kds_diameter_even(g: &Graph, k: usize) -> Result<GadgetGraph, HardnessError> {
    if g.is_directed() {
        return Err(HardnessError::NotUndirected);
    }
    if k % 2 != 0 {
        return Err(HardnessError::KOdd(k));
    }
    if k < 2 || k > g.vertex_count() as usize {
        return Err(HardnessError::KOutOfRange {
            k,
            n: g.vertex_count(),
        });
    }
    let kept: Vec<u32> = (0..g.vertex_count()).collect();
    let mut recovery = BTreeMap::new();
    recovery.insert("k".to_string(), k as u64);
    recovery.insert("subset_size".to_string(), (k / 2) as u64);
    recovery.insert("n".to_string(), g.vertex_count() as u64);
    build_subset_gadget(g, k / 2, &kept, recovery)
}

/// The odd-k probe for vertex `x`: size-`r` subsets (k = 2r + 1) against
/// the vertices outside `x`'s closed neighbourhood. Some probe has
/// diameter above 2 exactly when a size-k dominating set containing its
/// `x` exists.
pub fn build_kds_diameter_odd(g: &Graph, k: usize, x: u32) -> Result<GadgetGraph, HardnessError> {
    if g.is_directed() {
        return Err(HardnessError::NotUndirected);
    }
    if k % 2 == 0 || k < 3 {
        return Err(HardnessError::KEven(k));
    }
    if k > g.vertex_count() as usize {
        return Err(HardnessError::KOutOfRange {
            k,
            n: g.vertex_count(),
        });
    }
    let covered = closed_neighborhoods(g)[x as usize];
    let kept: Vec<u32> = (0..g.vertex_count())
        .filter(|&v| covered & (1 << v) == 0)
        .collect();
    let mut recovery = BTreeMap::new();
    recovery.insert("k".to_string(), k as u64);
    recovery.insert("subset_size".to_string(), ((k - 1) / 2) as u64);
    recovery.insert("n".to_string(), g.vertex_count() as u64);
    recovery.insert("x".to_string(), x as u64);
    build_subset_gadget(g, (k - 1) / 2, &kept, recovery)
}

/// Does `g` have a dominating set of size `k`? Decided purely through
/// diameter probes on the subset gadgets: one probe for even `k`, up to
/// `n` probes for odd `k >= 3`. `k = 1` is a direct degree check, not a
/// gadget. Any diameter above 2 (including infinity, which arises when a
/// subset already dominates everything it faces) certifies existence.
pub fn k_dominating_via_diameter<F>(
    g: &Graph,
    k: usize,
    mut diameter_oracle: F,
) -> Result<bool, HardnessError>
where
    F: FnMut(&Graph) -> Dist,
{
    if g.is_directed() {
        return Err(HardnessError::NotUndirected);
    }
    let n = g.vertex_count();
    if k < 1 || k > n as usize {
        return Err(HardnessError::KOutOfRange { k, n });
    }
    if k == 1 {
        let hoods = closed_neighborhoods(g);
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        return Ok(hoods.iter().any(|&h| h == all));
    }
    if k % 2 == 0 {
        let gadget = build_kds_diameter_even(g, k)?;
        return Ok(diameter_oracle(&gadget.graph) > Dist::Finite(2));
    }
    let hoods = closed_neighborhoods(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for x in 0..n {
        // x's closed neighbourhood covering everything answers the probe
        // without a gadget: x alone dominates, pad to size k.
        if hoods[x as usize] == all {
            return Ok(true);
        }
        let gadget = build_kds_diameter_odd(g, k, x)?;
        if diameter_oracle(&gadget.graph) > Dist::Finite(2) {
            return Ok(true);
        }
    }
    Ok(false)
}
