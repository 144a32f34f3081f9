use graph_core::Graph;

/// First size-`k` dominating set in lexicographic order, if any. A vertex
/// dominates its closed neighbourhood. Exhaustive; intended for small `n`.
pub fn k_dominating_set_bruteforce(g: &Graph, k: usize) -> Option<Vec<u32>> {
    assert!(!g.is_directed(), "dominating sets are defined on undirected graphs");
    let n = g.vertex_count() as usize;
    assert!(k <= n, "dominating set size exceeds vertex count");
    let mut chosen: Vec<u32> = Vec::with_capacity(k);
    if search(g, k, 0, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn search(g: &Graph, k: usize, from: u32, chosen: &mut Vec<u32>) -> bool {
    if chosen.len() == k {
        return dominates(g, chosen);
    }
    let remaining = k - chosen.len();
    let n = g.vertex_count();
    for v in from..=n.saturating_sub(remaining as u32) {
        chosen.push(v);
        if search(g, k, v + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// True when every vertex is in `set` or adjacent to it.
pub fn dominates(g: &Graph, set: &[u32]) -> bool {
    let n = g.vertex_count() as usize;
    let mut covered = vec![false; n];
    for &v in set {
        covered[v as usize] = true;
        for a in g.out_arcs(v) {
            covered[a.to as usize] = true;
        }
    }
    covered.iter().all(|&c| c)
}
