use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use graph_core::{Dist, Graph};

/// Single-source shortest paths with the deterministic predecessor rule.
#[derive(Clone, Debug)]
pub struct ShortestPathTree {
    pub dist: Vec<Dist>,
    /// `pred[v]` is the smallest-id in-neighbour `u` with
    /// `dist[u] + w(u, v) = dist[v]`; `None` for the source and for
    /// unreachable vertices. Following `pred` yields the canonical
    /// shortest path to each vertex.
    pub pred: Vec<Option<u32>>,
}

/// Normalizes an edge pair for membership tests: undirected edges are keyed
/// by the sorted pair, directed arcs as given.
pub fn normalize_edge(g: &Graph, u: u32, v: u32) -> (u32, u32) {
    if g.is_directed() || u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Plain Dijkstra from `s`. Equal-distance vertices settle in increasing
/// vertex-id order.
pub fn dijkstra(g: &Graph, s: u32) -> ShortestPathTree {
    dijkstra_filtered(g, s, &HashSet::new(), &HashSet::new())
}

/// Dijkstra ignoring a set of removed edges (normalized pairs).
pub fn dijkstra_avoiding(g: &Graph, s: u32, removed: &HashSet<(u32, u32)>) -> ShortestPathTree {
    dijkstra_filtered(g, s, removed, &HashSet::new())
}

/// Dijkstra ignoring removed edges and banned vertices (the source must not
/// be banned). Weights may be zero but never negative.
pub fn dijkstra_filtered(
    g: &Graph,
    s: u32,
    removed_edges: &HashSet<(u32, u32)>,
    banned_vertices: &HashSet<u32>,
) -> ShortestPathTree {
    let n = g.vertex_count() as usize;
    debug_assert!(!banned_vertices.contains(&s));
    let mut dist = vec![Dist::Inf; n];
    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::new();
    dist[s as usize] = Dist::Finite(0);
    heap.push(Reverse((0, s)));

    while let Some(Reverse((d, v))) = heap.pop() {
        if Dist::Finite(d) > dist[v as usize] {
            continue;
        }
        for a in g.out_arcs(v) {
            if banned_vertices.contains(&a.to) {
                continue;
            }
            if !removed_edges.is_empty() && removed_edges.contains(&normalize_edge(g, v, a.to)) {
                continue;
            }
            let cand = Dist::Finite(d + a.w);
            if cand < dist[a.to as usize] {
                dist[a.to as usize] = cand;
                heap.push(Reverse((d + a.w, a.to)));
            }
        }
    }

    // Canonical predecessors: smallest-id tight in-neighbour. Computed as a
    // post-pass so heap order cannot influence path reconstruction.
    let mut pred = vec![None; n];
    for v in 0..n as u32 {
        if v == s || dist[v as usize].is_inf() {
            continue;
        }
        let target = dist[v as usize];
        let mut best: Option<u32> = None;
        for a in g.in_arcs(v) {
            if banned_vertices.contains(&a.to) {
                continue;
            }
            if !removed_edges.is_empty() && removed_edges.contains(&normalize_edge(g, a.to, v)) {
                continue;
            }
            if dist[a.to as usize] + a.w == target && best.map_or(true, |b| a.to < b) {
                best = Some(a.to);
            }
        }
        debug_assert!(best.is_some(), "finite distance without a tight in-edge");
        pred[v as usize] = best;
    }

    ShortestPathTree { dist, pred }
}

/// The canonical path `s -> .. -> t` from a predecessor array, or `None`
/// when `t` is unreachable.
pub fn reconstruct_path(tree: &ShortestPathTree, s: u32, t: u32) -> Option<Vec<u32>> {
    if tree.dist[t as usize].is_inf() {
        return None;
    }
    let mut path = vec![t];
    let mut cur = t;
    while cur != s {
        cur = tree.pred[cur as usize].expect("reachable vertex without predecessor");
        path.push(cur);
    }
    path.reverse();
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_triangle() -> Graph {
        Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    #[test]
    fn triangle_distances() {
        let t = dijkstra(&unit_triangle(), 0);
        assert_eq!(t.dist, vec![Dist::Finite(0), Dist::Finite(1), Dist::Finite(1)]);
    }

    #[test]
    fn path_distances() {
        let g = Graph::new(3, false, vec![(0, 1, 2), (1, 2, 3)]).unwrap();
        let t = dijkstra(&g, 0);
        assert_eq!(t.dist, vec![Dist::Finite(0), Dist::Finite(2), Dist::Finite(5)]);
        assert_eq!(reconstruct_path(&t, 0, 2).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn removed_edge_forces_detour() {
        let g = unit_triangle();
        let removed: HashSet<_> = [(0u32, 1u32)].into_iter().collect();
        let t = dijkstra_avoiding(&g, 0, &removed);
        assert_eq!(t.dist[1], Dist::Finite(2));
        assert_eq!(reconstruct_path(&t, 0, 1).unwrap(), vec![0, 2, 1]);
    }

    #[test]
    fn unreachable_is_inf() {
        let g = Graph::new(2, true, vec![(0, 1, 5)]).unwrap();
        let t = dijkstra(&g, 1);
        assert_eq!(t.dist[0], Dist::Inf);
        assert_eq!(reconstruct_path(&t, 1, 0), None);
    }

    #[test]
    fn canonical_pred_prefers_smaller_vertex() {
        // Two equally short 0 -> 3 paths via 1 and via 2.
        let g = Graph::new(4, true, vec![(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        let t = dijkstra(&g, 0);
        assert_eq!(t.pred[3], Some(1));
        assert_eq!(reconstruct_path(&t, 0, 3).unwrap(), vec![0, 1, 3]);
    }

    #[test]
    fn zero_weight_edges_are_sound() {
        let g = Graph::new_gadget(4, true, vec![(0, 1, 0), (1, 2, 0), (2, 3, 2), (0, 3, 3)]).unwrap();
        let t = dijkstra(&g, 0);
        assert_eq!(t.dist[3], Dist::Finite(2));
        assert_eq!(reconstruct_path(&t, 0, 3).unwrap(), vec![0, 1, 2, 3]);
    }
}
