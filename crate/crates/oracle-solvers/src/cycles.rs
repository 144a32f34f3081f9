use std::collections::HashSet;

use graph_core::{Dist, Graph};

use crate::dijkstra::{dijkstra, dijkstra_avoiding, normalize_edge, reconstruct_path};

/// A simple cycle given as its vertex sequence (consecutive pairs and the
/// wrap-around are edges) plus its total weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CycleWitness {
    pub weight: u64,
    pub vertices: Vec<u32>,
}

/// Canonical form for dedup: rotate the minimum vertex id to the front;
/// undirected cycles additionally pick the direction whose second vertex is
/// smaller.
pub fn canonical_cycle(vertices: &[u32], directed: bool) -> Vec<u32> {
    let len = vertices.len();
    let min_pos = (0..len).min_by_key(|&i| vertices[i]).unwrap();
    let rotate = |dir_forward: bool| -> Vec<u32> {
        (0..len)
            .map(|i| {
                if dir_forward {
                    vertices[(min_pos + i) % len]
                } else {
                    vertices[(min_pos + len - i % len) % len]
                }
            })
            .collect()
    };
    let fwd = rotate(true);
    if directed {
        return fwd;
    }
    let bwd = rotate(false);
    if fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

pub fn cycle_witness_is_valid(g: &Graph, c: &CycleWitness) -> bool {
    let len = c.vertices.len();
    let min_len = if g.is_directed() { 2 } else { 3 };
    if len < min_len {
        return false;
    }
    let distinct: HashSet<_> = c.vertices.iter().collect();
    if distinct.len() != len {
        return false;
    }
    let mut total = 0u64;
    for i in 0..len {
        let u = c.vertices[i];
        let v = c.vertices[(i + 1) % len];
        match g.weight(u, v) {
            Some(w) => total += w,
            None => return false,
        }
    }
    total == c.weight
}

/// All simple cycles through `x`, canonicalized and deduplicated, in
/// (weight, vertex-sequence) order. Exponential; intended for small graphs.
pub fn enumerate_cycles_through(g: &Graph, x: u32) -> Vec<CycleWitness> {
    let n = g.vertex_count() as usize;
    let mut on_path = vec![false; n];
    on_path[x as usize] = true;
    let mut path = vec![x];
    let mut found = Vec::new();
    explore(g, x, x, &mut path, &mut on_path, 0, &mut found);
    let mut out: Vec<CycleWitness> = found
        .into_iter()
        .map(|(weight, vertices)| CycleWitness {
            weight,
            vertices: canonical_cycle(&vertices, g.is_directed()),
        })
        .collect();
    out.sort();
    out.dedup();
    out.sort_by(|a, b| (a.weight, &a.vertices).cmp(&(b.weight, &b.vertices)));
    out
}

fn explore(
    g: &Graph,
    x: u32,
    cur: u32,
    path: &mut Vec<u32>,
    on_path: &mut [bool],
    weight: u64,
    found: &mut Vec<(u64, Vec<u32>)>,
) {
    for a in g.out_arcs(cur) {
        if a.to == x && path.len() >= 2 {
            let closes_undirected_backwards = !g.is_directed() && path[1] > *path.last().unwrap();
            let too_short = !g.is_directed() && path.len() < 3;
            if !too_short && !closes_undirected_backwards {
                found.push((weight + a.w, path.clone()));
            }
        } else if !on_path[a.to as usize] && a.to != x {
            on_path[a.to as usize] = true;
            path.push(a.to);
            explore(g, x, a.to, path, on_path, weight + a.w, found);
            path.pop();
            on_path[a.to as usize] = false;
        }
    }
}

/// Minimum weight cycle.
///
/// Directed: min over edges `(u, v)` of `w(u, v) + d(v, u)`. Undirected:
/// min over edges of `w(u, v) + d_{G-(u,v)}(u, v)`, which never traverses
/// the same undirected edge twice. `None` when the graph is acyclic.
pub fn mwc_direct(g: &Graph) -> Option<CycleWitness> {
    let mut best: Option<CycleWitness> = None;
    if g.is_directed() {
        let trees: Vec<_> = (0..g.vertex_count()).map(|v| dijkstra(g, v)).collect();
        for e in g.edges() {
            let back = &trees[e.v as usize];
            if let Dist::Finite(d) = back.dist[e.u as usize] {
                let weight = e.w + d;
                if best.as_ref().map_or(true, |b| weight < b.weight) {
                    let vertices = reconstruct_path(back, e.v, e.u).unwrap();
                    best = Some(CycleWitness { weight, vertices });
                }
            }
        }
    } else {
        for e in g.edges() {
            let removed: HashSet<_> = [normalize_edge(g, e.u, e.v)].into_iter().collect();
            let tree = dijkstra_avoiding(g, e.u, &removed);
            if let Dist::Finite(d) = tree.dist[e.v as usize] {
                let weight = e.w + d;
                if best.as_ref().map_or(true, |b| weight < b.weight) {
                    let vertices = reconstruct_path(&tree, e.u, e.v).unwrap();
                    best = Some(CycleWitness { weight, vertices });
                }
            }
        }
    }
    best.map(|c| CycleWitness {
        vertices: canonical_cycle(&c.vertices, g.is_directed()),
        ..c
    })
}

/// Shortest cycle through each vertex.
///
/// Undirected: per vertex `v`, min over incident edges `e = (v, u)` of
/// `w(e) + d_{G-e}(u, v)`. Directed: per vertex `v`, min over in-edges
/// `(u, v)` of `d(v, u) + w(u, v)`.
pub fn ansc_direct(g: &Graph) -> Vec<Option<CycleWitness>> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(n as usize);
    for v in 0..n {
        let mut best: Option<CycleWitness> = None;
        if g.is_directed() {
            let tree = dijkstra(g, v);
            for a in g.in_arcs(v) {
                if let Dist::Finite(d) = tree.dist[a.to as usize] {
                    let weight = d + a.w;
                    if best.as_ref().map_or(true, |b| weight < b.weight) {
                        let vertices = reconstruct_path(&tree, v, a.to).unwrap();
                        best = Some(CycleWitness { weight, vertices });
                    }
                }
            }
        } else {
            for a in g.out_arcs(v) {
                let removed: HashSet<_> = [normalize_edge(g, v, a.to)].into_iter().collect();
                let tree = dijkstra_avoiding(g, v, &removed);
                if let Dist::Finite(d) = tree.dist[a.to as usize] {
                    let weight = a.w + d;
                    if best.as_ref().map_or(true, |b| weight < b.weight) {
                        let vertices = reconstruct_path(&tree, v, a.to).unwrap();
                        best = Some(CycleWitness { weight, vertices });
                    }
                }
            }
        }
        out.push(best.map(|c| CycleWitness {
            vertices: canonical_cycle(&c.vertices, g.is_directed()),
            ..c
        }));
    }
    out
}

/// Per-vertex shortest-cycle weights, `Inf` where no cycle exists.
pub fn ansc_weights(g: &Graph) -> Vec<Dist> {
    ansc_direct(g)
        .into_iter()
        .map(|c| c.map_or(Dist::Inf, |c| Dist::Finite(c.weight)))
        .collect()
}

/// The first `k` simple cycles through `x` by exhaustive enumeration,
/// ordered by (weight, canonical vertex sequence).
pub fn k_sisc_bruteforce(g: &Graph, x: u32, k: usize) -> Vec<CycleWitness> {
    let mut all = enumerate_cycles_through(g, x);
    all.truncate(k);
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_triangle() -> Graph {
        Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
    }

    /// Two triangles sharing vertex 0: light one {0,1,2} with unit weights,
    /// heavy one {0,3,4} with weight-2 edges.
    fn two_triangles() -> Graph {
        Graph::new(
            5,
            false,
            vec![(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 2), (3, 4, 2), (4, 0, 2)],
        )
        .unwrap()
    }

    #[test]
    fn mwc_of_triangle() {
        let c = mwc_direct(&unit_triangle()).unwrap();
        assert_eq!(c.weight, 3);
        assert_eq!(c.vertices.len(), 3);
    }

    #[test]
    fn mwc_of_weighted_four_cycle() {
        let g = Graph::new(4, false, vec![(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]).unwrap();
        assert_eq!(mwc_direct(&g).unwrap().weight, 10);
    }

    // Frozen from the independent enumeration oracle: K4 has four triangles,
    // of which three pass through any fixed vertex, all of weight 3.
    #[test]
    fn mwc_of_unit_k4() {
        let g = Graph::new(
            4,
            false,
            vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        )
        .unwrap();
        let c = mwc_direct(&g).unwrap();
        assert_eq!(c.weight, 3);
        assert!(cycle_witness_is_valid(&g, &c));
        let all = enumerate_cycles_through(&g, 0);
        assert_eq!(all.iter().map(|c| c.weight).min(), Some(3));
    }

    #[test]
    fn ansc_triangle_and_path() {
        assert_eq!(ansc_weights(&unit_triangle()), vec![Dist::Finite(3); 3]);
        let path = Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1)]).unwrap();
        assert_eq!(ansc_weights(&path), vec![Dist::Inf; 3]);
    }

    #[test]
    fn ansc_two_triangles() {
        let w = ansc_weights(&two_triangles());
        assert_eq!(
            w,
            vec![
                Dist::Finite(3),
                Dist::Finite(3),
                Dist::Finite(3),
                Dist::Finite(6),
                Dist::Finite(6)
            ]
        );
    }

    #[test]
    fn directed_mwc_and_ansc() {
        let g = Graph::new(3, true, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(mwc_direct(&g).unwrap().weight, 3);
        assert_eq!(ansc_weights(&g), vec![Dist::Finite(3); 3]);
        let dag = Graph::new(3, true, vec![(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(mwc_direct(&dag).is_none());
        assert_eq!(ansc_weights(&dag), vec![Dist::Inf; 3]);
    }

    #[test]
    fn k_sisc_examples() {
        let tri = unit_triangle();
        assert_eq!(
            k_sisc_bruteforce(&tri, 0, 2)
                .iter()
                .map(|c| c.weight)
                .collect::<Vec<_>>(),
            vec![3]
        );

        let two = two_triangles();
        assert_eq!(
            k_sisc_bruteforce(&two, 0, 2)
                .iter()
                .map(|c| c.weight)
                .collect::<Vec<_>>(),
            vec![3, 6]
        );

        // K4: three triangles through vertex 0, then three 4-cycles; frozen
        // from hand enumeration (triangles 012, 013, 023; weight-4 cycles
        // 0123, 0132, 0213).
        let k4 = Graph::new(
            4,
            false,
            vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        )
        .unwrap();
        let cycles = k_sisc_bruteforce(&k4, 0, 4);
        assert_eq!(
            cycles.iter().map(|c| c.weight).collect::<Vec<_>>(),
            vec![3, 3, 3, 4]
        );
        assert_eq!(enumerate_cycles_through(&k4, 0).len(), 6);
        for c in &cycles {
            assert!(cycle_witness_is_valid(&k4, c));
        }
    }

    #[test]
    fn directed_two_cycle_counts() {
        let g = Graph::new(2, true, vec![(0, 1, 1), (1, 0, 3)]).unwrap();
        let cycles = enumerate_cycles_through(&g, 0);
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].weight, 4);
        assert_eq!(mwc_direct(&g).unwrap().weight, 4);
    }

    #[test]
    fn canonical_form_is_rotation_invariant() {
        assert_eq!(canonical_cycle(&[2, 0, 1], false), vec![0, 1, 2]);
        assert_eq!(canonical_cycle(&[2, 1, 0], false), vec![0, 1, 2]);
        assert_eq!(canonical_cycle(&[3, 2, 0, 1], false), vec![0, 1, 3, 2]);
        // Directed cycles keep their orientation.
        assert_eq!(canonical_cycle(&[2, 1, 0], true), vec![0, 2, 1]);
    }
}
