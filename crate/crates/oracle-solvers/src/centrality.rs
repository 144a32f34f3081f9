use std::collections::VecDeque;

use graph_core::{Dist, Graph};

use crate::dijkstra::dijkstra;

/// Per-vertex eccentricity `max_y d(x, y)`; `Inf` when some target is
/// unreachable.
pub fn eccentricities(g: &Graph) -> Vec<Dist> {
    (0..g.vertex_count())
        .map(|x| {
            dijkstra(g, x)
                .dist
                .into_iter()
                .max()
                .unwrap_or(Dist::Finite(0))
        })
        .collect()
}

/// Minimum eccentricity plus the smallest-id vertex attaining it.
pub fn radius(g: &Graph) -> (Dist, u32) {
    let ecc = eccentricities(g);
    let center = (0..g.vertex_count())
        .min_by_key(|&v| ecc[v as usize])
        .expect("radius of the empty graph");
    (ecc[center as usize], center)
}

/// Maximum distance over all pairs, i.e. the maximum eccentricity.
pub fn diameter(g: &Graph) -> Dist {
    eccentricities(g)
        .into_iter()
        .max()
        .unwrap_or(Dist::Finite(0))
}

/// Distances and shortest-path multiplicities for every ordered pair.
struct AllPairsCounts {
    dist: Vec<Vec<Dist>>,
    sigma: Vec<Vec<u128>>,
}

/// Per-source Dijkstra followed by multiplicity propagation over the
/// tight-edge DAG in topological order. Requires the graph to contain no
/// zero-weight cycle (tight edges would then form a cycle), which holds for
/// every graph and gadget in this workspace; violations panic.
fn all_pairs_counts(g: &Graph) -> AllPairsCounts {
    let n = g.vertex_count() as usize;
    let mut dist = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    for s in 0..n as u32 {
        let tree = dijkstra(g, s);
        let d = tree.dist;

        // Kahn's order over tight edges (u, v): dist[u] + w = dist[v].
        let mut indeg = vec![0u32; n];
        for v in 0..n as u32 {
            if d[v as usize].is_inf() {
                continue;
            }
            for a in g.out_arcs(v) {
                if d[v as usize] + a.w == d[a.to as usize] {
                    indeg[a.to as usize] += 1;
                }
            }
        }
        let mut counts = vec![0u128; n];
        counts[s as usize] = 1;
        let mut queue: VecDeque<u32> = (0..n as u32)
            .filter(|&v| d[v as usize].is_finite() && indeg[v as usize] == 0)
            .collect();
        let mut processed = 0usize;
        while let Some(v) = queue.pop_front() {
            processed += 1;
            for a in g.out_arcs(v) {
                if d[v as usize] + a.w == d[a.to as usize] {
                    counts[a.to as usize] = counts[a.to as usize]
                        .checked_add(counts[v as usize])
                        .expect("shortest-path multiplicity overflow");
                    indeg[a.to as usize] -= 1;
                    if indeg[a.to as usize] == 0 {
                        queue.push_back(a.to);
                    }
                }
            }
        }
        let reachable = d.iter().filter(|x| x.is_finite()).count();
        assert_eq!(
            processed, reachable,
            "zero-weight cycle in shortest-path DAG"
        );

        dist.push(d);
        sigma.push(counts);
    }
    AllPairsCounts { dist, sigma }
}

fn counts_through(c: &AllPairsCounts, s: usize, v: usize, t: usize) -> u128 {
    if c.dist[s][v] + c.dist[v][t] == c.dist[s][t] {
        c.sigma[s][v]
            .checked_mul(c.sigma[v][t])
            .expect("shortest-path multiplicity overflow")
    } else {
        0
    }
}

/// Strict betweenness centrality of `v`: the number of ordered pairs
/// `(s, t)` with `s != t`, both different from `v` and `d(s, t)` finite,
/// such that every shortest `s -> t` path passes through `v` (tested as
/// `sigma_{s,t}(v) = sigma_{s,t}`). On unique-shortest-path graphs this is
/// the plain count of pairs whose shortest path contains `v` internally.
pub fn bc_strict(g: &Graph, v: u32) -> u64 {
    let c = all_pairs_counts(g);
    bc_from_counts(&c, g.vertex_count() as usize, v as usize)
}

fn bc_from_counts(c: &AllPairsCounts, n: usize, v: usize) -> u64 {
    let mut count = 0u64;
    for s in 0..n {
        if s == v {
            continue;
        }
        for t in 0..n {
            if t == v || t == s || c.dist[s][t].is_inf() {
                continue;
            }
            if counts_through(c, s, v, t) == c.sigma[s][t] {
                count += 1;
            }
        }
    }
    count
}

/// Strict betweenness centrality of every vertex.
pub fn anbc_strict(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count() as usize;
    let c = all_pairs_counts(g);
    (0..n).map(|v| bc_from_counts(&c, n, v)).collect()
}

/// Per-vertex predicate `BC(v) > 0`.
pub fn pos_anbc(g: &Graph) -> Vec<bool> {
    let n = g.vertex_count() as usize;
    let c = all_pairs_counts(g);
    (0..n)
        .map(|v| {
            for s in 0..n {
                if s == v {
                    continue;
                }
                for t in 0..n {
                    if t == v
                        || t == s
                        || c.dist[s][t].is_inf()
                        || counts_through(&c, s, v, t) != c.sigma[s][t]
                    {
                        continue;
                    }
                    return true;
                }
            }
            false
        })
        .collect()
}
