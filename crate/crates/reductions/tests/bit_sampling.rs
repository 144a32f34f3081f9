//! Structural and end-to-end checks of the bit-sampled family and the
//! reductions built on it.

use graph_core::{random_graph, Dist, Graph, RandomGraphSpec, VertexLabelBits};
use oracle_solvers::{
    ansc_weights, apsp, enumerate_cycles_through, k_sisc_bruteforce, k_sisp_yen, mwc_direct,
    CycleWitness,
};
use reductions::undirected::*;

fn unit_triangle() -> Graph {
    Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap()
}

fn connected(n: u32, m: usize, max_w: u64, seed: u64) -> Graph {
    let spec = RandomGraphSpec {
        n,
        m: m.min(Graph::max_simple_edges(n, false)),
        directed: false,
        min_weight: 1,
        max_weight: max_w,
        connected: true,
    };
    random_graph(&spec, seed).unwrap()
}

#[test]
fn triangle_member_matches_hand_expansion() {
    // i = 1, j = 1: only vertex 1 has bit 1 set, so the cross edges are
    // (1, 0') and (1, 2'); 3 copy edges + 2 cross edges.
    let member = build_bit_sampled(&unit_triangle(), 1, 1, Some(1)).unwrap();
    assert_eq!(member.graph.vertex_count(), 6);
    assert_eq!(member.graph.edge_count(), 5);
    assert!(member.graph.has_edge(1, member.second_copy(0)));
    assert!(member.graph.has_edge(1, member.second_copy(2)));
    // Independent re-filter of the edge list.
    let bits = VertexLabelBits::for_n(3);
    for e in unit_triangle().edges() {
        for (tail, head) in [(e.u, e.v), (e.v, e.u)] {
            let expected = bits.bit(tail, 1).unwrap() == 1;
            assert_eq!(
                member.graph.has_edge(tail, member.second_copy(head)),
                expected
            );
        }
    }
}

#[test]
fn uniform_weights_use_a_single_bucket() {
    let g = unit_triangle();
    assert_eq!(bucket_count(&g.weight_profile().unwrap()), 1);
    // rho = 1: every edge satisfies M/2 < w <= M.
    assert_eq!(weight_bucket(1, 1), 1);
    assert!(build_bit_sampled(&g, 1, 0, Some(2)).is_err());
}

#[test]
fn bucket_partition_covers_every_weight_exactly_once() {
    for (max, min) in [(64u64, 1u64), (64, 2), (17, 3), (9, 9), (13, 1)] {
        let profile = graph_core::WeightProfile {
            max_weight: max,
            min_weight: min,
        };
        let count = bucket_count(&profile);
        for w in min..=max {
            let k = weight_bucket(w, max);
            assert!(k >= 1 && k <= count, "w={w} max={max} k={k} count={count}");
        }
    }
}

#[test]
fn union_over_bit_values_covers_all_orientations_in_bucket() {
    let g = connected(12, 24, 8, 5);
    let profile = g.weight_profile().unwrap();
    for k in 1..=bucket_count(&profile) {
        let a = build_bit_sampled(&g, 2, 0, Some(k)).unwrap();
        let b = build_bit_sampled(&g, 2, 1, Some(k)).unwrap();
        for e in g.edges() {
            for (tail, head) in [(e.u, e.v), (e.v, e.u)] {
                let in_bucket = weight_bucket(e.w, profile.max_weight) == k;
                let present = a.graph.has_edge(tail, a.second_copy(head))
                    || b.graph.has_edge(tail, b.second_copy(head));
                assert_eq!(present, in_bucket);
            }
        }
    }
}

#[test]
fn family_structure_theorem() {
    // 2n vertices, no second-copy adjacency, weights drawn from the source
    // graph, and each orientation appearing in exactly `width` members.
    let g = connected(14, 30, 16, 11);
    let n = g.vertex_count();
    let bits = VertexLabelBits::for_n(n);
    let profile = g.weight_profile().unwrap();
    let buckets = bucket_count(&profile);
    let source_weights: std::collections::HashSet<u64> =
        g.edges().iter().map(|e| e.w).collect();

    let mut orientation_hits = std::collections::HashMap::new();
    let mut members = 0;
    for i in 1..=bits.width() {
        for j in 0..=1u8 {
            for k in 1..=buckets {
                members += 1;
                let member = build_bit_sampled(&g, i, j, Some(k)).unwrap();
                assert_eq!(member.graph.vertex_count(), 2 * n);
                assert!(member.graph.edge_count() <= 3 * g.edge_count());
                for e in member.graph.edges() {
                    assert!(source_weights.contains(&e.w));
                    assert!(
                        e.u < n || e.v < n,
                        "edge joins two second-copy vertices"
                    );
                    if e.u.max(e.v) >= n {
                        let (tail, head) = if e.u < n { (e.u, e.v - n) } else { (e.v, e.u - n) };
                        *orientation_hits.entry((tail, head)).or_insert(0u32) += 1;
                    }
                }
            }
        }
    }
    assert_eq!(members, 2 * bits.width() * buckets);
    for e in g.edges() {
        for (tail, head) in [(e.u, e.v), (e.v, e.u)] {
            assert_eq!(
                orientation_hits.get(&(tail, head)).copied(),
                Some(bits.width()),
                "orientation ({tail},{head})"
            );
        }
    }
}

#[test]
fn mwc_examples() {
    let oracle = |h: &Graph| apsp(h);
    let (wt, report) = mwc_via_apsp(&unit_triangle(), oracle).unwrap();
    assert_eq!(wt, Dist::Finite(3));
    assert_eq!(report.oracle_calls, 2 * 2 * 1 + 1);
    assert!(report.within_budget);

    let four = Graph::new(4, false, vec![(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]).unwrap();
    let (wt, _) = mwc_via_apsp(&four, |h: &Graph| apsp(h)).unwrap();
    assert_eq!(wt, Dist::Finite(10));

    let forest = Graph::new(5, false, vec![(0, 1, 2), (1, 2, 2), (3, 4, 1)]).unwrap();
    let (wt, _) = mwc_via_apsp(&forest, |h: &Graph| apsp(h)).unwrap();
    assert_eq!(wt, Dist::Inf);
}

#[test]
fn mwc_equals_direct_on_random_graphs() {
    for seed in 0..40 {
        let n = 5 + seed % 12;
        let g = connected(n, (2 * n) as usize, 32, 100 + seed as u64);
        let direct = mwc_direct(&g).map_or(Dist::Inf, |c| Dist::Finite(c.weight));
        let (wt, report) = mwc_via_apsp(&g, |h: &Graph| apsp(h)).unwrap();
        assert_eq!(wt, direct, "seed {seed}");
        let bits = VertexLabelBits::for_n(n);
        let buckets = bucket_count(&g.weight_profile().unwrap());
        assert_eq!(
            report.oracle_calls,
            2 * bits.width() as usize * buckets as usize + 1
        );
    }
}

#[test]
fn every_candidate_is_witnessed_by_a_cycle() {
    // Soundness of the pair checks: each accepted candidate weight is
    // matched by a real simple cycle through that vertex of at most that
    // weight.
    for seed in 0..15 {
        let n = 5 + seed % 5;
        let g = connected(n, (2 * n) as usize, 8, 300 + seed as u64);
        let (_, candidates, _) = mwc_via_apsp_with_candidates(&g, |h: &Graph| apsp(h)).unwrap();
        assert!(!candidates.is_empty(), "seed {seed}");
        for c in candidates {
            let best_through = enumerate_cycles_through(&g, c.vertex)
                .first()
                .map(|w| w.weight);
            match best_through {
                Some(w) => assert!(
                    w <= c.weight,
                    "seed {seed}: candidate {c:?} beats best cycle {w}"
                ),
                None => panic!("seed {seed}: candidate {c:?} on acyclic vertex"),
            }
        }
    }
}

#[test]
fn faulty_bucket_variant_underestimates_somewhere() {
    let mut broke = false;
    for seed in 0..60 {
        let n = 6 + seed % 10;
        let g = connected(n, (2 * n) as usize, 64, 500 + seed as u64);
        let direct = mwc_direct(&g).map_or(Dist::Inf, |c| Dist::Finite(c.weight));
        let (wt, _) = mwc_via_apsp_faulty_bucket(&g, |h: &Graph| apsp(h)).unwrap();
        assert!(wt <= direct, "widened buckets can only add candidates");
        if wt < direct {
            broke = true;
        }
    }
    assert!(broke, "the corrupted bucket bound never misfired");
}

#[test]
fn ansc_examples_and_random_agreement() {
    let (wt, report) = ansc_via_apsp_unweighted(&unit_triangle(), |h: &Graph| apsp(h)).unwrap();
    assert_eq!(wt, vec![Dist::Finite(3); 3]);
    assert_eq!(report.oracle_calls, 2 * 2 + 1);

    let five = Graph::new(
        5,
        false,
        vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)],
    )
    .unwrap();
    let (wt, _) = ansc_via_apsp_unweighted(&five, |h: &Graph| apsp(h)).unwrap();
    assert_eq!(wt, vec![Dist::Finite(5); 5]);

    let weighted = Graph::new(3, false, vec![(0, 1, 2)]).unwrap();
    assert!(ansc_via_apsp_unweighted(&weighted, |h: &Graph| apsp(h)).is_err());

    for seed in 0..30 {
        let n = 5 + seed % 14;
        let g = connected(n, (2 * n) as usize, 1, 700 + seed as u64);
        let (wt, _) = ansc_via_apsp_unweighted(&g, |h: &Graph| apsp(h)).unwrap();
        assert_eq!(wt, ansc_weights(&g), "seed {seed}");
    }
}

#[test]
fn critical_edge_examples() {
    let g = unit_triangle();
    let c = CycleWitness {
        weight: 3,
        vertices: vec![0, 1, 2],
    };
    let p = critical_edge_position(&g, &c, 0);
    // Verified by scanning: position 1 (edge (1,2)) is the first satisfying
    // both straddle inequalities from start 0.
    assert_eq!(p, 1);

    let four = Graph::new(4, false, vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
    let c = CycleWitness {
        weight: 4,
        vertices: vec![0, 1, 2, 3],
    };
    assert_eq!(critical_edge_position(&four, &c, 0), 1);

    // Weights (1, 1, 10): the heavy edge is critical from every start.
    let heavy = Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1), (2, 0, 10)]).unwrap();
    let c = CycleWitness {
        weight: 12,
        vertices: vec![0, 1, 2],
    };
    let p = critical_edge_position(&heavy, &c, 0);
    assert_eq!((c.vertices[p], c.vertices[(p + 1) % 3]), (2, 0));
}

#[test]
fn ksisc_via_ksisp_matches_bruteforce() {
    let oracle = |h: &Graph, s: u32, t: u32, k: usize| k_sisp_yen(h, s, t, k);

    let (cycles, report) = k_sisc_via_k_sisp(&unit_triangle(), 0, 1, oracle).unwrap();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0].weight, 3);
    assert_eq!(report.oracle_calls, 2);

    let two = Graph::new(
        5,
        false,
        vec![(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 2), (3, 4, 2), (4, 0, 2)],
    )
    .unwrap();
    let (cycles, _) = k_sisc_via_k_sisp(&two, 0, 2, oracle).unwrap();
    assert_eq!(cycles.iter().map(|c| c.weight).collect::<Vec<_>>(), vec![3, 6]);

    let k4 = Graph::new(
        4,
        false,
        vec![(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
    )
    .unwrap();
    let (cycles, _) = k_sisc_via_k_sisp(&k4, 0, 4, oracle).unwrap();
    assert_eq!(
        cycles.iter().map(|c| c.weight).collect::<Vec<_>>(),
        vec![3, 3, 3, 4]
    );

    for seed in 0..25 {
        let n = 4 + seed % 9;
        let g = connected(n, (2 * n) as usize, 6, 900 + seed as u64);
        for k in 1..=5usize {
            let x = seed % n;
            let (got, _) = k_sisc_via_k_sisp(&g, x, k, oracle).unwrap();
            let want = k_sisc_bruteforce(&g, x, k);
            assert_eq!(
                got.iter().map(|c| c.weight).collect::<Vec<_>>(),
                want.iter().map(|c| c.weight).collect::<Vec<_>>(),
                "seed {seed} x {x} k {k}"
            );
            for c in &got {
                assert!(oracle_solvers::cycle_witness_is_valid(&g, c));
            }
        }
    }
}
