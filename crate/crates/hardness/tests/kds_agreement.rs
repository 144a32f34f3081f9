//! Gadget-based domination decisions against the brute-force solver.

use graph_core::{random_graph, Dist, Graph, RandomGraphSpec};
use hardness::{build_kds_diameter_even, k_dominating_via_diameter};
use oracle_solvers::{diameter, k_dominating_set_bruteforce};

#[test]
fn agrees_with_bruteforce_on_random_graphs() {
    for seed in 0..50u64 {
        let n = 4 + (seed % 6) as u32;
        let spec = RandomGraphSpec {
            n,
            m: (2 * n as usize).min(Graph::max_simple_edges(n, false)),
            directed: false,
            min_weight: 1,
            max_weight: 1,
            connected: false,
        };
        let g = random_graph(&spec, seed).unwrap();
        for k in 2..=4usize.min(n as usize) {
            let got = k_dominating_via_diameter(&g, k, |h: &Graph| diameter(h)).unwrap();
            let want = k_dominating_set_bruteforce(&g, k).is_some();
            assert_eq!(got, want, "seed {seed} n {n} k {k}");
        }
    }
}

#[test]
fn even_gadget_diameter_is_two_or_three_on_nondegenerate_inputs() {
    for seed in 100..160u64 {
        let n = 5 + (seed % 4) as u32;
        let spec = RandomGraphSpec {
            n,
            m: (2 * n as usize).min(Graph::max_simple_edges(n, false)),
            directed: false,
            min_weight: 1,
            max_weight: 1,
            connected: true,
        };
        let g = random_graph(&spec, seed).unwrap();
        for k in [2usize, 4] {
            if k > n as usize {
                continue;
            }
            // Degenerate when some k/2-subset already dominates everything;
            // its gadget vertex is isolated and the diameter is infinite.
            let degenerate = k_dominating_set_bruteforce(&g, k / 2).is_some();
            let gadget = build_kds_diameter_even(&g, k).unwrap();
            let d = diameter(&gadget.graph);
            if degenerate {
                assert_eq!(d, Dist::Inf, "seed {seed} k {k}");
            } else {
                assert!(
                    d == Dist::Finite(2) || d == Dist::Finite(3),
                    "seed {seed} k {k}: diameter {d}"
                );
            }
        }
    }
}
