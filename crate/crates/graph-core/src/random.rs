use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Graph, GraphError};

/// Parameters for seeded random graph generation. Generation is a pure
/// function of `(spec, seed)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomGraphSpec {
    pub n: u32,
    pub m: usize,
    pub directed: bool,
    pub min_weight: u64,
    pub max_weight: u64,
    /// Retry with fresh draws until the result is weakly connected.
    pub connected: bool,
}

/// Samples a simple graph with exactly `m` distinct edge slots chosen
/// uniformly and integer weights uniform in `[min_weight, max_weight]`.
pub fn random_graph(spec: &RandomGraphSpec, seed: u64) -> Result<Graph, GraphError> {
    assert!(spec.min_weight >= 1, "weights must be strictly positive");
    assert!(spec.min_weight <= spec.max_weight);
    assert!(spec.n >= 1);
    let max = Graph::max_simple_edges(spec.n, spec.directed);
    if spec.m > max {
        return Err(GraphError::TooManyEdges {
            requested: spec.m,
            n: spec.n,
            max,
        });
    }
    if spec.connected && spec.n >= 2 && spec.m + 1 < spec.n as usize {
        return Err(GraphError::InfeasibleConnectivity(format!(
            "{} edges cannot connect {} vertices",
            spec.m, spec.n
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const ATTEMPTS: usize = 10_000;
    for _ in 0..ATTEMPTS {
        let mut edges = Vec::with_capacity(spec.m);
        for slot in sample(&mut rng, max, spec.m) {
            let (u, v) = decode_slot(slot, spec.n, spec.directed);
            let w = rng.gen_range(spec.min_weight..=spec.max_weight);
            edges.push((u, v, w));
        }
        let g = Graph::new(spec.n, spec.directed, edges)?;
        if !spec.connected || g.is_weakly_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::InfeasibleConnectivity(format!(
        "no connected sample in {ATTEMPTS} attempts (n={}, m={})",
        spec.n, spec.m
    )))
}

/// Maps a slot index to the corresponding ordered or unordered vertex pair.
fn decode_slot(slot: usize, n: u32, directed: bool) -> (u32, u32) {
    let n = n as usize;
    if directed {
        let u = slot / (n - 1);
        let mut v = slot % (n - 1);
        if v >= u {
            v += 1;
        }
        (u as u32, v as u32)
    } else {
        // Row u holds pairs (u, u+1..n): row lengths n-1-u.
        let mut u = 0usize;
        let mut rem = slot;
        while rem >= n - 1 - u {
            rem -= n - 1 - u;
            u += 1;
        }
        (u as u32, (u + 1 + rem) as u32)
    }
}
