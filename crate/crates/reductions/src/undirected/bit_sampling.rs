use graph_core::{Dist, Graph, VertexLabelBits, WeightProfile};
use oracle_solvers::{ApspResult, CycleWitness};

use crate::error::ReductionError;
use crate::report::ReportBuilder;
use crate::ReductionReport;

/// One member of the bit-sampled two-copy family.
///
/// The first copy of vertex `u` is `u`, the second is `n + u`. All original
/// edges live on the first copy; a cross edge `(u, n + v)` exists iff
/// `(u, v)` is an edge orientation whose tail bit `i` equals `j` and (when a
/// bucket index is present) whose weight `w` satisfies
/// `M/2^k < w <= M/2^(k-1)`. Second-copy vertices touch only cross edges.
#[derive(Clone, Debug)]
pub struct BitSampledGraph {
    pub graph: Graph,
    pub bit_index: u32,
    pub bit_value: u8,
    pub bucket: Option<u32>,
}

impl BitSampledGraph {
    pub fn first_copy(&self, u: u32) -> u32 {
        u
    }

    pub fn second_copy(&self, u: u32) -> u32 {
        self.graph.vertex_count() / 2 + u
    }

    /// Maps either copy back to the original vertex id.
    pub fn original(&self, id: u32) -> u32 {
        let n = self.graph.vertex_count() / 2;
        if id < n {
            id
        } else {
            id - n
        }
    }
}

/// Number of weight buckets: the largest `t` with `2^t <= max/min`, plus
/// one. This guarantees every weight in `[min, max]` falls in exactly one
/// bucket `(M/2^k, M/2^(k-1)]`; uniform weights yield a single bucket.
pub fn bucket_count(profile: &WeightProfile) -> u32 {
    profile.ratio_floor_log2() + 1
}

/// The unique bucket of `w`: the `k >= 1` with `M/2^k < w <= M/2^(k-1)`,
/// compared by cross-multiplication.
pub fn weight_bucket(w: u64, max_weight: u64) -> u32 {
    debug_assert!(w >= 1 && w <= max_weight);
    // Deepen while w <= M/2^k, i.e. while the lower bound still excludes w.
    let mut k = 1u32;
    while (w as u128) << k <= max_weight as u128 {
        k += 1;
    }
    debug_assert!((w as u128) << (k - 1) <= max_weight as u128);
    k
}

// M/2^(k+lower_shift) < w <= M/2^(k-1); a faithful bucket has shift 0.
fn in_bucket(w: u64, max_weight: u64, k: u32, lower_shift: u32) -> bool {
    ((w as u128) << (k + lower_shift)) > max_weight as u128
        && ((w as u128) << (k - 1)) <= max_weight as u128
}

/// Builds the family member for bit index `i`, bit value `j` and optional
/// weight bucket `k`.
pub fn build_bit_sampled(
    g: &Graph,
    i: u32,
    j: u8,
    k: Option<u32>,
) -> Result<BitSampledGraph, ReductionError> {
    build_bit_sampled_inner(g, i, j, k, 0)
}

/// `bucket_lower_shift` widens each bucket's lower bound by that many
/// halvings; it exists only so the harness can prove its own sensitivity
/// and must be 0 for a correct reduction.
fn build_bit_sampled_inner(
    g: &Graph,
    i: u32,
    j: u8,
    k: Option<u32>,
    bucket_lower_shift: u32,
) -> Result<BitSampledGraph, ReductionError> {
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    let n = g.vertex_count();
    let bits = VertexLabelBits::for_n(n);
    if i < 1 || i > bits.width() {
        return Err(ReductionError::ParamOutOfRange {
            name: "bit_index",
            value: i as u64,
            low: 1,
            high: bits.width() as u64,
        });
    }
    if j > 1 {
        return Err(ReductionError::ParamOutOfRange {
            name: "bit_value",
            value: j as u64,
            low: 0,
            high: 1,
        });
    }
    let profile = g.weight_profile()?;
    if let Some(k) = k {
        let count = bucket_count(&profile);
        if k < 1 || k > count {
            return Err(ReductionError::ParamOutOfRange {
                name: "bucket",
                value: k as u64,
                low: 1,
                high: count as u64,
            });
        }
    }

    let mut edges: Vec<(u32, u32, u64)> = Vec::with_capacity(3 * g.edge_count());
    for e in g.edges() {
        edges.push((e.u, e.v, e.w));
    }
    let keep = |w: u64| match k {
        None => true,
        Some(k) => in_bucket(w, profile.max_weight, k, bucket_lower_shift),
    };
    for e in g.edges() {
        for (tail, head) in [(e.u, e.v), (e.v, e.u)] {
            if bits.bit(tail, i).unwrap() == j && keep(e.w) {
                edges.push((tail, n + head, e.w));
            }
        }
    }
    Ok(BitSampledGraph {
        graph: Graph::new(2 * n, false, edges)?,
        bit_index: i,
        bit_value: j,
        bucket: k,
    })
}

/// A pair that passed all checks of the reduction, with the cycle weight it
/// certifies. Exposed so tests can re-verify the soundness claim (every
/// candidate is witnessed by a real simple cycle through `vertex`).
#[derive(Clone, Copy, Debug)]
pub struct CycleCandidate {
    pub start: u32,
    pub vertex: u32,
    pub weight: u64,
}

fn mwc_via_apsp_inner<F>(
    g: &Graph,
    mut apsp_oracle: F,
    bucket_lower_shift: u32,
    name: &'static str,
) -> Result<(Dist, Vec<CycleCandidate>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> ApspResult,
{
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    let n = g.vertex_count();
    let mut builder = ReportBuilder::new(name, g);
    if g.edge_count() == 0 {
        builder.declare_calls(0);
        return Ok((Dist::Inf, Vec::new(), builder.finish()));
    }

    let profile = g.weight_profile()?;
    let bits = VertexLabelBits::for_n(n);
    let buckets = bucket_count(&profile);
    let expected_calls = 2 * bits.width() as usize * buckets as usize + 1;
    builder
        .declare_calls(expected_calls)
        .declare_size(2 * n, 3 * g.edge_count());

    builder.record_call(g);
    let base = apsp_oracle(g);

    let mut best = Dist::Inf;
    let mut candidates = Vec::new();
    for i in 1..=bits.width() {
        for j in 0..=1u8 {
            for k in 1..=buckets {
                let member = build_bit_sampled_inner(g, i, j, Some(k), bucket_lower_shift)?;
                builder.record_call(&member.graph);
                let reduced = apsp_oracle(&member.graph);
                scan_pairs(
                    g,
                    &member,
                    &base,
                    &reduced,
                    profile.max_weight,
                    k,
                    |start, vertex, weight| {
                        candidates.push(CycleCandidate {
                            start,
                            vertex,
                            weight,
                        });
                        if Dist::Finite(weight) < best {
                            best = Dist::Finite(weight);
                        }
                    },
                );
            }
        }
    }
    builder.construction_done();
    Ok((best, candidates, builder.finish()))
}

/// Scans all ordered pairs `(y, z)` of one family member and reports every
/// pair passing the three checks: finite distances, the bucket slack bound
/// `d_red(y1, z2) <= d(y, z) + M/2^(k-1)`, and disagreeing predecessors
/// after mapping the reduced predecessor back to its original id.
fn scan_pairs<F>(
    g: &Graph,
    member: &BitSampledGraph,
    base: &ApspResult,
    reduced: &ApspResult,
    max_weight: u64,
    k: u32,
    mut hit: F,
) where
    F: FnMut(u32, u32, u64),
{
    let n = g.vertex_count();
    for y in 0..n {
        for z in 0..n {
            if y == z {
                continue;
            }
            let Dist::Finite(d_base) = base.dist[y as usize][z as usize] else {
                continue;
            };
            let second = member.second_copy(z);
            let Dist::Finite(d_red) = reduced.dist[y as usize][second as usize] else {
                continue;
            };
            // d_red <= d_base + M/2^(k-1)  ⟺  (d_red - d_base) * 2^(k-1) <= M
            if d_red < d_base {
                // Cannot happen for a faithful oracle; treat as within slack.
            } else if ((d_red - d_base) as u128) << (k - 1) > max_weight as u128 {
                continue;
            }
            let last_reduced = reduced.last[y as usize][second as usize].map(|p| member.original(p));
            let last_base = base.last[y as usize][z as usize];
            if last_reduced == last_base {
                continue;
            }
            hit(y, z, d_red + d_base);
        }
    }
}

/// Minimum weight cycle through `2 * width * buckets + 1` APSP calls, each
/// on a two-copy graph with `2n` vertices whose weights all occur in `g`.
/// Returns the cycle weight (`Inf` when acyclic) and the call report.
pub fn mwc_via_apsp<F>(g: &Graph, apsp_oracle: F) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> ApspResult,
{
    let (best, _, report) = mwc_via_apsp_inner(g, apsp_oracle, 0, "mwc-to-apsp")?;
    Ok((best, report))
}

/// Like [`mwc_via_apsp`] but also returns every pair that passed the checks,
/// for soundness re-verification in tests.
pub fn mwc_via_apsp_with_candidates<F>(
    g: &Graph,
    apsp_oracle: F,
) -> Result<(Dist, Vec<CycleCandidate>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> ApspResult,
{
    mwc_via_apsp_inner(g, apsp_oracle, 0, "mwc-to-apsp")
}

/// Deliberately broken variant with one bucket bound widened: admits cross
/// edges one weight octave too light, so the slack check no longer excludes
/// doubled-edge walks. Negative-control fixture for harness sensitivity.
pub fn mwc_via_apsp_faulty_bucket<F>(
    g: &Graph,
    apsp_oracle: F,
) -> Result<(Dist, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> ApspResult,
{
    let (best, _, report) = mwc_via_apsp_inner(g, apsp_oracle, 1, "corrupt-mwc-to-apsp-bucket")?;
    Ok((best, report))
}

/// Per-vertex shortest cycle lengths in an unweighted graph via the
/// bucket-free family: `2 * width + 1` APSP calls. A candidate for `z` is
/// accepted only when the slack check passes, the predecessors disagree,
/// and the pair is balanced (`d(y, z) = floor(q / 2)` for candidate `q`).
pub fn ansc_via_apsp_unweighted<F>(
    g: &Graph,
    mut apsp_oracle: F,
) -> Result<(Vec<Dist>, ReductionReport), ReductionError>
where
    F: FnMut(&Graph) -> ApspResult,
{
    if g.is_directed() {
        return Err(ReductionError::NotUndirected);
    }
    if let Some(bad) = g.edges().iter().find(|e| e.w != 1) {
        return Err(ReductionError::NonUnitWeight(bad.w));
    }
    let n = g.vertex_count();
    let bits = VertexLabelBits::for_n(n);
    let mut builder = ReportBuilder::new("ansc-to-apsp", g);
    let mut wt = vec![Dist::Inf; n as usize];
    if g.edge_count() == 0 {
        builder.declare_calls(0);
        return Ok((wt, builder.finish()));
    }
    builder
        .declare_calls(2 * bits.width() as usize + 1)
        .declare_size(2 * n, 3 * g.edge_count());

    builder.record_call(g);
    let base = apsp_oracle(g);

    for i in 1..=bits.width() {
        for j in 0..=1u8 {
            let member = build_bit_sampled(g, i, j, None)?;
            builder.record_call(&member.graph);
            let reduced = apsp_oracle(&member.graph);
            for y in 0..n {
                for z in 0..n {
                    if y == z {
                        continue;
                    }
                    let Dist::Finite(d_base) = base.dist[y as usize][z as usize] else {
                        continue;
                    };
                    let second = member.second_copy(z);
                    let Dist::Finite(d_red) = reduced.dist[y as usize][second as usize] else {
                        continue;
                    };
                    if d_red > d_base + 1 {
                        continue;
                    }
                    let last_reduced =
                        reduced.last[y as usize][second as usize].map(|p| member.original(p));
                    if last_reduced == base.last[y as usize][z as usize] {
                        continue;
                    }
                    let q = d_red + d_base;
                    if d_base != q / 2 {
                        continue;
                    }
                    if Dist::Finite(q) < wt[z as usize] {
                        wt[z as usize] = Dist::Finite(q);
                    }
                }
            }
        }
    }
    builder.construction_done();
    Ok((wt, builder.finish()))
}

/// A position `p` of the cycle (0-indexed relative to a rotation placing
/// `start_index` first) such that the edge from position `p` to `p + 1`
/// satisfies the half-weight straddle inequalities
/// `ceil(W/2) - w(e) <= d_C(v1, v_p) <= floor(W/2)` and likewise for
/// `d_C(v_{p+1}, v1)`, with distances measured within the cycle. Existence
/// is guaranteed for every cycle; absence panics.
pub fn critical_edge_position(g: &Graph, cycle: &CycleWitness, start_index: usize) -> usize {
    let len = cycle.vertices.len();
    assert!(start_index < len);
    let rot = |t: usize| cycle.vertices[(start_index + t) % len];

    let mut prefix = vec![0u64; len + 1];
    for t in 0..len {
        let w = g
            .weight(rot(t), rot((t + 1) % len))
            .expect("witness edge missing from graph");
        prefix[t + 1] = prefix[t] + w;
    }
    let total = cycle.weight;
    assert_eq!(prefix[len], total, "witness weight mismatch");
    let d_c = |t: usize| prefix[t].min(total - prefix[t]);

    let half_lo = total.div_ceil(2);
    let half_hi = total / 2;
    for p in 0..len {
        let w_e = prefix[p + 1] - prefix[p];
        let lo = half_lo as i128 - w_e as i128;
        let near = d_c(p) as i128;
        let far = d_c((p + 1) % len) as i128;
        if lo <= near && near <= half_hi as i128 && lo <= far && far <= half_hi as i128 {
            return p;
        }
    }
    panic!("no critical edge found; witness or implementation is broken");
}
