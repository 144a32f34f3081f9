//! Undirected reductions: the bit-sampled two-copy family, minimum weight
//! cycle and all-nodes-shortest-cycles via APSP, and k shortest simple
//! cycles via k shortest simple paths.

mod bit_sampling;
mod ksisc;

pub use bit_sampling::{
    ansc_via_apsp_unweighted, bucket_count, build_bit_sampled, critical_edge_position,
    mwc_via_apsp, mwc_via_apsp_faulty_bucket, mwc_via_apsp_with_candidates, weight_bucket,
    BitSampledGraph, CycleCandidate,
};
pub use ksisc::{build_split_neighborhood, k_sisc_via_k_sisp};
