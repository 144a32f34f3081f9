//! Hardness constructions that are themselves algorithms: deciding size-k
//! domination through diameter probes on subset gadgets, and the ordering
//! of two-parameter time bounds on sparse graphs.

mod bounds;
mod kds;

pub use bounds::{compare_bounds, is_sub_mn, BoundComparison, Rational, TimeBound};
pub use kds::{
    build_kds_diameter_even, build_kds_diameter_odd, k_dominating_via_diameter, HardnessError,
};
