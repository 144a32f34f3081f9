use graph_core::GraphError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("parameter {name} = {value} outside {low}..={high}")]
    ParamOutOfRange {
        name: &'static str,
        value: u64,
        low: u64,
        high: u64,
    },
    #[error("reduction requires an undirected input graph")]
    NotUndirected,
    #[error("reduction requires a directed input graph")]
    NotDirected,
    #[error("reduction requires unit edge weights, found {0}")]
    NonUnitWeight(u64),
    #[error("target {t} unreachable from source {s}")]
    NoPath { s: u32, t: u32 },
    #[error("source and target coincide")]
    TrivialPath,
    #[error("probe weight {probe} outside 0..={max}")]
    ProbeOutOfRange { probe: u64, max: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
