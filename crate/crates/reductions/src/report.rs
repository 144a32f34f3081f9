use std::time::{Duration, Instant};

use graph_core::Graph;
use serde::{Deserialize, Serialize};

/// Oracle-call and size accounting for one reduction run.
///
/// `within_budget` is recomputable from the other fields: it holds exactly
/// when the call count does not exceed `declared_max_calls` (if declared)
/// and every per-call size stays within `declared_size_bound` (if
/// declared). Times are recorded but never asserted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReductionReport {
    pub reduction: String,
    pub source_vertices: u32,
    pub source_edges: usize,
    pub oracle_calls: usize,
    /// (vertices, edges) of each reduced graph handed to the oracle.
    pub per_call_sizes: Vec<(u32, usize)>,
    pub declared_max_calls: Option<usize>,
    /// Upper bound on (vertices, edges) of every oracle call.
    pub declared_size_bound: Option<(u32, usize)>,
    pub within_budget: bool,
    #[serde(skip)]
    pub construction_time: Duration,
    #[serde(skip)]
    pub recovery_time: Duration,
}

impl ReductionReport {
    pub fn recompute_budget(&self) -> bool {
        let calls_ok = self
            .declared_max_calls
            .map_or(true, |max| self.oracle_calls <= max);
        let sizes_ok = self.declared_size_bound.map_or(true, |(nv, ne)| {
            self.per_call_sizes.iter().all(|&(v, e)| v <= nv && e <= ne)
        });
        calls_ok && sizes_ok
    }
}

/// Incremental report construction used inside the reductions.
pub(crate) struct ReportBuilder {
    reduction: &'static str,
    source_vertices: u32,
    source_edges: usize,
    per_call_sizes: Vec<(u32, usize)>,
    declared_max_calls: Option<usize>,
    declared_size_bound: Option<(u32, usize)>,
    started: Instant,
    construction_time: Duration,
}

impl ReportBuilder {
    pub fn new(reduction: &'static str, source: &Graph) -> Self {
        ReportBuilder {
            reduction,
            source_vertices: source.vertex_count(),
            source_edges: source.edge_count(),
            per_call_sizes: Vec::new(),
            declared_max_calls: None,
            declared_size_bound: None,
            started: Instant::now(),
            construction_time: Duration::ZERO,
        }
    }

    pub fn declare_calls(&mut self, max: usize) -> &mut Self {
        self.declared_max_calls = Some(max);
        self
    }

    pub fn declare_size(&mut self, vertices: u32, edges: usize) -> &mut Self {
        self.declared_size_bound = Some((vertices, edges));
        self
    }

    pub fn record_call(&mut self, reduced: &Graph) {
        self.per_call_sizes
            .push((reduced.vertex_count(), reduced.edge_count()));
    }

    /// Marks the end of construction; everything after is recovery.
    pub fn construction_done(&mut self) {
        self.construction_time = self.started.elapsed();
    }

    pub fn finish(self) -> ReductionReport {
        let total = self.started.elapsed();
        let mut report = ReductionReport {
            reduction: self.reduction.to_string(),
            source_vertices: self.source_vertices,
            source_edges: self.source_edges,
            oracle_calls: self.per_call_sizes.len(),
            per_call_sizes: self.per_call_sizes,
            declared_max_calls: self.declared_max_calls,
            declared_size_bound: self.declared_size_bound,
            within_budget: false,
            construction_time: self.construction_time,
            recovery_time: total.saturating_sub(self.construction_time),
        };
        report.within_budget = report.recompute_budget();
        report
    }
}
