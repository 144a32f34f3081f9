use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("edge endpoint {0} out of range for {1} vertices")]
    EndpointOutOfRange(u32, u32),
    #[error("edge ({0}, {1}) has non-positive weight")]
    NonPositiveWeight(u32, u32),
    #[error("requested {requested} edges but a simple graph on {n} vertices has at most {max}")]
    TooManyEdges { requested: usize, n: u32, max: usize },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("cannot reach a connected graph: {0}")]
    InfeasibleConnectivity(String),
}

/// One stored edge. For undirected graphs the pair is kept as given but
/// `(u, v)` and `(v, u)` denote the same edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub w: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub to: u32,
    pub w: u64,
}

/// Largest and smallest edge weight, with the ratio kept exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    pub max_weight: u64,
    pub min_weight: u64,
}

impl WeightProfile {
    /// The weight ratio as an exact reduced fraction.
    pub fn ratio(&self) -> (u64, u64) {
        let g = gcd(self.max_weight, self.min_weight);
        (self.max_weight / g, self.min_weight / g)
    }

    /// Largest `t` with `2^t <= max/min`, computed without division.
    pub fn ratio_floor_log2(&self) -> u32 {
        let mut t = 0u32;
        while self
            .min_weight
            .checked_shl(t + 1)
            .map(|x| x <= self.max_weight)
            .unwrap_or(false)
        {
            t += 1;
        }
        t
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A simple weighted graph, immutable after construction.
///
/// Vertex ids are exactly `0..n`. Adjacency (out- and in-lists) is built
/// eagerly; for undirected graphs both lists coincide and contain each edge
/// in both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    directed: bool,
    gadget: bool,
    edges: Vec<Edge>,
    out: Vec<Vec<Arc>>,
    inc: Vec<Vec<Arc>>,
}

impl Graph {
    /// Validates and builds a graph with strictly positive weights.
    pub fn new(n: u32, directed: bool, edges: Vec<(u32, u32, u64)>) -> Result<Graph, GraphError> {
        Self::build(n, directed, edges, false)
    }

    /// Same as [`Graph::new`] but permits zero-weight edges; used by gadget
    /// constructions whose recovery offsets rely on exact zero hops.
    pub fn new_gadget(
        n: u32,
        directed: bool,
        edges: Vec<(u32, u32, u64)>,
    ) -> Result<Graph, GraphError> {
        Self::build(n, directed, edges, true)
    }

    fn build(
        n: u32,
        directed: bool,
        raw: Vec<(u32, u32, u64)>,
        gadget: bool,
    ) -> Result<Graph, GraphError> {
        let mut seen = std::collections::HashSet::with_capacity(raw.len());
        let mut edges = Vec::with_capacity(raw.len());
        for &(u, v, w) in &raw {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if w == 0 && !gadget {
                return Err(GraphError::NonPositiveWeight(u, v));
            }
            let key = if directed || u < v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edges.push(Edge { u, v, w });
        }

        let mut out = vec![Vec::new(); n as usize];
        let mut inc = vec![Vec::new(); n as usize];
        for e in &edges {
            out[e.u as usize].push(Arc { to: e.v, w: e.w });
            inc[e.v as usize].push(Arc { to: e.u, w: e.w });
            if !directed {
                out[e.v as usize].push(Arc { to: e.u, w: e.w });
                inc[e.u as usize].push(Arc { to: e.v, w: e.w });
            }
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_by_key(|a| (a.to, a.w));
        }

        Ok(Graph {
            n,
            directed,
            gadget,
            edges,
            out,
            inc,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_gadget(&self) -> bool {
        self.gadget
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Out-going arcs of `v` (for undirected graphs: all incident arcs).
    pub fn out_arcs(&self, v: u32) -> &[Arc] {
        &self.out[v as usize]
    }

    /// In-coming arcs of `v` (for undirected graphs: all incident arcs).
    pub fn in_arcs(&self, v: u32) -> &[Arc] {
        &self.inc[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.out[u as usize].iter().any(|a| a.to == v)
    }

    pub fn weight(&self, u: u32, v: u32) -> Option<u64> {
        self.out[u as usize].iter().find(|a| a.to == v).map(|a| a.w)
    }

    pub fn weight_profile(&self) -> Result<WeightProfile, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        let max_weight = self.edges.iter().map(|e| e.w).max().unwrap();
        let min_weight = self.edges.iter().map(|e| e.w).min().unwrap();
        Ok(WeightProfile {
            max_weight,
            min_weight,
        })
    }

    /// The graph with every directed edge reversed. Undirected graphs are
    /// returned unchanged.
    pub fn reversed(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let edges = self.edges.iter().map(|e| (e.v, e.u, e.w)).collect();
        Self::build(self.n, true, edges, self.gadget).expect("reversal preserves validity")
    }

    /// True if the underlying undirected graph is connected (weak
    /// connectivity for directed graphs). The empty graph on one vertex is
    /// connected.
    pub fn is_weakly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n as usize];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for a in self.out_arcs(v).iter().chain(self.in_arcs(v)) {
                if !seen[a.to as usize] {
                    seen[a.to as usize] = true;
                    count += 1;
                    stack.push(a.to);
                }
            }
        }
        count == self.n
    }

    /// Vertices reachable from `s` following edge directions.
    pub fn reachable_from(&self, s: u32) -> Vec<bool> {
        let mut seen = vec![false; self.n as usize];
        let mut stack = vec![s];
        seen[s as usize] = true;
        while let Some(v) = stack.pop() {
            for a in self.out_arcs(v) {
                if !seen[a.to as usize] {
                    seen[a.to as usize] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }

    pub fn max_simple_edges(n: u32, directed: bool) -> usize {
        let n = n as usize;
        if directed {
            n * (n - 1)
        } else {
            n * (n - 1) / 2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_builds() {
        let g = Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.out_arcs(0).len(), 2);
    }

    #[test]
    fn single_directed_edge() {
        let g = Graph::new(2, true, vec![(0, 1, 5)]).unwrap();
        assert_eq!(g.out_arcs(0).len(), 1);
        assert_eq!(g.out_arcs(1).len(), 0);
        assert_eq!(g.in_arcs(1).len(), 1);
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = Graph::new(3, false, vec![(0, 1, 1), (0, 1, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
        // Undirected: the reversed pair is the same edge.
        let err = Graph::new(3, false, vec![(0, 1, 1), (1, 0, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(1, 0));
        // Directed: opposite arcs coexist.
        assert!(Graph::new(3, true, vec![(0, 1, 1), (1, 0, 2)]).is_ok());
    }

    #[test]
    fn rejects_self_loop_and_bad_endpoint_and_zero_weight() {
        assert_eq!(
            Graph::new(3, false, vec![(1, 1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
        assert_eq!(
            Graph::new(3, false, vec![(0, 3, 1)]).unwrap_err(),
            GraphError::EndpointOutOfRange(3, 3)
        );
        assert_eq!(
            Graph::new(3, false, vec![(0, 1, 0)]).unwrap_err(),
            GraphError::NonPositiveWeight(0, 1)
        );
        assert!(Graph::new_gadget(3, true, vec![(0, 1, 0)]).is_ok());
    }

    #[test]
    fn weight_profile_examples() {
        let g = Graph::new(3, false, vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let p = g.weight_profile().unwrap();
        assert_eq!((p.max_weight, p.min_weight), (1, 1));
        assert_eq!(p.ratio(), (1, 1));

        let g = Graph::new(5, false, vec![(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 4, 4)]).unwrap();
        let p = g.weight_profile().unwrap();
        assert_eq!((p.max_weight, p.min_weight), (4, 1));
        assert_eq!(p.ratio(), (4, 1));

        let g = Graph::new(3, false, vec![(0, 1, 2), (1, 2, 8)]).unwrap();
        let p = g.weight_profile().unwrap();
        assert_eq!(p.ratio(), (4, 1));
        assert_eq!(p.ratio_floor_log2(), 2);

        let empty = Graph::new(2, false, vec![]).unwrap();
        assert_eq!(empty.weight_profile().unwrap_err(), GraphError::EmptyEdgeSet);
    }
}
