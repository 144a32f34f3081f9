use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{GadgetGraph, Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed graph JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid graph field {field}: {source}")]
    Invalid {
        field: &'static str,
        source: GraphError,
    },
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: u32,
    directed: bool,
    edges: Vec<(u32, u32, i64)>,
    #[serde(default)]
    meta: BTreeMap<String, serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
struct GadgetDoc {
    #[serde(flatten)]
    graph: GraphDoc,
    roles: BTreeMap<String, u32>,
    recovery: BTreeMap<String, u64>,
}

fn to_doc(g: &Graph) -> GraphDoc {
    let mut edges: Vec<(u32, u32, i64)> = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.w as i64))
        .collect();
    edges.sort_unstable();
    let mut meta = BTreeMap::new();
    if g.is_gadget() {
        meta.insert("gadget".to_string(), serde_json::Value::Bool(true));
    }
    GraphDoc {
        n: g.vertex_count(),
        directed: g.is_directed(),
        edges,
        meta,
    }
}

fn from_doc(doc: GraphDoc) -> Result<Graph, ParseError> {
    let gadget = doc
        .meta
        .get("gadget")
        .and_then(|v| v.as_bool())
        .unwrap_or(false);
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (u, v, w) in doc.edges {
        if w < 0 {
            return Err(ParseError::Invalid {
                field: "edges",
                source: GraphError::NonPositiveWeight(u, v),
            });
        }
        edges.push((u, v, w as u64));
    }
    let build = if gadget {
        Graph::new_gadget(doc.n, doc.directed, edges)
    } else {
        Graph::new(doc.n, doc.directed, edges)
    };
    build.map_err(|source| ParseError::Invalid {
        field: "edges",
        source,
    })
}

fn json_err(e: serde_json::Error) -> ParseError {
    ParseError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Canonical JSON text: fixed key order, edges sorted lexicographically.
pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&to_doc(g)).expect("graph serialization cannot fail")
}

pub fn graph_from_json(text: &str) -> Result<Graph, ParseError> {
    from_doc(serde_json::from_str(text).map_err(json_err)?)
}

/// Gadget files carry the graph plus `roles` and `recovery` objects so that
/// third-party solvers can be plugged in.
pub fn gadget_to_json(g: &GadgetGraph) -> String {
    let doc = GadgetDoc {
        graph: to_doc(&g.graph),
        roles: g.roles.clone(),
        recovery: g.recovery.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("gadget serialization cannot fail")
}

pub fn gadget_from_json(text: &str) -> Result<GadgetGraph, ParseError> {
    let doc: GadgetDoc = serde_json::from_str(text).map_err(json_err)?;
    Ok(GadgetGraph {
        graph: from_doc(doc.graph)?,
        roles: doc.roles,
        recovery: doc.recovery,
    })
}
