use std::collections::BTreeMap;
use std::fmt::Write;

use crate::Graph;

/// Graphviz export. When a role map is supplied, vertices are labelled with
/// their gadget roles.
pub fn export_dot(g: &Graph, roles: Option<&BTreeMap<String, u32>>) -> String {
    let mut by_vertex: BTreeMap<u32, &str> = BTreeMap::new();
    if let Some(roles) = roles {
        for (name, &v) in roles {
            by_vertex.insert(v, name);
        }
    }

    let (kind, arrow) = if g.is_directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = String::new();
    writeln!(out, "{kind} g {{").unwrap();
    for v in 0..g.vertex_count() {
        match by_vertex.get(&v) {
            Some(role) => writeln!(out, "  {v} [label=\"{v}: {role}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for e in g.edges() {
        writeln!(out, "  {} {arrow} {} [label=\"{}\"];", e.u, e.v, e.w).unwrap();
    }
    out.push_str("}\n");
    out
}
