use std::fmt::Write as _;

use super::{ConceptGraph, GraphKind};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Deterministic Graphviz source. Lattices are drawn with the root on the
/// bottom rank.
pub fn export_dot(graph: &ConceptGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&graph.name())).unwrap();
    match graph.kind {
        GraphKind::Transitive => {
            out.push_str("  rankdir=LR;\n  node [shape=box];\n");
        }
        GraphKind::Lattice => {
            out.push_str("  rankdir=TB;\n  node [shape=ellipse];\n");
        }
    }
    for node in &graph.nodes {
        writeln!(out, "  {};", quote(&node.label)).unwrap();
    }
    for edge in &graph.edges {
        writeln!(out, "  {} -> {};", quote(&edge.source), quote(&edge.target)).unwrap();
    }
    if let Some(root) = &graph.root {
        writeln!(out, "  {{ rank=sink; {}; }}", quote(root)).unwrap();
    }
    out.push_str("}\n");
    out
}
