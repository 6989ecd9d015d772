//! Graphviz export.
//!
//! Vertices become nodes, edges become undirected DOT edges whose
//! `taillabel`/`headlabel` carry the dart's position in its vertex
//! rotation (0-based, counterclockwise), so the fat structure is readable
//! off the drawing. Each edge is painted with the colors of the one or two
//! boundary walks its darts lie on.

use crate::boundary::boundary_walks;
use crate::graph::FatGraph;

const PALETTE: [&str; 12] = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666",
    "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6",
];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the graph as DOT text.
pub fn export_dot(g: &FatGraph) -> String {
    let walks = boundary_walks(g);
    let mut walk_of = vec![0usize; g.dart_count()];
    for (i, walk) in walks.iter().enumerate() {
        for &d in walk.darts() {
            walk_of[d] = i;
        }
    }
    let color = |d: usize| PALETTE[walk_of[d] % PALETTE.len()];

    // Position of each dart inside its stored rotation.
    let mut slot = vec![0usize; g.dart_count()];
    for cycle in g.vertex_cycles() {
        for (i, &d) in cycle.iter().enumerate() {
            slot[d] = i;
        }
    }

    let mut out = String::new();
    out.push_str("graph fatgraph {\n");
    out.push_str("  node [shape=circle fontsize=10];\n");
    out.push_str("  edge [fontsize=9 labelfontsize=8];\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("  v{v} [label=\"v{v}\"];\n"));
    }
    for a in 0..g.dart_count() {
        let b = g.sigma1(a);
        if b < a {
            continue;
        }
        let name_a = g.name(a);
        let label = match name_a.strip_suffix('+') {
            Some(stem) if g.name(b) == format!("{stem}-") => stem.to_string(),
            _ => format!("{name_a}~{}", g.name(b)),
        };
        out.push_str(&format!(
            "  v{} -- v{} [label=\"{}\" taillabel=\"{}\" headlabel=\"{}\" color=\"{}:{}\"];\n",
            g.vertex_of(a),
            g.vertex_of(b),
            escape(&label),
            slot[a],
            slot[b],
            color(a),
            color(b),
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::theta;

    #[test]
    fn theta_dot_has_two_nodes_and_three_edges() {
        let dot = export_dot(&theta());
        assert_eq!(dot.matches("label=\"v").count(), 2);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("taillabel"));
        assert!(dot.starts_with("graph fatgraph {"));
        assert!(dot.ends_with("}\n"));
    }
}
