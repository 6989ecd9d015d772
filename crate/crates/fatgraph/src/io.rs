//! The JSON interchange format.
//!
//! A graph file is one object with two keys:
//!
//! ```json
//! {
//!   "edges": ["e1", "e2", "e3"],
//!   "vertices": [
//!     ["e1+", "e3+", "e2+"],
//!     ["e1-", "e2-", "e3-"]
//!   ]
//! }
//! ```
//!
//! Each vertex is its rotation: the outgoing darts in counterclockwise
//! order. Dart names are an edge name plus a final ASCII `+` or `-`, and
//! the two darts of an edge are paired implicitly.
//!
//! Serialization is canonical and bit-exact under round-trips: edges are
//! sorted, every cycle is rotated to start at its lexicographically
//! smallest dart name, vertices are sorted by that name, and the writer
//! always emits the same two-space-indented layout.

use serde::{Deserialize, Serialize};

use crate::error::IoError;
use crate::graph::FatGraph;

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    edges: Vec<String>,
    vertices: Vec<Vec<String>>,
}

/// Parses a graph from JSON text.
///
/// Shape problems (invalid JSON, missing signs, undeclared or unused
/// edges) surface as [`IoError::ParseError`]; a well-shaped document that
/// fails graph validation surfaces as [`IoError::ValidationError`].
pub fn graph_from_json(text: &str) -> Result<FatGraph, IoError> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| IoError::ParseError(e.to_string()))?;

    let mut declared = std::collections::BTreeSet::new();
    for edge in &doc.edges {
        if !declared.insert(edge.as_str()) {
            return Err(IoError::ParseError(format!(
                "edge `{edge}` is declared twice"
            )));
        }
    }
    let mut used = std::collections::BTreeSet::new();
    for cycle in &doc.vertices {
        for dart in cycle {
            let stem = dart
                .strip_suffix('+')
                .or_else(|| dart.strip_suffix('-'))
                .ok_or_else(|| {
                    IoError::ParseError(format!("dart `{dart}` does not end in `+` or `-`"))
                })?;
            if !declared.contains(stem) {
                return Err(IoError::ParseError(format!(
                    "dart `{dart}` uses undeclared edge `{stem}`"
                )));
            }
            used.insert(stem);
        }
    }
    if let Some(unused) = declared.iter().find(|e| !used.contains(*e)) {
        return Err(IoError::ParseError(format!(
            "edge `{unused}` is declared but has no darts"
        )));
    }

    Ok(FatGraph::from_plus_minus(&doc.vertices)?)
}

/// Splits a conforming dart name into its edge stem and sign.
fn split_dart(name: &str) -> Option<(&str, char)> {
    name.strip_suffix('+')
        .map(|stem| (stem, '+'))
        .or_else(|| name.strip_suffix('-').map(|stem| (stem, '-')))
}

fn canonical_doc(g: &FatGraph) -> Result<GraphDoc, IoError> {
    let mut edges = Vec::with_capacity(g.edge_count());
    for d in 0..g.dart_count() {
        let (stem, sign) = split_dart(g.name(d)).ok_or_else(|| {
            IoError::Unrepresentable(format!(
                "dart `{}` does not end in `+` or `-`",
                g.name(d)
            ))
        })?;
        let partner = g.name(g.sigma1(d));
        let expected = format!("{stem}{}", if sign == '+' { '-' } else { '+' });
        if partner != expected {
            return Err(IoError::Unrepresentable(format!(
                "dart `{}` is paired with `{partner}`, expected `{expected}`",
                g.name(d)
            )));
        }
        if sign == '+' {
            edges.push(stem.to_string());
        }
    }
    edges.sort();

    let mut vertices: Vec<Vec<String>> = g
        .vertex_cycles()
        .iter()
        .map(|cycle| {
            let names: Vec<String> = cycle.iter().map(|&d| g.name(d).to_string()).collect();
            let min_at = names
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| a.cmp(b))
                .map(|(i, _)| i)
                .unwrap_or(0);
            let mut rotated = Vec::with_capacity(names.len());
            rotated.extend_from_slice(&names[min_at..]);
            rotated.extend_from_slice(&names[..min_at]);
            rotated
        })
        .collect();
    vertices.sort();
    Ok(GraphDoc { edges, vertices })
}

/// Serializes a graph as a canonical JSON value. Requires the `stem+` /
/// `stem-` naming convention; graphs built with an ad-hoc pairing fail
/// with [`IoError::Unrepresentable`].
pub fn graph_to_json_value(g: &FatGraph) -> Result<serde_json::Value, IoError> {
    Ok(serde_json::to_value(canonical_doc(g)?).expect("document serialization cannot fail"))
}

/// Serializes a graph as canonical JSON text (two-space indent, trailing
/// newline). Reading the output back and writing it again reproduces the
/// bytes exactly.
pub fn graph_to_json(g: &FatGraph) -> Result<String, IoError> {
    let mut text = serde_json::to_string_pretty(&canonical_doc(g)?)
        .expect("document serialization cannot fail");
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::BuildError;
    use crate::families::{gamma, theta};
    use crate::iso::are_isomorphic;

    #[test]
    fn writes_canonically() {
        let text = graph_to_json(&theta()).unwrap();
        assert_eq!(
            text,
            r#"{
  "edges": [
    "e1",
    "e2",
    "e3"
  ],
  "vertices": [
    [
      "e1+",
      "e3+",
      "e2+"
    ],
    [
      "e1-",
      "e2-",
      "e3-"
    ]
  ]
}
"#
        );
    }

    #[test]
    fn round_trip_is_bit_exact_and_isomorphic() {
        for g in [theta(), gamma()] {
            let text = graph_to_json(&g).unwrap();
            let back = graph_from_json(&text).unwrap();
            assert_eq!(graph_to_json(&back).unwrap(), text);
            assert!(are_isomorphic(&g, &back).unwrap());
            // Name-level structure survives: rotations agree dart by dart.
            for d in 0..g.dart_count() {
                let b = back.dart(g.name(d)).unwrap();
                assert_eq!(back.name(back.sigma0(b)), g.name(g.sigma0(d)));
                assert_eq!(back.name(back.sigma1(b)), g.name(g.sigma1(d)));
            }
        }
    }

    #[test]
    fn rotation_starts_are_normalized_on_write() {
        let a = graph_from_json(
            r#"{"edges":["e1","e2","e3"],"vertices":[["e3+","e2+","e1+"],["e1-","e2-","e3-"]]}"#,
        )
        .unwrap();
        let text = graph_to_json(&a).unwrap();
        assert!(text.contains("\"e1+\""));
        let reread = graph_from_json(&text).unwrap();
        assert_eq!(graph_to_json(&reread).unwrap(), text);
    }

    #[test]
    fn shape_errors_are_parse_errors() {
        assert!(matches!(
            graph_from_json("{"),
            Err(IoError::ParseError(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"edges":["e"],"vertices":[["e+","e"]]}"#),
            Err(IoError::ParseError(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"edges":["e","e"],"vertices":[["e+","e-"]]}"#),
            Err(IoError::ParseError(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"edges":["e"],"vertices":[["e+","e-","f+"]]}"#),
            Err(IoError::ParseError(_))
        ));
        assert!(matches!(
            graph_from_json(r#"{"edges":["e","f"],"vertices":[["e+","e-"]]}"#),
            Err(IoError::ParseError(_))
        ));
    }

    #[test]
    fn graph_errors_are_validation_errors() {
        let missing_partner = r#"{"edges":["e","f"],"vertices":[["e+","e-","f+"]]}"#;
        assert!(matches!(
            graph_from_json(missing_partner),
            Err(IoError::ValidationError(BuildError::UnpairedDart(d))) if d == "f+"
        ));
        let duplicate = r#"{"edges":["e"],"vertices":[["e+","e-","e+"]]}"#;
        assert!(matches!(
            graph_from_json(duplicate),
            Err(IoError::ValidationError(BuildError::DuplicateDart(_)))
        ));
        let empty = r#"{"edges":[],"vertices":[]}"#;
        assert!(matches!(
            graph_from_json(empty),
            Err(IoError::ValidationError(BuildError::EmptyGraph))
        ));
    }

    #[test]
    fn ad_hoc_names_are_unrepresentable() {
        let g = FatGraph::build(
            &[vec!["a".into(), "b".into()]],
            &[("a".into(), "b".into())],
        )
        .unwrap();
        assert!(matches!(
            graph_to_json(&g),
            Err(IoError::Unrepresentable(_))
        ));
    }
}
