//! JSON documents for diagrams and DOT export.
//!
//! Documents are parsed strictly: the version is mandatory and unknown fields
//! are rejected. Serialization is deterministic, vertices in index order and
//! edges sorted by `(tail, head)` index.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, VertexNames, Violation};
use crate::error::IoError;

pub const FORMAT_VERSION: u32 = 1;

/// Weight drawn as two parallel arrows.
pub const DOUBLE_WEIGHT: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub format_version: u32,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub tail: String,
    pub head: String,
    /// Kept signed so that a zero or negative weight is reported as a
    /// validation error rather than a syntax error.
    pub weight: i64,
    /// Display hint only: the edge is drawn as a double arrow.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub double: bool,
}

/// A violation with vertex indices replaced by document ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationEntry {
    pub kind: &'static str,
    pub message: String,
    pub vertices: Vec<String>,
}

impl ViolationEntry {
    pub fn new(v: &Violation, ids: &[String]) -> Self {
        let id = |i: usize| ids.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
        let (kind, vertices): (_, Vec<usize>) = match v {
            Violation::VertexOutOfRange { tail, head } => ("vertex_out_of_range", vec![*tail, *head]),
            Violation::SelfLoop { vertex } => ("self_loop", vec![*vertex]),
            Violation::NonPositiveWeight { tail, head, .. } => ("non_positive_weight", vec![*tail, *head]),
            Violation::DuplicateEdge { u, v } => ("duplicate_edge", vec![*u, *v]),
            Violation::CycleNotSquare { cycle, .. } => ("cycle_not_square", cycle.clone()),
        };
        let vertices: Vec<String> = vertices.into_iter().map(id).collect();
        let message = match v {
            Violation::CycleNotSquare { product, .. } => {
                format!(
                    "cycle product not a perfect square: {product} along {}",
                    vertices.join(" - ")
                )
            }
            Violation::NonPositiveWeight { weight, .. } => {
                format!(
                    "non-positive weight {weight} on edge {} -> {}",
                    vertices[0], vertices[1]
                )
            }
            other => other.to_string(),
        };
        ViolationEntry {
            kind,
            message,
            vertices,
        }
    }
}

impl DiagramDocument {
    pub fn from_diagram(d: &Diagram) -> Self {
        let vertices = d
            .vertices()
            .map(|v| VertexEntry {
                id: d.vertex_id(v),
                label: d.names().and_then(|n| n.labels[v].clone()),
            })
            .collect();
        let mut edges: Vec<_> = d.edges().collect();
        edges.sort_by_key(|e| (e.tail, e.head));
        let edges = edges
            .into_iter()
            .map(|e| EdgeEntry {
                tail: d.vertex_id(e.tail),
                head: d.vertex_id(e.head),
                weight: e.weight as i64,
                double: e.weight == DOUBLE_WEIGHT,
            })
            .collect();
        DiagramDocument {
            format_version: FORMAT_VERSION,
            vertices,
            edges,
        }
    }

    /// Checks ids and references, then the diagram invariants.
    pub fn to_diagram(&self) -> Result<Diagram, IoError> {
        if self.format_version != FORMAT_VERSION {
            return Err(IoError::Field {
                field: "format_version".into(),
                message: format!("unsupported version {}, expected {FORMAT_VERSION}", self.format_version),
            });
        }
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(IoError::Field {
                    field: format!("vertices[{i}].id"),
                    message: format!("duplicate vertex id `{}`", v.id),
                });
            }
        }
        let mut triples = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let lookup = |name: &str, id: &str| {
                index.get(id).copied().ok_or_else(|| IoError::Field {
                    field: format!("edges[{i}].{name}"),
                    message: format!("unknown vertex id `{id}`"),
                })
            };
            let (t, h) = (lookup("tail", &e.tail)?, lookup("head", &e.head)?);
            if e.double && e.weight != DOUBLE_WEIGHT as i64 {
                return Err(IoError::Field {
                    field: format!("edges[{i}].double"),
                    message: format!("only weight {DOUBLE_WEIGHT} edges are drawn double"),
                });
            }
            triples.push((t, h, e.weight));
        }
        let names = VertexNames {
            ids: self.vertices.iter().map(|v| v.id.clone()).collect(),
            labels: self.vertices.iter().map(|v| v.label.clone()).collect(),
        };
        let d = Diagram::try_from_edges(self.vertices.len(), triples).map_err(IoError::Validation)?;
        Ok(d.with_names(names))
    }

    /// Ids in vertex order, for reporting violations.
    pub fn ids(&self) -> Vec<String> {
        self.vertices.iter().map(|v| v.id.clone()).collect()
    }
}

/// Parses a document without checking the diagram invariants.
pub fn parse_document(bytes: &[u8]) -> Result<DiagramDocument, IoError> {
    serde_json::from_slice(bytes).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse(bytes: &[u8]) -> Result<Diagram, IoError> {
    parse_document(bytes)?.to_diagram()
}

/// Pretty JSON with a trailing newline. Equal diagrams give equal bytes.
pub fn serialize(d: &Diagram) -> String {
    let mut s = serde_json::to_string_pretty(&DiagramDocument::from_diagram(d)).expect("documents always serialize");
    s.push('\n');
    s
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz source. Weights above one label their edge; weight-4 edges are
/// drawn as two parallel arrows.
pub fn to_dot(d: &Diagram) -> String {
    let mut out = String::from("digraph diagram {\n");
    for v in d.vertices() {
        let id = d.vertex_id(v);
        match d.names().and_then(|n| n.labels[v].as_deref()) {
            Some(label) => writeln!(out, "  {} [label={}];", dot_quote(&id), dot_quote(label)),
            None => writeln!(out, "  {};", dot_quote(&id)),
        }
        .expect("writing to a string");
    }
    let mut edges: Vec<_> = d.edges().collect();
    edges.sort_by_key(|e| (e.tail, e.head));
    for e in edges {
        let mut attrs = Vec::new();
        if e.weight > 1 {
            attrs.push(format!("label=\"{}\"", e.weight));
        }
        if e.weight == DOUBLE_WEIGHT {
            attrs.push("color=\"black:black\"".into());
        }
        let attrs = if attrs.is_empty() {
            String::new()
        } else {
            format!(" [{}]", attrs.join(", "))
        };
        writeln!(
            out,
            "  {} -> {}{attrs};",
            dot_quote(&d.vertex_id(e.tail)),
            dot_quote(&d.vertex_id(e.head))
        )
        .expect("writing to a string");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const B2: &str =
        r#"{"format_version":1,"vertices":[{"id":"0"},{"id":"1"}],"edges":[{"tail":"0","head":"1","weight":2}]}"#;

    #[test]
    fn b2_document() {
        let d = parse(B2.as_bytes()).unwrap();
        assert_eq!(d.vertex_count(), 2);
        assert!(d.has_arrow(0, 1));
        assert_eq!(d.weight(0, 1), 2);
    }

    #[test]
    fn version_is_mandatory() {
        let doc = r#"{"vertices":[{"id":"0"}],"edges":[]}"#;
        assert!(matches!(parse(doc.as_bytes()), Err(IoError::Parse { .. })));
        let doc = r#"{"format_version":2,"vertices":[{"id":"0"}],"edges":[]}"#;
        assert!(matches!(parse(doc.as_bytes()), Err(IoError::Field { .. })));
    }

    #[test]
    fn unknown_fields_rejected() {
        let doc = r#"{"format_version":1,"vertices":[{"id":"0","colour":"red"}],"edges":[]}"#;
        assert!(matches!(parse(doc.as_bytes()), Err(IoError::Parse { .. })));
    }

    #[test]
    fn syntax_error_position() {
        let doc = "{\n  \"format_version\": 1,\n  \"vertices\": [}\n";
        match parse(doc.as_bytes()) {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn double_hint_must_match_weight() {
        let doc = r#"{"format_version":1,"vertices":[{"id":"a"},{"id":"b"}],"edges":[{"tail":"a","head":"b","weight":2,"double":true}]}"#;
        assert!(matches!(parse(doc.as_bytes()), Err(IoError::Field { .. })));
    }

    #[test]
    fn dot_marks_weights() {
        let d = Diagram::from_edges(3, [(0, 1, 1), (1, 2, 4)]);
        let dot = to_dot(&d);
        assert!(dot.contains("\"0\" -> \"1\";"));
        assert!(dot.contains("\"1\" -> \"2\" [label=\"4\", color=\"black:black\"];"));
    }
}
