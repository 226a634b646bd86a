use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{Diagram, Edge};

/// Diagram as it appears in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramSketch {
    pub vertices: usize,
    pub edges: Vec<Edge>,
}

impl From<&Diagram> for DiagramSketch {
    fn from(d: &Diagram) -> Self {
        DiagramSketch {
            vertices: d.vertex_count(),
            edges: d.edges().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub diagram: DiagramSketch,
    /// Mutated vertex, when the failure is about a single mutation.
    pub vertex: Option<usize>,
    pub expected: Vec<String>,
    pub observed: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub diagrams: usize,
    pub mutations: usize,
    /// Random diagrams tested on top of the enumerated ones.
    #[serde(skip_serializing_if = "is_zero")]
    pub samples: usize,
    pub failures: Vec<Failure>,
    /// How often each transition rule decided a mutation.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub rule_hits: BTreeMap<String, usize>,
    /// Members per family.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub census: BTreeMap<String, usize>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Adds the counts and failures of `other`, keeping this suite id.
    pub fn merge(&mut self, other: VerificationReport) {
        self.diagrams += other.diagrams;
        self.mutations += other.mutations;
        self.samples += other.samples;
        self.failures.extend(other.failures);
        for (k, v) in other.rule_hits {
            *self.rule_hits.entry(k).or_default() += v;
        }
        for (k, v) in other.census {
            *self.census.entry(k).or_default() += v;
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary; lists at most `max_failures` failures.
    pub fn to_text(&self, max_failures: usize) -> String {
        let mut s = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            s,
            "{status} {}: {} diagrams, {} mutations, {} samples, {} failures",
            self.suite,
            self.diagrams,
            self.mutations,
            self.samples,
            self.failures.len()
        );
        for f in self.failures.iter().take(max_failures) {
            let edges: Vec<String> = f
                .diagram
                .edges
                .iter()
                .map(|e| format!("{}-{}->{}", e.tail, e.weight, e.head))
                .collect();
            let at = f.vertex.map(|v| format!(" at {v}")).unwrap_or_default();
            let _ = writeln!(
                s,
                "  [{}]{at}: expected {{{}}}, observed {}; {}",
                edges.join(" "),
                f.expected.join(", "),
                f.observed,
                f.detail
            );
        }
        if self.failures.len() > max_failures {
            let _ = writeln!(s, "  ... {} more", self.failures.len() - max_failures);
        }
        s
    }
}
