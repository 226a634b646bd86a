//! JSON shapes shared by the command line and the service.

use std::collections::BTreeMap;

use mutclass_core::{classify, enumerate_class, Diagram, EnumError, Limits, MutationType};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifySummary {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: Option<usize>,
    pub family: Option<String>,
    pub params: Vec<u32>,
    pub width: Option<usize>,
}

impl ClassifySummary {
    pub fn of(d: &Diagram) -> Self {
        let c = classify(d);
        let kind = match c.mutation_type {
            MutationType::Known { kind, .. } => kind.to_string(),
            MutationType::Unknown => "Unknown".into(),
        };
        let m = c.family_match.as_ref();
        ClassifySummary {
            kind,
            rank: c.mutation_type.rank(),
            family: m.map(|m| m.family.to_string()),
            params: m.map(|m| m.params.clone()).unwrap_or_default(),
            width: m.and_then(|m| m.width.as_ref().map(|w| w.value)),
        }
    }

    pub fn is_known(&self) -> bool {
        self.rank.is_some()
    }

    pub fn to_text(&self) -> String {
        let Some(rank) = self.rank else {
            return "Unknown".into();
        };
        let mut s = format!(
            "{}({rank}), family {}",
            self.kind,
            self.family.as_deref().unwrap_or("?")
        );
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            s.push_str(&format!(", params {}", p.join(",")));
        }
        if let Some(w) = self.width {
            s.push_str(&format!(", width {w}"));
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitLimits {
    pub max_members: usize,
    #[serde(default = "default_steps")]
    pub max_steps: usize,
}

fn default_steps() -> usize {
    Limits::default().max_steps
}

impl Default for OrbitLimits {
    fn default() -> Self {
        OrbitLimits {
            max_members: 20_000,
            max_steps: default_steps(),
        }
    }
}

impl From<OrbitLimits> for Limits {
    fn from(l: OrbitLimits) -> Self {
        Limits {
            max_members: l.max_members,
            max_steps: l.max_steps,
        }
    }
}

/// Class size and members per family. Unclassified members are counted
/// under `"Unknown"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    pub exhausted: bool,
    pub census: BTreeMap<String, usize>,
}

impl OrbitSummary {
    pub fn of(d: &Diagram, limits: Limits) -> Result<Self, EnumError> {
        let class = enumerate_class(d, limits)?;
        let mut census = BTreeMap::new();
        for m in class.members.values() {
            let key = classify(m)
                .family_match
                .map_or_else(|| "Unknown".to_string(), |f| f.family.to_string());
            *census.entry(key).or_default() += 1;
        }
        Ok(OrbitSummary {
            size: class.len(),
            exhausted: class.exhausted,
            census,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} members{}\n",
            self.size,
            if self.exhausted {
                ", exhausted"
            } else {
                ", limit reached"
            }
        );
        for (f, c) in &self.census {
            s.push_str(&format!("  {c:6}  {f}\n"));
        }
        s
    }
}
