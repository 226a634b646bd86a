//! Breadth-first enumeration of mutation classes up to isomorphism.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_diagram, canonical_key, CanonicalKey};
use crate::diagram::Diagram;
use crate::error::EnumError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_members: usize,
    pub max_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_members: 1_000_000,
            max_steps: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub frontier_sizes: Vec<usize>,
    pub mutations: usize,
}

/// Mutation class of a seed, one canonical representative per isomorphism type.
#[derive(Debug, Clone)]
pub struct ClassSet {
    pub members: BTreeMap<CanonicalKey, Diagram>,
    pub seed: Diagram,
    pub exhausted: bool,
    pub stats: EnumStats,
}

impl ClassSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.members.contains_key(key)
    }
}

pub fn enumerate_class(seed: &Diagram, limits: Limits) -> Result<ClassSet, EnumError> {
    enumerate_class_with(seed, limits, None)
}

/// Like [`enumerate_class`], optionally running frontier expansion on a pool
/// of the given size. The result never depends on the worker count.
pub fn enumerate_class_with(seed: &Diagram, limits: Limits, workers: Option<usize>) -> Result<ClassSet, EnumError> {
    if !seed.is_valid() || !seed.is_connected() {
        return Err(EnumError::InvalidSeed);
    }
    match workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .expect("thread pool");
            pool.install(|| bfs(seed, limits))
        }
        None => bfs(seed, limits),
    }
}

fn bfs(seed: &Diagram, limits: Limits) -> Result<ClassSet, EnumError> {
    let (key, rep) = canonical_diagram(seed)?;
    let mut members = BTreeMap::new();
    members.insert(key.clone(), rep);
    let mut frontier = vec![key];
    let mut stats = EnumStats::default();
    let mut exhausted = true;
    while !frontier.is_empty() {
        stats.frontier_sizes.push(frontier.len());
        let n = members[&frontier[0]].vertex_count();
        if stats.mutations + frontier.len() * n > limits.max_steps {
            exhausted = false;
            break;
        }
        let expanded: Vec<Vec<(CanonicalKey, Diagram)>> = frontier
            .par_iter()
            .map(|k| {
                let d = &members[k];
                (0..d.vertex_count())
                    .map(|v| -> Result<_, EnumError> {
                        let m = d.mutate(v)?;
                        Ok(canonical_diagram(&m)?)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<_, _>>()?;
        stats.mutations += frontier.len() * n;
        let mut next = BTreeMap::new();
        for (k, d) in expanded.into_iter().flatten() {
            if !members.contains_key(&k) {
                next.entry(k).or_insert(d);
            }
        }
        if members.len() + next.len() > limits.max_members {
            let room = limits.max_members.saturating_sub(members.len());
            members.extend(next.into_iter().take(room));
            exhausted = false;
            break;
        }
        frontier = next.keys().cloned().collect();
        members.extend(next);
    }
    Ok(ClassSet {
        members,
        seed: seed.clone(),
        exhausted,
        stats,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

pub fn are_mutation_equivalent(d1: &Diagram, d2: &Diagram, limits: Limits) -> Result<Equivalence, EnumError> {
    if d1.vertex_count() != d2.vertex_count() {
        return Ok(Equivalence::NotEquivalent);
    }
    let target = canonical_key(d2)?;
    let class = enumerate_class(d1, limits)?;
    Ok(if class.contains(&target) {
        Equivalence::Equivalent
    } else if class.exhausted {
        Equivalence::NotEquivalent
    } else {
        Equivalence::Inconclusive
    })
}
