//! Family membership tests and the classifier built on them.

mod comma;
mod host_families;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::{Diagram, UnderlyingGraph};
use crate::family::{DCore, FamilyId, MutationType, TypeKind};
use crate::hosts::Role;

pub use comma::{comma_witnesses, d_constituent_cores, primed, swap_primes, CommaWitness, SideOption};
pub use host_families::{host_embeddings, host_with_embeddings};

/// Shortest path between the x-vertices of the two constituents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Width {
    pub value: usize,
    pub path: Vec<usize>,
}

/// Glue vertex and the two vertex sets it joins (both contain the glue vertex).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Split {
    pub glue: usize,
    pub sides: [Vec<usize>; 2],
    pub constituents: [FamilyId; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMatch {
    pub family: FamilyId,
    pub params: Vec<u32>,
    /// Host labels of every diagram vertex. Vertices of the second constituent
    /// of a glued family carry primed labels.
    pub roles: Vec<Vec<Role>>,
    /// Host vertex of every diagram vertex, for host families.
    pub embedding: Option<Vec<usize>>,
    pub width: Option<Width>,
    pub split: Option<Split>,
}

impl FamilyMatch {
    /// Diagram vertex carrying `role`, if any.
    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|r| r.contains(&role))
    }

    pub fn has_role(&self, v: usize, role: Role) -> bool {
        self.roles[v].contains(&role)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub mutation_type: MutationType,
    #[serde(rename = "match")]
    pub family_match: Option<FamilyMatch>,
}

/// Per-diagram data shared by all recognizers.
pub(crate) struct Ctx<'a> {
    pub d: &'a Diagram,
    pub g: UnderlyingGraph,
    pub cycles: Vec<Vec<usize>>,
    pub oriented: bool,
    pub lengths: BTreeSet<u32>,
}

impl<'a> Ctx<'a> {
    pub fn new(d: &'a Diagram) -> Self {
        let cycles = d.chordless_cycles();
        let oriented = cycles.iter().all(|c| d.is_oriented_cycle(c));
        let lengths = cycles.iter().map(|c| c.len() as u32).collect();
        Ctx {
            d,
            g: d.underlying(),
            cycles,
            oriented,
            lengths,
        }
    }
}

/// Smallest diagram that counts as a member of a family of this type.
pub(crate) fn min_vertices(kind: TypeKind) -> usize {
    kind.vertices_for(kind.min_rank())
}

/// Host families that could possibly match, in classification order.
fn host_candidates(ctx: &Ctx) -> Vec<FamilyId> {
    use FamilyId::*;
    let n = ctx.d.vertex_count();
    let lens: Vec<u32> = ctx.lengths.iter().copied().collect();
    let mut out = vec![A, B];
    if n >= 4 {
        out.extend(lens.iter().map(|&l| D(DCore::Cycle(l))));
        out.extend([D(DCore::Square), D(DCore::BoxSlash), D(DCore::Bot)]);
    }
    out.extend([BSquareWedgeB, BSlashWedgeB, BSlashWedgeSquare]);
    for &l in &lens {
        out.push(BCycleWedgeB(l));
        out.push(BCycleWedgeFlipB(l));
    }
    out.push(CWedge);
    let mut cores: Vec<DCore> = lens.iter().map(|&l| DCore::Cycle(l)).collect();
    cores.extend([DCore::Square, DCore::BoxSlash, DCore::Bot]);
    for (i, &p) in cores.iter().enumerate() {
        for &q in &cores[i..] {
            out.push(FamilyId::d_vee(p, q));
        }
    }
    for &l in &lens {
        out.extend([DCycleWedgeSquare(l), DCycleWedgeSlash(l), DCycleWedgeFlipSlash(l)]);
    }
    out.extend([DSquareWedgeSquare, DSlashWedgeSlash, DBoxTimes]);
    out
}

/// Membership test for a single family.
pub fn recognize(d: &Diagram, family: FamilyId) -> Option<FamilyMatch> {
    if d.vertex_count() == 0 || !d.is_connected() {
        return None;
    }
    let ctx = Ctx::new(d);
    if family.is_comma() {
        comma::comma_matches(&ctx, Some(family)).into_iter().next()
    } else {
        host_families::recognize_host(&ctx, family)
    }
}

/// Every family the diagram belongs to, one match per family.
pub fn all_matches(d: &Diagram) -> Vec<FamilyMatch> {
    if d.vertex_count() == 0 || !d.is_connected() {
        return Vec::new();
    }
    let ctx = Ctx::new(d);
    let mut out: Vec<FamilyMatch> = host_candidates(&ctx)
        .into_iter()
        .filter_map(|f| host_families::recognize_host(&ctx, f))
        .collect();
    out.extend(comma::comma_matches(&ctx, None));
    out
}

/// Mutation type of a connected diagram, from the first family that matches.
pub fn classify(d: &Diagram) -> Classification {
    let unknown = Classification {
        mutation_type: MutationType::Unknown,
        family_match: None,
    };
    if d.vertex_count() == 0 || !d.is_connected() {
        return unknown;
    }
    let ctx = Ctx::new(d);
    let found = host_candidates(&ctx)
        .into_iter()
        .find_map(|f| host_families::recognize_host(&ctx, f))
        .or_else(|| comma::comma_matches(&ctx, None).into_iter().next());
    match found {
        Some(m) => Classification {
            mutation_type: MutationType::new(m.family.kind(), family_rank(m.family.kind(), d)),
            family_match: Some(m),
        },
        None => unknown,
    }
}

fn family_rank(kind: TypeKind, d: &Diagram) -> usize {
    kind.rank_for(d.vertex_count())
}
