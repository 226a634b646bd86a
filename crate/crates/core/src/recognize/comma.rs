//! Families built by gluing two constituent diagrams at one vertex.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::Diagram;
use crate::embed::for_each_embedding;
use crate::family::{DCore, FamilyId};
use crate::hosts::{host, Role};

use super::{Ctx, FamilyMatch, Split, Width};

/// One way to read a vertex set as a constituent diagram (`B` or `D_core`)
/// with the glue vertex in an admissible position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideOption {
    pub family: FamilyId,
    pub vertices: Vec<usize>,
    /// Host labels, parallel to `vertices`.
    pub roles: Vec<Vec<Role>>,
    /// Membership in the constituent's core, parallel to `vertices`.
    pub core: Vec<bool>,
    pub glue_in_core: bool,
    /// Diagram vertices labelled x.
    pub xs: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommaWitness {
    pub family: FamilyId,
    pub glue: usize,
    /// For `BComma` the type D side comes first.
    pub sides: [SideOption; 2],
    pub width: usize,
    pub path: Vec<usize>,
}

impl CommaWitness {
    fn into_match(self, n: usize) -> FamilyMatch {
        let mut roles = vec![Vec::new(); n];
        for (k, side) in self.sides.iter().enumerate() {
            for (&v, rs) in side.vertices.iter().zip(&side.roles) {
                roles[v].extend(rs.iter().map(|&r| if k == 1 { primed(r) } else { r }));
            }
        }
        for r in &mut roles {
            r.sort_unstable();
            r.dedup();
        }
        FamilyMatch {
            family: self.family,
            params: self.family.params(),
            roles,
            embedding: None,
            width: Some(Width {
                value: self.width,
                path: self.path,
            }),
            split: Some(Split {
                glue: self.glue,
                sides: [self.sides[0].vertices.clone(), self.sides[1].vertices.clone()],
                constituents: [self.sides[0].family, self.sides[1].family],
            }),
        }
    }
}

/// Primed counterpart of an unprimed label; other labels are kept.
pub fn primed(r: Role) -> Role {
    match r {
        Role::X(i) => Role::XP(i),
        Role::A(i) => Role::AP(i),
        other => other,
    }
}

/// Swaps primed and unprimed labels.
pub fn swap_primes(r: Role) -> Role {
    match r {
        Role::X(i) => Role::XP(i),
        Role::A(i) => Role::AP(i),
        Role::XP(i) => Role::X(i),
        Role::AP(i) => Role::A(i),
        other => other,
    }
}

/// All gluing witnesses of a diagram, over every cut vertex and every split
/// of the remaining components into two sides.
pub fn comma_witnesses(d: &Diagram) -> Vec<CommaWitness> {
    if d.vertex_count() == 0 || !d.is_connected() || !d.is_cyclically_oriented() {
        return Vec::new();
    }
    witnesses(d)
}

/// Minimal-width witness of each glued family, optionally restricted to one.
pub(crate) fn comma_matches(ctx: &Ctx, only: Option<FamilyId>) -> Vec<FamilyMatch> {
    if !ctx.oriented {
        return Vec::new();
    }
    let mut best: Vec<CommaWitness> = Vec::new();
    for w in witnesses(ctx.d) {
        if only.is_some_and(|f| f != w.family) || ctx.d.vertex_count() < super::min_vertices(w.family.kind()) {
            continue;
        }
        match best.iter_mut().find(|b| b.family == w.family) {
            Some(b) if (w.width, &w.path) < (b.width, &b.path) => *b = w,
            Some(_) => {}
            None => best.push(w),
        }
    }
    best.sort_by_key(|w| w.family);
    best.into_iter().map(|w| w.into_match(ctx.d.vertex_count())).collect()
}

fn witnesses(d: &Diagram) -> Vec<CommaWitness> {
    let n = d.vertex_count();
    let mut out = Vec::new();
    for z in 0..n {
        let comps = d.components_without(&[z]);
        if comps.len() < 2 || comps.len() > 16 {
            continue;
        }
        let c = comps.len();
        for mask in 1u32..(1 << c) - 1 {
            if mask & 1 == 0 {
                continue;
            }
            let mut s = [vec![z], vec![z]];
            for (i, comp) in comps.iter().enumerate() {
                s[(mask >> i & 1 == 0) as usize].extend(comp);
            }
            for v in &mut s {
                v.sort_unstable();
            }
            let opts = [side_options(d, &s[0], z), side_options(d, &s[1], z)];
            combine(d, z, &opts, &mut out);
        }
    }
    out
}

fn combine(d: &Diagram, z: usize, opts: &[Vec<SideOption>; 2], out: &mut Vec<CommaWitness>) {
    let is_b = |o: &SideOption| o.family == FamilyId::B;
    for o1 in &opts[0] {
        for o2 in &opts[1] {
            let (family, first_is_d, slack) = match (is_b(o1), is_b(o2)) {
                (true, true) => (FamilyId::CComma, true, 2),
                (false, true) => (FamilyId::BComma(core_of(o1)), true, 1),
                (true, false) => (FamilyId::BComma(core_of(o2)), false, 1),
                (false, false) => {
                    if o1.glue_in_core && o2.glue_in_core {
                        continue;
                    }
                    let (p, q) = (core_of(o1), core_of(o2));
                    let slack = if p.is_cycle() && q.is_cycle() { 0 } else { 1 };
                    (FamilyId::d_comma(p, q), true, slack)
                }
            };
            let Some(path) = d.shortest_path(&o1.xs, &o2.xs) else {
                continue;
            };
            let Some(width) = (path.len() - 1).checked_sub(slack) else {
                continue;
            };
            let sides = if first_is_d {
                [o1.clone(), o2.clone()]
            } else {
                [o2.clone(), o1.clone()]
            };
            let path = if first_is_d {
                path
            } else {
                path.into_iter().rev().collect()
            };
            out.push(CommaWitness {
                family,
                glue: z,
                sides,
                width,
                path,
            });
        }
    }
}

fn core_of(o: &SideOption) -> DCore {
    match o.family {
        FamilyId::D(c) => c,
        _ => unreachable!("type D side"),
    }
}

/// Cores `c` for which `d` is a `D_c` diagram in the sense used for glued
/// constituents (no lower bound on the size of cycle families).
pub fn d_constituent_cores(d: &Diagram) -> Vec<DCore> {
    if d.vertex_count() == 0 || !d.is_connected() || !d.is_simply_laced() {
        return Vec::new();
    }
    let ctx = Ctx::new(d);
    if !ctx.oriented {
        return Vec::new();
    }
    let mut cores: Vec<DCore> = ctx.lengths.iter().map(|&l| DCore::Cycle(l)).collect();
    cores.extend([DCore::Square, DCore::BoxSlash, DCore::Bot]);
    let len = d.vertex_count();
    cores
        .into_iter()
        .filter(|&c| {
            let Ok(h) = host(FamilyId::D(c), len.saturating_sub(2)) else {
                return false;
            };
            h.core().len() <= len && for_each_embedding(&ctx.g, &h, |_| true)
        })
        .collect()
}

/// Readings of `vertices` (which contain `z`) as a B or D constituent glued at `z`.
fn side_options(d: &Diagram, vertices: &[usize], z: usize) -> Vec<SideOption> {
    let sub = d.induced(vertices);
    let ctx = Ctx::new(&sub);
    if !ctx.oriented {
        return Vec::new();
    }
    let len = vertices.len();
    let zl = vertices.iter().position(|&v| v == z).expect("glue vertex in side");
    // A non-core glue vertex must end a single edge or sit in a single triangle.
    let nz: Vec<usize> = sub.neighbors(zl).collect();
    let one_block = nz.len() == 1 || (nz.len() == 2 && sub.adjacent(nz[0], nz[1]));
    let mut out: Vec<SideOption> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut families = Vec::new();
    if one_block {
        families.push(FamilyId::B);
    }
    if sub.is_simply_laced() {
        families.extend(ctx.lengths.iter().map(|&l| FamilyId::D(DCore::Cycle(l))));
        families.extend([DCore::Square, DCore::BoxSlash, DCore::Bot].map(FamilyId::D));
    }
    for family in families {
        let depth = if family == FamilyId::B {
            len
        } else {
            len.saturating_sub(2)
        };
        let Ok(h) = host(family, depth) else { continue };
        if h.core().len() > len {
            continue;
        }
        for_each_embedding(&ctx.g, &h, |emb| {
            let hz = emb[zl];
            let (in_core, xs) = if family == FamilyId::B {
                let x = h.vertex(Role::X(0)).expect("B host has x");
                if hz == x {
                    return false;
                }
                let xl = emb.iter().position(|&v| v == x).expect("core covered");
                (true, vec![vertices[xl]])
            } else {
                if h.roles(hz).iter().any(|r| matches!(r, Role::A(_))) {
                    return false;
                }
                let in_core = h.is_core(hz);
                if in_core && !sub.neighbors(zl).all(|u| h.is_core(emb[u])) {
                    return false;
                }
                if !in_core && !one_block {
                    return false;
                }
                let xs = (0..len)
                    .filter(|&v| h.roles(emb[v]).iter().any(|r| matches!(r, Role::X(_))))
                    .map(|v| vertices[v])
                    .collect::<Vec<_>>();
                (in_core, xs)
            };
            if seen.insert((family, in_core, xs.clone())) {
                out.push(SideOption {
                    family,
                    vertices: vertices.to_vec(),
                    roles: emb.iter().map(|&v| h.roles(v).to_vec()).collect(),
                    core: emb.iter().map(|&v| h.is_core(v)).collect(),
                    glue_in_core: in_core,
                    xs,
                });
            }
            false
        });
    }
    out
}
