use std::collections::BTreeSet;

use crate::embed::for_each_embedding;
use crate::family::{DCore, FamilyId};
use crate::hosts::{host, HostGraph, Role};

use super::{Ctx, FamilyMatch};

/// Families whose members need not be cyclically oriented everywhere.
fn has_orientation_exceptions(f: FamilyId) -> bool {
    use FamilyId::*;
    matches!(
        f,
        BCycleWedgeFlipB(_)
            | DCycleWedgeFlipSlash(_)
            | DCycleWedgeSquare(_)
            | DSquareWedgeSquare
            | DBoxTimes
            | DVee(DCore::Cycle(_), DCore::Cycle(_))
    )
}

fn min_vertices(f: FamilyId) -> usize {
    use FamilyId::*;
    let own = match f {
        D(DCore::Cycle(_)) => 5,
        DVee(DCore::Cycle(_), DCore::Cycle(_)) => 6,
        _ => 1,
    };
    own.max(super::min_vertices(f.kind()))
}

fn tree_depth(f: FamilyId, n: usize) -> usize {
    match f {
        FamilyId::A | FamilyId::B => n,
        _ => n.saturating_sub(2),
    }
}

/// Every embedding of the diagram's underlying graph into the family host
/// that also passes the family's orientation conditions.
pub fn host_embeddings(d: &crate::diagram::Diagram, family: FamilyId) -> Vec<Vec<usize>> {
    host_with_embeddings(d, family).map_or_else(Vec::new, |(_, e)| e)
}

/// Like [`host_embeddings`], also returning the host the embeddings point into.
pub fn host_with_embeddings(
    d: &crate::diagram::Diagram,
    family: FamilyId,
) -> Option<(std::sync::Arc<HostGraph>, Vec<Vec<usize>>)> {
    let ctx = Ctx::new(d);
    let mut out = Vec::new();
    let h = search(&ctx, family, |emb| {
        out.push(emb.to_vec());
        false
    })?;
    Some((h, out))
}

pub(crate) fn recognize_host(ctx: &Ctx, family: FamilyId) -> Option<FamilyMatch> {
    let mut found = None;
    let h = search(ctx, family, |emb| {
        found = Some(emb.to_vec());
        true
    })?;
    let emb = found?;
    let roles = emb.iter().map(|&v| h.roles(v).to_vec()).collect();
    Some(FamilyMatch {
        family,
        params: family.params(),
        roles,
        embedding: Some(emb),
        width: None,
        split: None,
    })
}

fn search<F>(ctx: &Ctx, family: FamilyId, mut visit: F) -> Option<std::sync::Arc<HostGraph>>
where
    F: FnMut(&[usize]) -> bool,
{
    let n = ctx.d.vertex_count();
    if family.is_comma() || n < min_vertices(family) {
        return None;
    }
    if !has_orientation_exceptions(family) && !ctx.oriented {
        return None;
    }
    let h = host(family, tree_depth(family, n)).ok()?;
    if h.core().len() > n {
        return None;
    }
    for_each_embedding(&ctx.g, &h, |emb| orientation_ok(ctx, family, &h, emb) && visit(emb));
    Some(h)
}

/// Orientation conditions given an embedding `emb` (diagram vertex to host vertex).
fn orientation_ok(ctx: &Ctx, family: FamilyId, h: &HostGraph, emb: &[usize]) -> bool {
    use FamilyId::*;
    let pre = |r: Role| -> usize {
        let hv = h.vertex(r).expect("host role");
        emb.iter().position(|&x| x == hv).expect("core vertex in image")
    };
    let set = |vs: &[usize]| -> BTreeSet<usize> { vs.iter().copied().collect() };
    let d = ctx.d;
    match family {
        BCycleWedgeFlipB(n) => {
            let ring: Vec<usize> = (1..=n as u8).map(|i| pre(Role::A(i))).collect();
            d.is_cyclically_oriented_without(&[(ring[0], ring[1])]) && !d.is_oriented_cycle(&ring)
        }
        DCycleWedgeFlipSlash(n) => {
            let (b1, b2) = (pre(Role::Bullet(1)), pre(Role::Bullet(2)));
            // Without e the bullet square loses its chord; it keeps the
            // orientation it has in the plain wedge and is not checked.
            let square = set(&[b1, b2, pre(Role::AP(1)), pre(Role::AP(2))]);
            let ring: Vec<usize> = (1..=n as u8).map(|i| pre(Role::A(i))).collect();
            d.chordless_cycles_without(&[(b1, b2)])
                .iter()
                .all(|c| set(c) == square || d.is_oriented_cycle(c))
                && !d.is_oriented_cycle(&ring)
        }
        DCycleWedgeSquare(n) => {
            let mut ring: Vec<usize> = (1..n as u8).map(|i| pre(Role::A(i))).collect();
            ring.push(pre(Role::AP(2)));
            let ring = set(&ring);
            // For n = 3 the bullets are adjacent and this square has a chord.
            let square = [Role::Bullet(1), Role::AP(1), Role::Bullet(2), Role::AP(2)].map(pre);
            d.is_oriented_cycle(&square) && ctx.cycles.iter().all(|c| (set(c) == ring) != d.is_oriented_cycle(c))
        }
        DSquareWedgeSquare => {
            let sq = set(&[Role::X(1), Role::A(1), Role::X(2), Role::A(2)].map(pre));
            ctx.cycles.iter().all(|c| set(c) == sq || d.is_oriented_cycle(c))
        }
        DBoxTimes => {
            let rim = set(&[1, 2, 3, 4].map(|i| pre(Role::A(i))));
            ctx.cycles.iter().all(|c| set(c) == rim || d.is_oriented_cycle(c))
        }
        DVee(DCore::Cycle(n), DCore::Cycle(m)) => {
            let ring = set(&(1..=n as u8).map(|i| pre(Role::A(i))).collect::<Vec<_>>());
            let ring2 = set(&(1..=m as u8).map(|i| pre(Role::AP(i))).collect::<Vec<_>>());
            ctx.cycles.iter().all(|c| {
                let s = set(c);
                let exempt = c.len() > 3 && s != ring && s != ring2;
                exempt || d.is_oriented_cycle(c)
            })
        }
        _ => ctx.oriented,
    }
}
