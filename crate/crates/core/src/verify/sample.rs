//! Random family members: connected full sub-graphs of hosts around the core,
//! oriented so that chordless cycles tend to be oriented.

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::diagram::{chordless_cycles_with, Diagram};
use crate::family::{DCore, FamilyId, TypeKind};
use crate::hosts::host;
use crate::recognize::classify;

/// Where a random member comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Source {
    Host(FamilyId),
    /// Two constituents glued at a vertex; `true` marks a B side.
    Glue(bool, bool),
}

fn sources(kind: TypeKind, vertices: usize) -> Vec<Source> {
    use FamilyId::*;
    let n = vertices as u32;
    let cores = DCore::all_up_to(vertices);
    let mut out = Vec::new();
    match kind {
        TypeKind::A => out.push(Source::Host(A)),
        TypeKind::B => out.push(Source::Host(B)),
        TypeKind::D => out.extend(cores.iter().map(|&c| Source::Host(D(c)))),
        TypeKind::B1 => {
            out.extend([BSquareWedgeB, BSlashWedgeB, BSlashWedgeSquare].map(Source::Host));
            for l in 3..=n {
                out.push(Source::Host(BCycleWedgeB(l)));
                out.push(Source::Host(BCycleWedgeFlipB(l)));
            }
            out.extend([Source::Glue(false, true); 4]);
        }
        TypeKind::C1 => out.extend([Source::Host(CWedge), Source::Glue(true, true)]),
        TypeKind::D1 => {
            for (i, &p) in cores.iter().enumerate() {
                for &q in &cores[i..] {
                    out.push(Source::Host(FamilyId::d_vee(p, q)));
                }
            }
            for l in 3..=n {
                out.extend([DCycleWedgeSquare(l), DCycleWedgeSlash(l), DCycleWedgeFlipSlash(l)].map(Source::Host));
            }
            out.extend([DSquareWedgeSquare, DSlashWedgeSlash, DBoxTimes].map(Source::Host));
            out.extend([Source::Glue(false, false); 8]);
        }
    }
    out
}

/// Weighted edges `(a, b, w)` of a random connected full sub-graph of the
/// family's host on `size` vertices containing the core.
fn host_piece<R: Rng>(family: FamilyId, size: usize, rng: &mut R) -> Option<Vec<(usize, usize, u64)>> {
    let h = host(family, size).ok()?;
    if h.core().len() > size {
        return None;
    }
    let mut chosen: Vec<usize> = h.core().to_vec();
    if chosen.is_empty() {
        chosen.push(h.anchor());
    }
    while chosen.len() < size {
        let mut frontier: Vec<usize> = chosen
            .iter()
            .flat_map(|&v| h.neighbors(v).map(|(u, _)| u))
            .filter(|u| !chosen.contains(u))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        chosen.push(*frontier.choose(rng)?);
    }
    let mut edges = Vec::new();
    for (i, &a) in chosen.iter().enumerate() {
        for (j, &b) in chosen.iter().enumerate().skip(i + 1) {
            let w = h.weight(a, b);
            if w != 0 {
                edges.push((i, j, w));
            }
        }
    }
    Some(edges)
}

/// Orientation of an undirected weighted graph. Half of the time every edge
/// is flipped at random; otherwise chordless cycles are oriented one after
/// the other, following edges fixed by earlier cycles.
fn orient<R: Rng>(n: usize, edges: &[(usize, usize, u64)], rng: &mut R) -> Option<Diagram> {
    let mut dir: Vec<Option<bool>> = vec![None; edges.len()];
    let index = |a: usize, b: usize| edges.iter().position(|&(u, v, _)| (u, v) == (a.min(b), a.max(b)));
    if rng.random_bool(0.5) {
        let mut cycles = chordless_cycles_with(n, |a, b| index(a, b).is_some());
        for i in (1..cycles.len()).rev() {
            cycles.swap(i, rng.random_range(0..=i));
        }
        for c in cycles {
            let len = c.len();
            // forward: arrows c[i] -> c[i + 1]
            let mut forward = None;
            for i in 0..len {
                let (a, b) = (c[i], c[(i + 1) % len]);
                let e = index(a, b)?;
                if let Some(d) = dir[e] {
                    let f = d == (a < b);
                    if forward.is_some_and(|x| x != f) {
                        return None;
                    }
                    forward = Some(f);
                }
            }
            let forward = forward.unwrap_or_else(|| rng.random_bool(0.5));
            for i in 0..len {
                let (a, b) = (c[i], c[(i + 1) % len]);
                dir[index(a, b)?] = Some(forward == (a < b));
            }
        }
    }
    let triples = edges.iter().zip(&dir).map(|(&(a, b, w), d)| {
        let up = d.unwrap_or_else(|| rng.random_bool(0.5));
        if up {
            (a, b, w as i64)
        } else {
            (b, a, w as i64)
        }
    });
    let triples: Vec<_> = triples.collect();
    Some(Diagram::from_edges(n, triples))
}

fn glued<R: Rng>(b_sides: (bool, bool), vertices: usize, rng: &mut R) -> Option<Vec<(usize, usize, u64)>> {
    let side_family = |is_b: bool, size: usize, rng: &mut R| {
        if is_b {
            FamilyId::B
        } else {
            *DCore::all_up_to(size)
                .iter()
                .map(|&c| FamilyId::D(c))
                .collect::<Vec<_>>()
                .choose(rng)
                .expect("cores")
        }
    };
    let min = |is_b: bool| if is_b { 2 } else { 3 };
    let (lo, hi) = (min(b_sides.0), vertices + 1 - min(b_sides.1));
    if lo > hi {
        return None;
    }
    let s1 = rng.random_range(lo..=hi);
    let s2 = vertices + 1 - s1;
    let f1 = side_family(b_sides.0, s1, rng);
    let f2 = side_family(b_sides.1, s2, rng);
    let e1 = host_piece(f1, s1, rng)?;
    let e2 = host_piece(f2, s2, rng)?;
    let g1 = rng.random_range(0..s1);
    let g2 = rng.random_range(0..s2);
    // side two: glue vertex becomes g1, the others follow side one
    let map = |v: usize| match v.cmp(&g2) {
        std::cmp::Ordering::Equal => g1,
        std::cmp::Ordering::Less => s1 + v,
        std::cmp::Ordering::Greater => s1 + v - 1,
    };
    let mut edges = e1;
    edges.extend(e2.into_iter().map(|(a, b, w)| {
        let (a, b) = (map(a), map(b));
        (a.min(b), a.max(b), w)
    }));
    Some(edges)
}

/// A random diagram on `vertices` vertices that the recognizers place in
/// `kind`, or `None` after `attempts` unsuccessful draws.
pub fn random_member<R: Rng>(kind: TypeKind, vertices: usize, attempts: usize, rng: &mut R) -> Option<Diagram> {
    let srcs = sources(kind, vertices);
    for _ in 0..attempts {
        let edges = match *srcs.choose(rng)? {
            Source::Host(f) => host_piece(f, vertices, rng),
            Source::Glue(b1, b2) => glued((b1, b2), vertices, rng),
        };
        let Some(edges) = edges else { continue };
        let Some(d) = orient(vertices, &edges, rng) else {
            continue;
        };
        if !d.is_valid() || !d.is_connected() {
            continue;
        }
        if classify(&d).mutation_type.kind() == Some(kind) {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn draws_members_of_each_type() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (kind, n) in [
            (TypeKind::A, 5),
            (TypeKind::B, 4),
            (TypeKind::D, 6),
            (TypeKind::B1, 6),
            (TypeKind::C1, 5),
            (TypeKind::D1, 7),
        ] {
            let d = random_member(kind, n, 2000, &mut rng).unwrap_or_else(|| panic!("no {kind} member"));
            assert_eq!(d.vertex_count(), n);
            assert_eq!(classify(&d).mutation_type.kind(), Some(kind));
        }
    }
}
