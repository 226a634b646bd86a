use std::collections::{HashMap, VecDeque};

use mutclass_core::hosts::{build_host, build_nabla, HostGraph, Role};
use mutclass_core::{DCore, Diagram, FamilyId, HostError};

fn host_families() -> Vec<FamilyId> {
    use FamilyId::*;
    let cores = [
        DCore::Cycle(3),
        DCore::Cycle(4),
        DCore::Square,
        DCore::BoxSlash,
        DCore::Bot,
    ];
    let mut out = vec![A, B, BSquareWedgeB, BSlashWedgeB, BSlashWedgeSquare, CWedge];
    out.extend([DSquareWedgeSquare, DSlashWedgeSlash, DBoxTimes]);
    out.extend(cores.iter().map(|&c| D(c)));
    for n in 3..=5 {
        out.extend([BCycleWedgeB(n), BCycleWedgeFlipB(n)]);
        out.extend([DCycleWedgeSquare(n), DCycleWedgeSlash(n), DCycleWedgeFlipSlash(n)]);
    }
    for (i, &p) in cores.iter().enumerate() {
        for &q in &cores[i..] {
            out.push(FamilyId::d_vee(p, q));
        }
    }
    out
}

fn by_roles(h: &HostGraph) -> HashMap<Vec<Role>, usize> {
    (0..h.vertex_count()).map(|v| (h.roles(v).to_vec(), v)).collect()
}

/// Graph distance of every vertex from the untruncated skeleton.
fn distances_from(h: &HostGraph, skeleton: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; h.vertex_count()];
    let mut queue: VecDeque<usize> = skeleton.iter().copied().collect();
    for &v in &queue {
        dist[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for (u, _) in h.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

#[test]
fn nabla_depths() {
    let t = build_nabla(0);
    assert_eq!((t.vertex_count(), t.core().len()), (1, 1));
    let t = build_nabla(1);
    assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
    let x = t.vertex(Role::X(0)).unwrap();
    assert_eq!(t.degree(x), 2);
    assert!((0..3).all(|v| t.degree(v) == 2));
    let t = build_nabla(2);
    assert_eq!((t.vertex_count(), t.edge_count()), (7, 9));
    assert_eq!(t.degree(x), 2);
}

#[test]
fn boxtimes_is_wheel_on_four() {
    let h = build_host(FamilyId::DBoxTimes, 0).unwrap();
    assert_eq!(h.vertex_count(), 5);
    let x1 = h.vertex(Role::X(1)).unwrap();
    let a: Vec<usize> = (1..=4).map(|i| h.vertex(Role::A(i)).unwrap()).collect();
    for i in 0..4 {
        assert_eq!(h.weight(a[i], a[(i + 1) % 4]), 1);
        assert_eq!(h.weight(a[i], a[(i + 2) % 4]), 0);
        assert_eq!(h.weight(x1, a[i]), 1);
    }
}

#[test]
fn c_wedge_triangle() {
    let h = build_host(FamilyId::CWedge, 0).unwrap();
    let [x1, x2, b] = [Role::X(1), Role::X(2), Role::Bullet(0)].map(|r| h.vertex(r).unwrap());
    assert_eq!((h.weight(x1, b), h.weight(x2, b), h.weight(x1, x2)), (2, 2, 4));
}

#[test]
fn b_host_weights() {
    let h = build_host(FamilyId::B, 1).unwrap();
    let x = h.vertex(Role::X(0)).unwrap();
    assert_eq!(h.vertex_count(), 3);
    let children: Vec<usize> = h.neighbors(x).map(|(u, _)| u).collect();
    assert_eq!(children.len(), 2);
    assert!(h.neighbors(x).all(|(_, w)| w == 2));
    assert_eq!(h.weight(children[0], children[1]), 1);
    let deeper = build_host(FamilyId::B, 3).unwrap();
    assert!(deeper.edges().all(|(a, b, w)| (w == 2) == (a == x || b == x)));
}

#[test]
fn glued_families_have_no_host() {
    for f in [
        FamilyId::BComma(DCore::Bot),
        FamilyId::CComma,
        FamilyId::d_comma(DCore::Square, DCore::Bot),
    ] {
        assert!(matches!(build_host(f, 2), Err(HostError::UnsupportedFamily(_))));
    }
    assert!(matches!(
        build_host(FamilyId::D(DCore::Cycle(2)), 1),
        Err(HostError::InvalidParams(_))
    ));
}

#[test]
fn truncations_are_nested() {
    for f in host_families() {
        for depth in 0..4 {
            let small = build_host(f, depth).unwrap();
            let big = build_host(f, depth + 1).unwrap();
            let index = by_roles(&big);
            let map: Vec<usize> = (0..small.vertex_count())
                .map(|v| {
                    *index
                        .get(small.roles(v))
                        .unwrap_or_else(|| panic!("{f}: {:?} lost", small.roles(v)))
                })
                .collect();
            for a in 0..small.vertex_count() {
                for b in 0..small.vertex_count() {
                    assert_eq!(small.weight(a, b), big.weight(map[a], map[b]), "{f} at depth {depth}");
                }
            }
            // what the deeper host adds lies exactly one step further out
            let skeleton = build_host(f, 0).unwrap();
            let base: Vec<usize> = (0..skeleton.vertex_count()).map(|v| index[skeleton.roles(v)]).collect();
            let dist = distances_from(&big, &base);
            for v in 0..big.vertex_count() {
                let kept = map.contains(&v);
                assert_eq!(kept, dist[v] <= depth, "{f} depth {depth}: {:?}", big.roles(v));
                assert!(dist[v] <= depth + 1);
            }
        }
    }
}

#[test]
fn hosts_satisfy_the_cycle_condition() {
    for f in host_families() {
        let h = build_host(f, 3).unwrap();
        let d: Diagram = h.to_diagram();
        assert!(d.validate().is_empty(), "{f}: {:?}", d.validate());
        assert_eq!(d.edge_count(), h.edge_count());
    }
}
