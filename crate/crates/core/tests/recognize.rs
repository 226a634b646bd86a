use std::collections::VecDeque;

use mutclass_core::diagram::UnderlyingGraph;
use mutclass_core::embed::embed_full_subgraph;
use mutclass_core::hosts::{build_nabla, host, Role};
use mutclass_core::recognize::{all_matches, recognize};
use mutclass_core::verify::dynkin_seed;
use mutclass_core::{classify, enumerate_class, DCore, Diagram, FamilyId, FamilyMatch, Limits, MutationType, TypeKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn d(n: usize, edges: &[(usize, usize, i64)]) -> Diagram {
    Diagram::from_edges(n, edges.iter().copied())
}

fn known(kind: TypeKind, rank: usize) -> MutationType {
    MutationType::new(kind, rank)
}

#[test]
fn triangle_embeds_in_nabla() {
    let triangle = UnderlyingGraph::from_edges(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]);
    let m = embed_full_subgraph(&triangle, &build_nabla(1)).unwrap();
    let mut image = m.clone();
    image.sort_unstable();
    assert_eq!(image, [0, 1, 2]);
}

#[test]
fn type_a_host_rejects_square_and_claw() {
    let a = host(FamilyId::A, 4).unwrap();
    let square = UnderlyingGraph::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
    let claw = UnderlyingGraph::from_edges(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)]);
    assert!(embed_full_subgraph(&square, &a).is_none());
    assert!(embed_full_subgraph(&claw, &a).is_none());
    let path = UnderlyingGraph::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]);
    assert!(embed_full_subgraph(&path, &a).is_some());
}

#[test]
fn path_is_type_a() {
    let p = d(4, &[(0, 1, 1), (2, 1, 1), (2, 3, 1)]);
    assert!(recognize(&p, FamilyId::A).is_some());
    assert_eq!(classify(&p).mutation_type, known(TypeKind::A, 4));
}

#[test]
fn inward_star_has_x1_in_the_middle() {
    let star = d(4, &[(1, 0, 1), (2, 0, 1), (3, 0, 1)]);
    let m = recognize(&star, FamilyId::D(DCore::Bot)).unwrap();
    assert_eq!(m.vertex(Role::X(1)), Some(0));
    assert_eq!(classify(&star).mutation_type, known(TypeKind::D, 4));
}

#[test]
fn weighted_end_is_type_b() {
    let p = d(3, &[(0, 1, 2), (1, 2, 1)]);
    let m = recognize(&p, FamilyId::B).unwrap();
    assert_eq!(m.vertex(Role::X(0)), Some(0));
    assert_eq!(classify(&p).mutation_type, known(TypeKind::B, 3));
}

#[test]
fn oriented_square_is_d_square() {
    let sq = d(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
    assert!(recognize(&sq, FamilyId::D(DCore::Square)).is_some());
    assert!(recognize(&sq, FamilyId::A).is_none());
    assert_eq!(classify(&sq).mutation_type, known(TypeKind::D, 4));
}

#[test]
fn classify_examples() {
    assert_eq!(
        classify(&d(3, &[(0, 1, 1), (1, 2, 1)])).mutation_type,
        known(TypeKind::A, 3)
    );
    // x - bullet - x' with weight 2 on both edges
    let c = d(3, &[(0, 1, 2), (1, 2, 2)]);
    assert_eq!(classify(&c).mutation_type, known(TypeKind::C1, 2));
    let bent = d(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
    let c = classify(&bent);
    assert_eq!(c.mutation_type, MutationType::Unknown);
    assert!(c.family_match.is_none());
    assert_eq!(classify(&Diagram::empty(2)).mutation_type, MutationType::Unknown);
}

fn only_match(g: &Diagram) -> FamilyMatch {
    let all = all_matches(g);
    assert_eq!(all.len(), 1, "{:?}", all.iter().map(|m| m.family).collect::<Vec<_>>());
    all.into_iter().next().unwrap()
}

fn check_figure(n: usize, edges: &[(usize, usize, i64)], family: &str, kind: TypeKind, width: usize) {
    let g = d(n, edges);
    assert!(g.is_valid());
    let m = only_match(&g);
    assert_eq!(m.family.to_string(), family);
    assert_eq!(m.width.as_ref().map(|w| w.value), Some(width), "{family}");
    let rank = kind.rank_for(n);
    assert_eq!(classify(&g).mutation_type, known(kind, rank));
}

#[test]
#[rustfmt::skip]
fn glued_b_figures() {
    check_figure(
        15,
        &[
            (0, 1, 1), (1, 8, 1), (2, 3, 1), (2, 5, 1), (4, 1, 1), (4, 2, 1), (5, 4, 1), (5, 6, 1), (6, 14, 2),
            (7, 0, 1), (7, 11, 1), (8, 4, 1), (8, 7, 1), (9, 13, 1), (10, 6, 1), (11, 8, 1), (12, 9, 1), (12, 11, 1),
            (13, 12, 1), (14, 10, 2),
        ],
        "B_(o,4),B",
        TypeKind::B1,
        2,
    );
    check_figure(
        9,
        &[
            (0, 2, 1), (1, 3, 1), (2, 3, 1), (3, 0, 1), (3, 4, 1), (4, 1, 1), (4, 5, 1), (4, 7, 1), (5, 8, 2),
            (6, 2, 1), (7, 3, 1), (8, 4, 2),
        ],
        "B_boxslash,B",
        TypeKind::B1,
        0,
    );
}

#[test]
#[rustfmt::skip]
fn glued_c_figures() {
    check_figure(
        9,
        &[
            (0, 2, 1), (1, 4, 1), (2, 3, 1), (2, 5, 1), (3, 4, 1), (3, 7, 2), (4, 6, 1), (4, 8, 2), (5, 0, 1),
            (6, 1, 1), (7, 2, 2), (8, 3, 2),
        ],
        "C_B,B",
        TypeKind::C1,
        0,
    );
    check_figure(
        6,
        &[
            (0, 1, 2), (1, 3, 1), (2, 3, 1), (3, 4, 1), (3, 5, 2), (4, 1, 1), (5, 2, 2),
        ],
        "C_B,B",
        TypeKind::C1,
        1,
    );
}

#[test]
#[rustfmt::skip]
fn glued_d_figures() {
    check_figure(
        17,
        &[
            (0, 1, 1), (1, 8, 1), (2, 3, 1), (2, 5, 1), (4, 1, 1), (4, 2, 1), (5, 4, 1), (5, 6, 1), (6, 11, 1),
            (7, 0, 1), (7, 13, 1), (8, 4, 1), (8, 7, 1), (9, 15, 1), (10, 6, 1), (11, 10, 1), (12, 11, 1), (13, 8, 1),
            (14, 9, 1), (14, 13, 1), (15, 14, 1), (16, 11, 1),
        ],
        "D_(o,4),bot",
        TypeKind::D1,
        2,
    );
    check_figure(
        11,
        &[
            (0, 3, 1), (1, 4, 1), (2, 6, 1), (3, 4, 1), (4, 0, 1), (4, 5, 1), (5, 1, 1), (5, 6, 1), (5, 9, 1),
            (6, 7, 1), (7, 2, 1), (7, 10, 1), (8, 3, 1), (9, 4, 1), (10, 6, 1),
        ],
        "D_boxslash,boxslash",
        TypeKind::D1,
        0,
    );
    check_figure(
        11,
        &[
            (0, 2, 1), (1, 4, 1), (2, 3, 1), (2, 6, 1), (3, 0, 1), (3, 7, 1), (4, 5, 1), (4, 8, 1), (5, 1, 1),
            (5, 9, 1), (6, 7, 1), (7, 2, 1), (7, 8, 1), (8, 3, 1), (8, 9, 1), (9, 4, 1), (9, 10, 1), (10, 5, 1),
        ],
        "D_(o,3),(o,3)",
        TypeKind::D1,
        0,
    );
}

fn bfs_distance(g: &Diagram, from: &[usize], to: &[usize]) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue: VecDeque<usize> = from.iter().copied().collect();
    for &v in from {
        dist[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    to.iter().map(|&v| dist[v]).min().filter(|&x| x != usize::MAX)
}

fn x_vertices(m: &FamilyMatch, primed: bool) -> Vec<usize> {
    (0..m.roles.len())
        .filter(|&v| {
            m.roles[v].iter().any(|r| {
                if primed {
                    matches!(r, Role::XP(_))
                } else {
                    matches!(r, Role::X(_))
                }
            })
        })
        .collect()
}

/// The reported width of every glued match is the shortest x to x' distance
/// less the family's offset, and the reported path realises it.
#[test]
fn widths_recomputed_independently() {
    let mut checked = 0;
    for (kind, rank) in [(TypeKind::B1, 6), (TypeKind::C1, 5), (TypeKind::D1, 6)] {
        let class = enumerate_class(&dynkin_seed(kind, rank).unwrap(), Limits::default()).unwrap();
        for g in class.members.values() {
            for m in all_matches(g).into_iter().filter(|m| m.family.is_comma()) {
                let w = m.width.as_ref().unwrap();
                let offset = match m.family {
                    FamilyId::CComma => 2,
                    FamilyId::BComma(_) => 1,
                    FamilyId::DComma(DCore::Cycle(_), DCore::Cycle(_)) => 0,
                    _ => 1,
                };
                let (xs, xps) = (x_vertices(&m, false), x_vertices(&m, true));
                let dist = bfs_distance(g, &xs, &xps).unwrap();
                assert_eq!(w.value + offset, dist, "{}", m.family);
                assert_eq!(w.path.len(), dist + 1);
                assert!(xs.contains(&w.path[0]) && xps.contains(w.path.last().unwrap()));
                assert!(w.path.windows(2).all(|p| g.adjacent(p[0], p[1])));
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

/// Random walks from every seed never leave the seed's type.
#[test]
fn type_is_constant_along_random_walks() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for kind in TypeKind::ALL {
        for rank in kind.min_rank()..kind.min_rank() + 4 {
            let mut g = dynkin_seed(kind, rank).unwrap();
            let expected = known(kind, rank);
            for _ in 0..60 {
                g = g.mutate(rng.random_range(0..g.vertex_count())).unwrap();
                let m = classify(&g);
                assert_eq!(m.mutation_type, expected, "{g:?}");
                assert_eq!(m.family_match.unwrap().family.kind(), kind);
            }
        }
    }
}
