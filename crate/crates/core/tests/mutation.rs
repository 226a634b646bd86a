mod common;

use common::{diagram_of, matrix_mutate, random_skew_symmetrizable, realize};
use mutclass_core::verify::dynkin_seed;
use mutclass_core::{Diagram, MutationError, TypeKind, Violation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn perfect_square_triangle_is_valid() {
    let d = Diagram::from_edges(3, [(0, 1, 2), (1, 2, 2), (2, 0, 4)]);
    assert!(d.validate().is_empty());
}

#[test]
fn non_square_triangle_has_witness() {
    let d = Diagram::from_edges(3, [(0, 1, 2), (1, 2, 1), (2, 0, 1)]);
    let v = d.validate();
    assert_eq!(v.len(), 1);
    match &v[0] {
        Violation::CycleNotSquare { cycle, product } => {
            assert_eq!(*product, 2);
            let mut c = cycle.clone();
            c.sort_unstable();
            assert_eq!(c, [0, 1, 2]);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn zero_weight_is_reported() {
    let d = Diagram::from_edges(2, [(0, 1, 0)]);
    assert!(matches!(
        d.validate()[..],
        [Violation::NonPositiveWeight { weight: 0, .. }]
    ));
    assert!(matches!(d.mutate(0), Err(MutationError::Malformed)));
}

#[test]
fn structural_violations() {
    let d = Diagram::from_edges(2, [(0, 0, 1), (0, 1, 1), (1, 0, 2), (0, 5, 1)]);
    let v = d.validate();
    assert!(v.contains(&Violation::SelfLoop { vertex: 0 }));
    assert!(v.contains(&Violation::DuplicateEdge { u: 0, v: 1 }));
    assert!(v.contains(&Violation::VertexOutOfRange { tail: 0, head: 5 }));
}

#[test]
fn path_through_k_gains_an_edge() {
    // i = 0, k = 1, j = 2
    let d = Diagram::from_edges(3, [(0, 1, 1), (1, 2, 1)]);
    let m = d.mutate(1).unwrap();
    assert_eq!(m, Diagram::from_edges(3, [(1, 0, 1), (2, 1, 1), (0, 2, 1)]));
}

#[test]
fn lone_edge_reverses() {
    let d = Diagram::from_edges(2, [(0, 1, 2)]);
    assert_eq!(d.mutate(0).unwrap(), Diagram::from_edges(2, [(1, 0, 2)]));
}

#[test]
fn oriented_heavy_triangle_loses_its_edge() {
    // x1 = 0, bullet = 1, x2 = 2
    let d = Diagram::from_edges(3, [(0, 1, 2), (1, 2, 2), (2, 0, 4)]);
    let m = d.mutate(1).unwrap();
    assert_eq!(m, Diagram::from_edges(3, [(1, 0, 2), (2, 1, 2)]));
    assert_eq!(diagram_of(&matrix_mutate(&realize(&d).unwrap(), 1)), m);
}

#[test]
fn unknown_vertex() {
    let d = Diagram::from_edges(2, [(0, 1, 1)]);
    assert_eq!(d.mutate(2), Err(MutationError::UnknownVertex(2)));
}

#[test]
fn cyclic_orientation_examples() {
    let oriented = Diagram::from_edges(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]);
    assert!(oriented.is_cyclically_oriented());
    let sink = Diagram::from_edges(3, [(0, 1, 1), (2, 1, 1), (2, 0, 1)]);
    assert!(!sink.is_cyclically_oriented());
    // square 0-1-2-3 with chord 0-2; both triangles oriented, the square is not chordless
    let chorded = Diagram::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (0, 3, 1), (3, 2, 1)]);
    assert!(chorded.is_cyclically_oriented());
    let mut cycles = chorded.chordless_cycles();
    for c in &mut cycles {
        c.sort_unstable();
    }
    cycles.sort();
    assert_eq!(cycles, [vec![0, 1, 2], vec![0, 2, 3]]);
}

#[test]
fn orientation_ignoring_an_edge() {
    // 0->1->2->3->0 with chord 0-2 pointing 2->0: the triangles are 0,1,2 (oriented)
    // and 0,2,3 (not oriented); without the chord only the oriented square remains.
    let d = Diagram::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (2, 0, 1)]);
    assert!(!d.is_cyclically_oriented());
    assert!(d.is_cyclically_oriented_without(&[(0, 2)]));
}

#[test]
fn simply_laced_examples() {
    assert!(Diagram::from_edges(2, [(0, 1, 1)]).is_simply_laced());
    assert!(!Diagram::from_edges(2, [(0, 1, 2)]).is_simply_laced());
    assert!(Diagram::empty(1).is_simply_laced());
}

#[test]
fn degrees() {
    let d = Diagram::from_edges(4, [(0, 1, 1), (2, 1, 1), (1, 3, 1)]);
    assert_eq!(d.degree(1), 3);
    assert_eq!(d.in_degree(1), 2);
    assert_eq!(d.out_degree(1), d.degree(1) - d.in_degree(1));
}

#[test]
fn realization_of_every_weight() {
    for d in [
        Diagram::from_edges(2, [(0, 1, 4)]),
        Diagram::from_edges(3, [(0, 1, 2), (1, 2, 2), (2, 0, 4)]),
        dynkin_seed(TypeKind::C1, 4).unwrap(),
    ] {
        assert_eq!(diagram_of(&realize(&d).unwrap()), d);
    }
}

/// Random walks through finite and affine classes, checked step by step.
#[test]
fn random_walks_agree_with_matrix_mutation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kind in TypeKind::ALL {
        let seed = dynkin_seed(kind, kind.min_rank().max(4) + 1).unwrap();
        let mut d = seed.clone();
        let mut b = realize(&seed).unwrap();
        for _ in 0..300 {
            let k = rng.random_range(0..d.vertex_count());
            let next = d.mutate(k).unwrap();
            b = matrix_mutate(&b, k);
            assert_eq!(next, diagram_of(&b), "{kind} at {k}");
            assert!(next.is_valid());
            assert_eq!(next.mutate(k).unwrap(), d);
            d = next;
        }
    }
}

fn matrix_strategy() -> impl Strategy<Value = common::Matrix> {
    (2usize..8, any::<u64>()).prop_map(|(n, s)| random_skew_symmetrizable(n, &mut ChaCha8Rng::seed_from_u64(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn mutation_matches_matrices(b in matrix_strategy(), ks in prop::collection::vec(0usize..8, 1..6)) {
        let mut b = b;
        let mut d = diagram_of(&b);
        prop_assert!(d.is_valid());
        for k in ks {
            let k = k % d.vertex_count();
            let next = d.mutate(k).unwrap();
            b = matrix_mutate(&b, k);
            prop_assert_eq!(&next, &diagram_of(&b));
            prop_assert!(next.is_valid());
            prop_assert_eq!(next.vertex_count(), d.vertex_count());
            prop_assert_eq!(next.mutate(k).unwrap(), d);
            d = next;
        }
    }
}
