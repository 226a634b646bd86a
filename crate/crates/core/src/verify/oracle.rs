use crate::canon::{canonical_key_undirected, CanonicalKey};
use crate::diagram::Diagram;
use crate::enumerate::{enumerate_class, Limits};
use crate::error::VerifyError;
use crate::family::{MutationType, TypeKind};

use super::seeds::dynkin_seed;

/// Undirected shapes of every seed with `vertices` vertices, in `TypeKind::ALL` order.
pub(crate) fn seed_shapes(vertices: usize) -> Result<Vec<(MutationType, CanonicalKey)>, VerifyError> {
    let mut out = Vec::new();
    for kind in TypeKind::ALL {
        let rank = kind.rank_for(vertices);
        if kind.vertices_for(rank) != vertices || rank < kind.min_rank() {
            continue;
        }
        let seed = dynkin_seed(kind, rank)?;
        let key = canonical_key_undirected(&seed.underlying()).map_err(crate::error::EnumError::from)?;
        out.push((MutationType::new(kind, rank), key));
    }
    Ok(out)
}

/// Mutation type found by brute force: the class of `d` is enumerated and
/// scanned for a member whose underlying weighted graph is a Dynkin shape.
///
/// Returns `Unknown` when the class is exhausted without such a member and
/// `LimitExceeded` when the limits stop the enumeration first.
pub fn classify_by_enumeration(d: &Diagram, limits: Limits) -> Result<MutationType, VerifyError> {
    if !d.is_valid() || !d.is_connected() {
        return Err(VerifyError::InvalidInput("expected a valid connected diagram".into()));
    }
    let shapes = seed_shapes(d.vertex_count())?;
    let class = enumerate_class(d, limits)?;
    for m in class.members.values() {
        let key = canonical_key_undirected(&m.underlying()).map_err(crate::error::EnumError::from)?;
        if let Some((t, _)) = shapes.iter().find(|(_, k)| *k == key) {
            return Ok(*t);
        }
    }
    if class.exhausted {
        Ok(MutationType::Unknown)
    } else {
        Err(VerifyError::LimitExceeded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oriented_square_is_d4() {
        let d = Diagram::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        let t = classify_by_enumeration(&d, Limits::default()).unwrap();
        assert_eq!(t, MutationType::new(TypeKind::D, 4));
    }

    #[test]
    fn heavy_triangle_is_unknown() {
        let d = Diagram::from_edges(3, [(0, 1, 4), (1, 2, 4), (2, 0, 4)]);
        for k in 0..3 {
            let m = d.mutate(k).unwrap();
            assert_eq!(crate::canonical_key(&m).unwrap(), crate::canonical_key(&d).unwrap());
        }
        let class = enumerate_class(&d, Limits::default()).unwrap();
        assert_eq!(class.len(), 1);
        assert_eq!(
            classify_by_enumeration(&d, Limits::default()).unwrap(),
            MutationType::Unknown
        );
    }

    #[test]
    fn limits_are_reported() {
        let d = dynkin_seed(TypeKind::A, 6).unwrap();
        let tiny = Limits {
            max_members: 2,
            max_steps: 100,
        };
        // The path itself is a shape, so the scan succeeds before the limit matters.
        assert!(classify_by_enumeration(&d, tiny).is_ok());
        let cyc = Diagram::from_edges(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)]);
        assert!(matches!(
            classify_by_enumeration(&cyc, tiny),
            Err(VerifyError::LimitExceeded)
        ));
    }
}
