use crate::diagram::Diagram;
use crate::error::VerifyError;
use crate::family::TypeKind;

/// Dynkin diagram of the given type and rank, every edge oriented from the
/// lower to the higher index.
///
/// Forks use vertices 0, 1 (joined to 2) at the start and the last two vertices
/// (joined to the third to last) at the end.
pub fn dynkin_seed(kind: TypeKind, rank: usize) -> Result<Diagram, VerifyError> {
    if rank < kind.min_rank() {
        return Err(VerifyError::InvalidRank {
            ty: kind.to_string(),
            rank,
        });
    }
    let n = kind.vertices_for(rank);
    let mut edges: Vec<(usize, usize, i64)> = (1..n).map(|i| (i - 1, i, 1)).collect();
    let fork_start = |e: &mut Vec<(usize, usize, i64)>| e[0] = (0, 2, 1);
    let fork_end = |e: &mut Vec<(usize, usize, i64)>| {
        let l = e.len() - 1;
        e[l] = (n - 3, n - 1, 1);
    };
    match kind {
        TypeKind::A => {}
        TypeKind::B => edges[0].2 = 2,
        TypeKind::D => fork_start(&mut edges),
        TypeKind::B1 => {
            fork_start(&mut edges);
            let l = edges.len() - 1;
            edges[l].2 = 2;
        }
        TypeKind::C1 => {
            edges[0].2 = 2;
            let l = edges.len() - 1;
            edges[l].2 = 2;
        }
        TypeKind::D1 => {
            fork_start(&mut edges);
            fork_end(&mut edges);
        }
    }
    Ok(Diagram::from_edges(n, edges))
}
