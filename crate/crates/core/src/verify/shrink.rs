//! Turning an oriented cycle hanging off a diagram into a fork, one
//! mutation at a time.

use crate::canon::canonical_key_undirected;
use crate::diagram::{Diagram, UnderlyingGraph};
use crate::error::VerifyError;

#[derive(Debug, Clone)]
pub struct ShrinkOutcome {
    /// The mutated diagram.
    pub diagram: Diagram,
    /// Mutated vertices, in the order applied.
    pub sequence: Vec<usize>,
    /// Vertices of the cycle; `cycle[i]` carries label `i + 1`.
    pub cycle: Vec<usize>,
    pub y: usize,
}

/// Glues an oriented `n`-cycle to `attachment` at `y` (arrows `y -> 1` and
/// `n -> y`) and mutates at `1, 2, ..., n - 2`.
///
/// Attachment vertices keep their indices; cycle label `i` becomes vertex
/// `attachment.vertex_count() + i - 1`. Cycle arrows run `i + 1 -> i` and `1 -> n`.
pub fn shrink_cycle(n: usize, attachment: &Diagram, y: usize) -> Result<ShrinkOutcome, VerifyError> {
    if n < 3 {
        return Err(VerifyError::InvalidInput(format!("cycle length {n} is below 3")));
    }
    let m = attachment.vertex_count();
    if m == 0 {
        return Err(VerifyError::InvalidInput("attachment has no vertices".into()));
    }
    if y >= m {
        return Err(VerifyError::InvalidInput(format!(
            "y = {y} is not an attachment vertex"
        )));
    }
    if !attachment.is_valid() {
        return Err(VerifyError::InvalidInput("attachment is not a valid diagram".into()));
    }
    let cycle: Vec<usize> = (m..m + n).collect();
    let mut edges: Vec<(usize, usize, i64)> = attachment.edges().map(|e| (e.tail, e.head, e.weight as i64)).collect();
    for i in 1..n {
        edges.push((cycle[i], cycle[i - 1], 1));
    }
    edges.push((cycle[0], cycle[n - 1], 1));
    edges.push((y, cycle[0], 1));
    edges.push((cycle[n - 1], y, 1));
    let start = Diagram::from_edges(m + n, edges);
    let sequence: Vec<usize> = cycle[..n - 2].to_vec();
    let diagram = start.mutate_seq(&sequence)?;
    Ok(ShrinkOutcome {
        diagram,
        sequence,
        cycle,
        y,
    })
}

impl ShrinkOutcome {
    /// Broken postconditions, empty when the cycle became a fork attached by
    /// the single arrow `1 -> y`.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let d = &self.diagram;
        let n = self.cycle.len();
        let part = d.induced(&self.cycle);
        let fork = UnderlyingGraph::from_edges(n, (1..n).map(|i| if i == 1 { (0, 2, 1) } else { (i - 1, i, 1) }));
        let same = canonical_key_undirected(&part.underlying()).ok() == canonical_key_undirected(&fork).ok();
        if !same {
            out.push(format!("cycle part is not a D{n} tree"));
        }
        let links: Vec<(usize, usize)> = self
            .cycle
            .iter()
            .flat_map(|&c| {
                (0..self.cycle[0])
                    .filter(move |&a| d.adjacent(c, a))
                    .map(move |a| (c, a))
            })
            .collect();
        if links != [(self.cycle[0], self.y)] || !d.has_arrow(self.cycle[0], self.y) {
            out.push(format!(
                "expected the single arrow 1 -> y between the parts, found {links:?}"
            ));
        }
        let mut local = self.cycle.clone();
        local.push(self.y);
        if !d.induced(&local).is_simply_laced() {
            out.push("sub-diagram on y and the cycle is not simply-laced".into());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_on_single_vertex() {
        let out = shrink_cycle(3, &Diagram::empty(1), 0).unwrap();
        assert_eq!(out.sequence, vec![1]);
        let d = &out.diagram;
        assert!(d.has_arrow(1, 0));
        assert!(d.adjacent(1, 2) && d.adjacent(1, 3) && !d.adjacent(2, 3));
        assert!(out.violations().is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(shrink_cycle(2, &Diagram::empty(1), 0).is_err());
        assert!(shrink_cycle(4, &Diagram::empty(0), 0).is_err());
        assert!(shrink_cycle(4, &Diagram::empty(2), 2).is_err());
    }
}
