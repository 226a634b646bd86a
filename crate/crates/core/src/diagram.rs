//! Weighted directed diagrams, their validity condition and mutation.
//!
//! A [`Diagram`] stores a dense signed weight matrix: entry `(i, j)` is `w`
//! for an edge `i -> j` of weight `w`, `-w` for `j -> i`, and `0` when the
//! pair is not joined. One edge per unordered pair is therefore built in.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::arith::{isqrt_exact, SquareClass};
use crate::error::MutationError;

pub type VertexId = usize;

/// A directed edge `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub tail: VertexId,
    pub head: VertexId,
    pub weight: u64,
}

/// External vertex names carried along for display and documents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexNames {
    pub ids: Vec<String>,
    pub labels: Vec<Option<String>>,
}

/// One broken invariant of a candidate diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexOutOfRange { tail: usize, head: usize },
    SelfLoop { vertex: usize },
    NonPositiveWeight { tail: usize, head: usize, weight: i64 },
    DuplicateEdge { u: usize, v: usize },
    CycleNotSquare { cycle: Vec<usize>, product: u128 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { tail, head } => {
                write!(f, "edge ({tail}, {head}) references a missing vertex")
            }
            Violation::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Violation::NonPositiveWeight { tail, head, weight } => {
                write!(f, "non-positive weight {weight} on edge ({tail}, {head})")
            }
            Violation::DuplicateEdge { u, v } => {
                write!(f, "more than one edge joins vertices {u} and {v}")
            }
            Violation::CycleNotSquare { cycle, product } => {
                write!(f, "cycle product not a perfect square: {product} along {cycle:?}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    m: Vec<i64>,
    names: Option<Arc<VertexNames>>,
    malformed: Vec<Violation>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({}; ", self.n)?;
        let edges: Vec<String> = self
            .edges()
            .map(|e| {
                if e.weight == 1 {
                    format!("{}->{}", e.tail, e.head)
                } else {
                    format!("{}-{}->{}", e.tail, e.weight, e.head)
                }
            })
            .collect();
        write!(f, "{})", edges.join(" "))
    }
}

impl Diagram {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Diagram {
            n,
            m: vec![0; n * n],
            names: None,
            malformed: Vec::new(),
        }
    }

    /// Builds a candidate diagram from `(tail, head, weight)` triples.
    ///
    /// Structurally broken edges (self-loops, non-positive weights, repeated
    /// pairs, unknown vertices) are dropped and reported by [`Diagram::validate`].
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut d = Diagram::empty(n);
        for (tail, head, weight) in edges {
            if tail >= n || head >= n {
                d.malformed.push(Violation::VertexOutOfRange { tail, head });
            } else if tail == head {
                d.malformed.push(Violation::SelfLoop { vertex: tail });
            } else if weight <= 0 {
                d.malformed.push(Violation::NonPositiveWeight { tail, head, weight });
            } else if d.m[tail * n + head] != 0 {
                d.malformed.push(Violation::DuplicateEdge {
                    u: tail.min(head),
                    v: tail.max(head),
                });
            } else {
                d.m[tail * n + head] = weight;
                d.m[head * n + tail] = -weight;
            }
        }
        d
    }

    /// Like [`Diagram::from_edges`] but rejects anything that is not a valid diagram.
    pub fn try_from_edges<I>(n: usize, edges: I) -> Result<Self, Vec<Violation>>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let d = Diagram::from_edges(n, edges);
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(v)
        }
    }

    /// Builds a diagram from a signed weight matrix in row-major order.
    ///
    /// # Panics
    /// If the matrix is not antisymmetric or has a non-zero diagonal.
    pub fn from_signed_matrix(n: usize, m: Vec<i64>) -> Self {
        assert_eq!(m.len(), n * n);
        for i in 0..n {
            assert_eq!(m[i * n + i], 0, "non-zero diagonal");
            for j in 0..n {
                assert_eq!(m[i * n + j], -m[j * n + i], "matrix is not antisymmetric");
            }
        }
        Diagram {
            n,
            m,
            names: None,
            malformed: Vec::new(),
        }
    }

    pub fn with_names(mut self, names: VertexNames) -> Self {
        assert_eq!(names.ids.len(), self.n);
        assert_eq!(names.labels.len(), self.n);
        self.names = Some(Arc::new(names));
        self
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    pub fn names(&self) -> Option<&VertexNames> {
        self.names.as_deref()
    }

    /// External id of `v`, falling back to its index.
    pub fn vertex_id(&self, v: VertexId) -> String {
        match &self.names {
            Some(names) => names.ids[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// Signed weight of the pair: positive for `i -> j`, negative for `j -> i`.
    #[inline]
    pub fn signed(&self, i: VertexId, j: VertexId) -> i64 {
        self.m[i * self.n + j]
    }

    /// Weight of the edge joining `i` and `j` regardless of direction, 0 if none.
    #[inline]
    pub fn weight(&self, i: VertexId, j: VertexId) -> u64 {
        self.signed(i, j).unsigned_abs()
    }

    #[inline]
    pub fn has_arrow(&self, i: VertexId, j: VertexId) -> bool {
        self.signed(i, j) > 0
    }

    #[inline]
    pub fn adjacent(&self, i: VertexId, j: VertexId) -> bool {
        self.signed(i, j) != 0
    }

    pub fn signed_matrix(&self) -> &[i64] {
        &self.m
    }

    /// All edges ordered by `(tail, head)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| {
            (0..n).filter_map(move |j| {
                let w = self.m[i * n + j];
                (w > 0).then_some(Edge {
                    tail: i,
                    head: j,
                    weight: w as u64,
                })
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.m.iter().filter(|&&w| w > 0).count()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let row = &self.m[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter_map(|(u, &w)| (w != 0).then_some(u))
    }

    /// Number of neighbours in the underlying graph.
    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    /// Number of neighbours with an arrow into `v`.
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.m[v * self.n..(v + 1) * self.n].iter().filter(|&&w| w < 0).count()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.degree(v) - self.in_degree(v)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.m.iter().all(|&w| w.abs() <= 1)
    }

    pub fn max_weight(&self) -> u64 {
        self.m.iter().map(|w| w.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    pub fn underlying(&self) -> UnderlyingGraph {
        UnderlyingGraph {
            n: self.n,
            w: self.m.iter().map(|w| w.unsigned_abs()).collect(),
        }
    }

    /// Full sub-diagram on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[VertexId]) -> Diagram {
        let k = vertices.len();
        let mut m = vec![0; k * k];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                m[a * k + b] = self.signed(u, v);
            }
        }
        Diagram {
            n: k,
            m,
            names: None,
            malformed: Vec::new(),
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Diagram {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut m = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[perm[i] * n + perm[j]] = self.m[i * n + j];
            }
        }
        let names = self.names.as_ref().map(|names| {
            let mut ids = vec![String::new(); n];
            let mut labels = vec![None; n];
            for v in 0..n {
                ids[perm[v]] = names.ids[v].clone();
                labels[perm[v]] = names.labels[v].clone();
            }
            Arc::new(VertexNames { ids, labels })
        });
        Diagram {
            n,
            m,
            names,
            malformed: self.malformed.clone(),
        }
    }

    /// Every violated diagram invariant; empty exactly when this is a diagram.
    ///
    /// The cycle condition is checked on a spanning forest: each vertex gets the
    /// square class of the weight product along its tree path, and a non-tree
    /// edge closes a non-square cycle exactly when its own square class differs
    /// from the product of the classes of its endpoints. Square classes form a
    /// vector space over GF(2), so checking the fundamental cycles covers every
    /// cycle.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.malformed.clone();
        let n = self.n;
        let mut class: Vec<Option<SquareClass>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if class[root].is_some() {
                continue;
            }
            class[root] = Some(SquareClass::one());
            let mut queue = VecDeque::from([root]);
            let mut order = Vec::new();
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for u in self.neighbors(v) {
                    if class[u].is_none() {
                        let c = class[v].as_ref().unwrap().times(&SquareClass::of(self.weight(v, u)));
                        class[u] = Some(c);
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        queue.push_back(u);
                    }
                }
            }
            for &v in &order {
                for u in self.neighbors(v) {
                    if u <= v || parent[u] == v || parent[v] == u {
                        continue;
                    }
                    let expected = class[v].as_ref().unwrap().times(class[u].as_ref().unwrap());
                    if expected != SquareClass::of(self.weight(v, u)) {
                        let cycle = tree_cycle(&parent, &depth, v, u);
                        let product = cycle_product(self, &cycle);
                        out.push(Violation::CycleNotSquare { cycle, product });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Mutation at `k`.
    pub fn mutate(&self, k: VertexId) -> Result<Diagram, MutationError> {
        let n = self.n;
        if k >= n {
            return Err(MutationError::UnknownVertex(k));
        }
        if !self.malformed.is_empty() {
            return Err(MutationError::Malformed);
        }
        let mut out = self.m.clone();
        let ins: Vec<(usize, i64)> = (0..n).map(|i| (i, self.m[i * n + k])).filter(|&(_, b)| b > 0).collect();
        let outs: Vec<(usize, i64)> = (0..n).map(|j| (j, self.m[k * n + j])).filter(|&(_, b)| b > 0).collect();
        for &(i, a) in &ins {
            for &(j, b) in &outs {
                let ab = a.checked_mul(b).ok_or(MutationError::Overflow { i, j })?;
                let c = self.m[i * n + j];
                let new = if c == 0 {
                    ab
                } else {
                    let cw = c.abs();
                    let product = (ab as u128) * (cw as u128);
                    let root = isqrt_exact(product).ok_or(MutationError::NotSquare { i, j, product })?;
                    let root = i64::try_from(root).map_err(|_| MutationError::Overflow { i, j })?;
                    if c > 0 {
                        ab.checked_add(cw)
                            .and_then(|s| s.checked_add(2 * root))
                            .ok_or(MutationError::Overflow { i, j })?
                    } else {
                        let diff = ab + cw - 2 * root;
                        if diff < 0 {
                            return Err(MutationError::NegativeWeight { i, j });
                        }
                        match ab.cmp(&cw) {
                            std::cmp::Ordering::Greater => diff,
                            std::cmp::Ordering::Less => -diff,
                            std::cmp::Ordering::Equal => {
                                debug_assert_eq!(diff, 0);
                                0
                            }
                        }
                    }
                };
                out[i * n + j] = new;
                out[j * n + i] = -new;
            }
        }
        for v in 0..n {
            out[k * n + v] = -self.m[k * n + v];
            out[v * n + k] = -self.m[v * n + k];
        }
        Ok(Diagram {
            n,
            m: out,
            names: self.names.clone(),
            malformed: Vec::new(),
        })
    }

    /// Applies mutations left to right.
    pub fn mutate_seq(&self, ks: &[VertexId]) -> Result<Diagram, MutationError> {
        let mut d = self.clone();
        for &k in ks {
            d = d.mutate(k)?;
        }
        Ok(d)
    }

    /// Vertex sets whose induced sub-graph is a cycle, each listed in cyclic order
    /// starting from its smallest vertex.
    pub fn chordless_cycles(&self) -> Vec<Vec<VertexId>> {
        chordless_cycles_with(self.n, |u, v| self.adjacent(u, v))
    }

    /// Chordless cycles of the graph with the `excluded` pairs removed.
    pub fn chordless_cycles_without(&self, excluded: &[(VertexId, VertexId)]) -> Vec<Vec<VertexId>> {
        chordless_cycles_with(self.n, |u, v| {
            self.adjacent(u, v) && !excluded.iter().any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
        })
    }

    /// True when the cycle (given in cyclic order) is a directed cycle.
    pub fn is_oriented_cycle(&self, cycle: &[VertexId]) -> bool {
        let len = cycle.len();
        let forward = (0..len).all(|i| self.has_arrow(cycle[i], cycle[(i + 1) % len]));
        let backward = (0..len).all(|i| self.has_arrow(cycle[(i + 1) % len], cycle[i]));
        forward || backward
    }

    pub fn is_cyclically_oriented(&self) -> bool {
        self.chordless_cycles().iter().all(|c| self.is_oriented_cycle(c))
    }

    /// Cyclic orientation of the diagram with the `excluded` pairs deleted.
    pub fn is_cyclically_oriented_without(&self, excluded: &[(VertexId, VertexId)]) -> bool {
        self.chordless_cycles_without(excluded)
            .iter()
            .all(|c| self.is_oriented_cycle(c))
    }

    /// Breadth-first distances in the underlying graph from any of `sources`.
    pub fn distances_from(&self, sources: &[VertexId]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for u in self.neighbors(v) {
                if dist[u].is_none() {
                    dist[u] = Some(dv + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// A shortest path in the underlying graph from any of `from` to any of `to`.
    pub fn shortest_path(&self, from: &[VertexId], to: &[VertexId]) -> Option<Vec<VertexId>> {
        let dist = self.distances_from(to);
        let start = from
            .iter()
            .copied()
            .filter(|&v| dist[v].is_some())
            .min_by_key(|&v| (dist[v].unwrap(), v))?;
        let mut path = vec![start];
        let mut cur = start;
        while dist[cur].unwrap() > 0 {
            let d = dist[cur].unwrap();
            cur = self
                .neighbors(cur)
                .find(|&u| dist[u] == Some(d - 1))
                .expect("distance labels are consistent");
            path.push(cur);
        }
        Some(path)
    }

    /// Connected components of the underlying graph after deleting `removed`.
    pub fn components_without(&self, removed: &[VertexId]) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        for &r in removed {
            seen[r] = true;
        }
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

fn cycle_product(d: &Diagram, cycle: &[usize]) -> u128 {
    let len = cycle.len();
    (0..len).fold(1u128, |acc, i| {
        acc.saturating_mul(d.weight(cycle[i], cycle[(i + 1) % len]) as u128)
    })
}

/// Induced cycles of an undirected graph given by an adjacency predicate.
///
/// Each cycle is found once, from its smallest vertex, by growing induced
/// paths through larger vertices.
pub fn chordless_cycles_with<F>(n: usize, adj: F) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> bool,
{
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| u != v && adj(v, u)).collect())
        .collect();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    // blocked[v] counts path vertices, other than the current end, adjacent to v.
    let mut blocked = vec![0u32; n];
    for s in 0..n {
        on_path[s] = true;
        for &p1 in &nbrs[s] {
            if p1 < s {
                continue;
            }
            on_path[p1] = true;
            let mut path = vec![s, p1];
            extend_cycles(&nbrs, &mut path, &mut on_path, &mut blocked, &mut out);
            on_path[p1] = false;
        }
        on_path[s] = false;
    }
    out
}

fn extend_cycles(
    nbrs: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    blocked: &mut [u32],
    out: &mut Vec<Vec<usize>>,
) {
    let s = path[0];
    let last = *path.last().unwrap();
    let prev = path[path.len() - 2];
    // prev becomes an interior vertex relative to the next extension, except s
    // which is handled separately as the closing vertex.
    if prev != s {
        for &u in &nbrs[prev] {
            blocked[u] += 1;
        }
    }
    for &v in &nbrs[last] {
        if v <= s || on_path[v] || blocked[v] > 0 {
            continue;
        }
        let closes = nbrs[s].contains(&v);
        if closes {
            if path[1] < v {
                let mut cycle = path.clone();
                cycle.push(v);
                out.push(cycle);
            }
            continue;
        }
        on_path[v] = true;
        path.push(v);
        extend_cycles(nbrs, path, on_path, blocked, out);
        path.pop();
        on_path[v] = false;
    }
    if prev != s {
        for &u in &nbrs[prev] {
            blocked[u] -= 1;
        }
    }
}

/// Undirected weighted graph underlying a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnderlyingGraph {
    n: usize,
    w: Vec<u64>,
}

impl UnderlyingGraph {
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut w = vec![0; n * n];
        for (a, b, wt) in edges {
            w[a * n + b] = wt;
            w[b * n + a] = wt;
        }
        UnderlyingGraph { n, w }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, a: usize, b: usize) -> u64 {
        self.w[a * self.n + b]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&u| self.w[v * n + u] != 0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges `(a, b, weight)` with `a < b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| {
            (a + 1..n).filter_map(move |b| {
                let w = self.w[a * n + b];
                (w != 0).then_some((a, b, w))
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_sets(d: &Diagram) -> Vec<Vec<usize>> {
        let mut c: Vec<Vec<usize>> = d
            .chordless_cycles()
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        c.sort();
        c
    }

    #[test]
    fn chordless_cycles_skip_chorded_square() {
        let d = Diagram::from_edges(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 0, 1)]);
        assert_eq!(cycle_sets(&d), vec![vec![0, 1, 2], vec![0, 2, 3]]);
    }

    #[test]
    fn chordless_cycles_of_wheel() {
        // Hub 0 with rim 1..=4.
        let d = Diagram::from_edges(
            5,
            [
                (0, 1, 1),
                (0, 2, 1),
                (0, 3, 1),
                (0, 4, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (4, 1, 1),
            ],
        );
        let c = cycle_sets(&d);
        assert_eq!(c.len(), 5);
        assert!(c.contains(&vec![1, 2, 3, 4]));
    }

    #[test]
    fn tree_cycle_joins_paths() {
        let parent = [usize::MAX, 0, 0, 1, 2];
        let depth = [0, 1, 1, 2, 2];
        assert_eq!(tree_cycle(&parent, &depth, 3, 4), vec![3, 1, 0, 2, 4]);
    }
}
