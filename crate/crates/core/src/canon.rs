//! Canonical labeling of small weighted directed graphs.
//!
//! Colour refinement over (direction, weight)-typed adjacency, then a search
//! over individualizations of the first smallest non-singleton cell, keeping
//! the lexicographically least adjacency encoding.

use std::fmt;

use crate::diagram::{Diagram, UnderlyingGraph};
use crate::error::CanonError;

pub const DEFAULT_SIZE_LIMIT: usize = 20;

/// Relabeling-invariant encoding of a diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Box<[u8]>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CanonicalKey(")?;
        for b in self.0.iter() {
            write!(f, "{b:02x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0.iter() {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

/// Canonical key of a diagram (directions and weights respected).
pub fn canonical_key(d: &Diagram) -> Result<CanonicalKey, CanonError> {
    canonical_form(d).map(|(key, _)| key)
}

/// Canonical key together with the canonical permutation: vertex `v` of `d`
/// becomes vertex `perm[v]` of the canonical representative.
pub fn canonical_form(d: &Diagram) -> Result<(CanonicalKey, Vec<usize>), CanonError> {
    let n = d.vertex_count();
    check_size(n)?;
    let perm = canonical_permutation(n, d.signed_matrix());
    let key = encode(n, d.signed_matrix(), &perm);
    Ok((key, perm))
}

/// Canonical representative: `d` relabeled by its canonical permutation,
/// stripped of external names.
pub fn canonical_diagram(d: &Diagram) -> Result<(CanonicalKey, Diagram), CanonError> {
    let (key, perm) = canonical_form(d)?;
    Ok((key, d.relabel(&perm).without_names()))
}

/// Canonical key of an undirected weighted graph.
pub fn canonical_key_undirected(g: &UnderlyingGraph) -> Result<CanonicalKey, CanonError> {
    let n = g.vertex_count();
    check_size(n)?;
    let m: Vec<i64> = (0..n * n).map(|i| g.weight(i / n, i % n) as i64).collect();
    let perm = canonical_permutation(n, &m);
    Ok(encode(n, &m, &perm))
}

fn check_size(n: usize) -> Result<(), CanonError> {
    if n > DEFAULT_SIZE_LIMIT {
        return Err(CanonError::SizeLimitExceeded {
            size: n,
            limit: DEFAULT_SIZE_LIMIT,
        });
    }
    Ok(())
}

fn encode(n: usize, m: &[i64], perm: &[usize]) -> CanonicalKey {
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bytes = vec![n as u8];
    for a in 0..n {
        for b in 0..n {
            let w = m[inv[a] * n + inv[b]];
            if w > 0 {
                bytes.push(a as u8);
                bytes.push(b as u8);
                push_varint(&mut bytes, w.unsigned_abs());
            }
        }
    }
    CanonicalKey(bytes.into_boxed_slice())
}

fn push_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

/// Permutation whose relabeled matrix is least among all search leaves.
fn canonical_permutation(n: usize, m: &[i64]) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut colors = vec![0u32; n];
    refine(n, m, &mut colors);
    let mut best: Option<(Vec<i64>, Vec<usize>)> = None;
    search(n, m, colors, &mut best);
    best.unwrap().1
}

/// Equitable refinement: new colour = rank of (old colour, sorted neighbour profile).
fn refine(n: usize, m: &[i64], colors: &mut [u32]) {
    let mut cells = count_cells(colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, i64)>)> = (0..n)
            .map(|v| {
                let mut profile: Vec<(u32, i64)> = (0..n)
                    .filter(|&u| m[v * n + u] != 0)
                    .map(|u| (colors[u], m[v * n + u]))
                    .collect();
                profile.sort_unstable();
                (colors[v], profile)
            })
            .collect();
        let mut uniq: Vec<&(u32, Vec<(u32, i64)>)> = sigs.iter().collect();
        uniq.sort_unstable();
        uniq.dedup();
        for v in 0..n {
            colors[v] = uniq.binary_search(&&sigs[v]).unwrap() as u32;
        }
        let next = uniq.len();
        if next == cells {
            return;
        }
        cells = next;
    }
}

fn count_cells(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(n: usize, m: &[i64], colors: Vec<u32>, best: &mut Option<(Vec<i64>, Vec<usize>)>) {
    // Smallest non-singleton cell, ties broken by colour.
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = (0..n as u32)
        .filter(|&c| sizes[c as usize] > 1)
        .min_by_key(|&c| (sizes[c as usize], c));
    let Some(cell) = target else {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let enc = relabeled(n, m, &perm);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            *best = Some((enc, perm));
        }
        return;
    };
    let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &members {
        // Swapping two twins is an automorphism fixing every individualized
        // vertex, so their subtrees produce the same leaves.
        if tried.iter().any(|&u| are_twins(n, m, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(c == cell && u != v))
            .collect();
        refine(n, m, &mut next);
        search(n, m, next, best);
    }
}

fn are_twins(n: usize, m: &[i64], u: usize, v: usize) -> bool {
    if m[u * n + v] != m[v * n + u] {
        return false;
    }
    (0..n)
        .filter(|&w| w != u && w != v)
        .all(|w| m[u * n + w] == m[v * n + w])
}

fn relabeled(n: usize, m: &[i64], perm: &[usize]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            out[perm[i] * n + perm[j]] = m[i * n + j];
        }
    }
    out
}
