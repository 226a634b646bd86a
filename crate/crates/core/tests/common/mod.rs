//! Exchange-matrix mutation, written independently of the crate's own
//! mutation code and used as its oracle.
#![allow(dead_code, clippy::needless_range_loop)]

use mutclass_core::Diagram;
use rand::Rng;

pub type Matrix = Vec<Vec<i64>>;

pub fn matrix_mutate(b: &Matrix, k: usize) -> Matrix {
    let n = b.len();
    let mut out = b.clone();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
            };
        }
    }
    out
}

/// Edge `i -> j` when `b[i][j] > 0`, weight `b[i][j] * -b[j][i]`.
pub fn diagram_of(b: &Matrix) -> Diagram {
    let n = b.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if b[i][j] > 0 {
                edges.push((i, j, b[i][j] * -b[j][i]));
            }
        }
    }
    Diagram::from_edges(n, edges)
}

fn squarefree(mut w: u64) -> u64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= w {
        while w.is_multiple_of(p * p) {
            w /= p * p;
        }
        if w.is_multiple_of(p) {
            out *= p;
            w /= p;
        }
        p += 1;
    }
    out * w
}

fn isqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r.checked_mul(r) == Some(x)).then_some(r)
}

/// A skew-symmetrizable matrix realizing `d`, built from the symmetrizer that
/// gives each vertex the square class reached along a spanning forest.
pub fn realize(d: &Diagram) -> Option<Matrix> {
    let n = d.vertex_count();
    let mut sym: Vec<Option<u64>> = vec![None; n];
    for root in 0..n {
        if sym[root].is_some() {
            continue;
        }
        sym[root] = Some(1);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for u in d.neighbors(v) {
                if sym[u].is_none() {
                    sym[u] = Some(squarefree(sym[v].unwrap() * squarefree(d.weight(v, u))));
                    stack.push(u);
                }
            }
        }
    }
    let s: Vec<u64> = sym.into_iter().map(Option::unwrap).collect();
    let mut b = vec![vec![0i64; n]; n];
    for e in d.edges() {
        let (i, j, w) = (e.tail, e.head, e.weight);
        // d_i |b_ij| = d_j |b_ji| and |b_ij| |b_ji| = w
        let num = w * s[j];
        if !num.is_multiple_of(s[i]) {
            return None;
        }
        let bij = isqrt(num / s[i])?;
        if w % bij != 0 {
            return None;
        }
        b[i][j] = bij as i64;
        b[j][i] = -((w / bij) as i64);
    }
    Some(b)
}

/// `b_ij = s_ij d_j` for a random skew-symmetric `s` and symmetrizer `d`.
pub fn random_skew_symmetrizable<R: Rng>(n: usize, rng: &mut R) -> Matrix {
    let d: Vec<i64> = (0..n).map(|_| [1, 1, 2, 4][rng.random_range(0..4)]).collect();
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = rng.random_range(-1i64..=1);
            b[i][j] = s * d[j];
            b[j][i] = -s * d[i];
        }
    }
    b
}
