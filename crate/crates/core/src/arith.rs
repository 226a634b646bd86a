//! Exact integer helpers.

/// Floor of the square root.
pub fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= x) {
        r += 1;
    }
    r
}

/// The square root of `x` if `x` is a perfect square.
pub fn isqrt_exact(x: u128) -> Option<u128> {
    let r = isqrt(x);
    (r * r == x).then_some(r)
}

/// A positive integer modulo squares, stored as the sorted primes of odd exponent.
///
/// Trial division stops at 2^20; a larger cofactor is kept as one opaque atom
/// (removed entirely when it is itself a square).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareClass(Vec<u64>);

impl SquareClass {
    pub fn one() -> Self {
        SquareClass(Vec::new())
    }

    pub fn of(mut w: u64) -> Self {
        let mut primes = Vec::new();
        let mut p = 2u64;
        while p * p <= w && p < (1 << 20) {
            let mut odd = false;
            while w.is_multiple_of(p) {
                w /= p;
                odd = !odd;
            }
            if odd {
                primes.push(p);
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if w > 1 && isqrt_exact(w as u128).is_none() {
            primes.push(w);
        }
        SquareClass(primes)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Class of the product (symmetric difference of prime sets).
    pub fn times(&self, other: &SquareClass) -> SquareClass {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SquareClass(out)
    }

    /// Squarefree representative, saturating on overflow.
    pub fn value(&self) -> u64 {
        self.0.iter().fold(1u64, |acc, &p| acc.saturating_mul(p))
    }
}
