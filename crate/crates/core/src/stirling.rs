//! Signed Stirling numbers of the first kind, Stirling numbers of the second
//! kind, and the Stirling polynomials `S2(n, k | x)`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::MultiPoly;
use crate::rational::{from_bigint, pascal_row, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    First,
    Second,
}

/// A triangle of Stirling numbers grown row by row from the recurrences
///
/// ```text
/// S1(n+1, k) = S1(n, k-1) - n S1(n, k)
/// S2(n+1, k) = S2(n, k-1) + k S2(n, k)
/// ```
///
/// seeded with `S(0, 0) = 1`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        Self {
            kind,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn with_rows(kind: StirlingKind, n_max: u32) -> Self {
        let mut t = Self::new(kind);
        t.extend_to(n_max);
        t
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Largest `n` currently held.
    pub fn n_max(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn extend_to(&mut self, n_max: u32) {
        while self.rows.len() <= n_max as usize {
            let n = self.rows.len() - 1;
            let prev = &self.rows[n];
            let mut next = vec![BigInt::zero(); n + 2];
            for k in 1..=n + 1 {
                let left = &prev[k - 1];
                let same = prev.get(k).cloned().unwrap_or_default();
                next[k] = match self.kind {
                    StirlingKind::First => left - same * n,
                    StirlingKind::Second => left + same * k,
                };
            }
            self.rows.push(next);
        }
    }

    /// Entry `(n, k)`, or `None` when row `n` has not been built yet.
    pub fn get(&self, n: u32, k: u32) -> Option<Rational> {
        let row = self.rows.get(n as usize)?;
        Some(
            row.get(k as usize)
                .map_or_else(Rational::zero, |v| from_bigint(v.clone())),
        )
    }
}

fn cached(kind: StirlingKind, n: u32, k: u32) -> Rational {
    static FIRST: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    static SECOND: OnceLock<RwLock<StirlingTable>> = OnceLock::new();
    let lock = match kind {
        StirlingKind::First => &FIRST,
        StirlingKind::Second => &SECOND,
    }
    .get_or_init(|| RwLock::new(StirlingTable::new(kind)));

    if let Some(v) = lock.read().expect("stirling cache poisoned").get(n, k) {
        return v;
    }
    let mut table = lock.write().expect("stirling cache poisoned");
    table.extend_to(n);
    table.get(n, k).expect("row was just built")
}

/// Signed Stirling number of the first kind: the coefficient of `x^k` in
/// the falling factorial `x(x-1)...(x-n+1)`.
pub fn stirling1(n: u32, k: u32) -> Rational {
    cached(StirlingKind::First, n, k)
}

/// Number of partitions of an `n`-set into `k` nonempty blocks.
pub fn stirling2(n: u32, k: u32) -> Rational {
    cached(StirlingKind::Second, n, k)
}

/// `S2(n, k | x) = sum_{l=k}^{n} C(n, l) S2(l, k) x^(n-l)`, the EGF coefficient
/// of `e^(xt) (e^t - 1)^k / k!`. Zero when `n < k`.
pub fn stirling2_poly(n: u32, k: u32) -> MultiPoly {
    if n < k {
        return MultiPoly::zero();
    }
    let row = pascal_row(n as usize);
    MultiPoly::from_terms((k..=n).map(|l| ((n - l, 0), &row[l as usize] * stirling2(l, k))))
}

/// The classical falling factorial `(x)_n = x(x-1)...(x-n+1)`.
pub fn falling_factorial(n: u32) -> MultiPoly {
    (0..n).fold(MultiPoly::one(), |acc, i| {
        &acc * &(&MultiPoly::x() - &MultiPoly::from_int(i as i64))
    })
}

/// `(x)_n` expanded through the first-kind numbers, `sum_k S1(n, k) x^k`.
pub fn falling_factorial_from_s1(n: u32) -> MultiPoly {
    MultiPoly::from_terms((0..=n).map(|k| ((k, 0), stirling1(n, k))))
}
