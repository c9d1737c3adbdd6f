//! r-Whitney numbers of the second kind `W_{m,r}(n, k)` and their degenerate
//! analogues `W_{m,r}(n, k | l)`, the EGF coefficients of
//!
//! ```text
//! (1 + lt)^(r/l) ((1 + lt)^(m/l) - 1)^k / (m^k k!)
//! ```
//!
//! The closed form as it is usually printed, `(n!/k!) sum_l C(k, l) (-1)^(k-l)
//! (ml + r choose n)_l`, lacks the `1/m^k` carried by the generating function.
//! [`deg_whitney`] includes that factor; [`deg_whitney_unnormalized`] keeps
//! the printed variant so the discrepancy stays checkable.

use std::fmt;

use num_traits::Zero;

use crate::degenerate::deg_falling;
use crate::difference::delta_power_at;
use crate::error::{Error, Result};
use crate::gf_oracle::{self, SeriesFamily};
use crate::poly::MultiPoly;
use crate::rational::{factorial, from_bigint, int, pascal_row, ratio, rpow, sign, Rational};
use crate::stirling::{falling_factorial, stirling1, stirling2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WhitneyParams {
    m: u32,
    r: u32,
}

impl WhitneyParams {
    pub fn new(m: u32, r: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parameter("m must be at least 1".into()));
        }
        Ok(Self { m, r })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    fn m_q(&self) -> Rational {
        int(self.m as i64)
    }

    fn r_q(&self) -> Rational {
        int(self.r as i64)
    }

    /// `1 / (m^k k!)`
    fn norm(&self, k: u32) -> Rational {
        (rpow(&self.m_q(), k) * from_bigint(factorial(k))).recip()
    }
}

impl fmt::Display for WhitneyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} r={}", self.m, self.r)
    }
}

/// `W_{m,r}(n, k) = sum_{i=k}^{n} C(n, i) r^(n-i) S2(i, k) m^(i-k)`.
pub fn whitney(n: u32, k: u32, p: WhitneyParams) -> Rational {
    if n < k {
        return Rational::zero();
    }
    let row = pascal_row(n as usize);
    (k..=n)
        .map(|i| &row[i as usize] * rpow(&p.r_q(), n - i) * stirling2(i, k) * rpow(&p.m_q(), i - k))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `W_{m,r}(n, k) = m^(n-k) (1/k!) Δ^k (r/m)^n`, with the difference taken
/// over the rational base points `l + r/m`.
pub fn whitney_via_delta(n: u32, k: u32, p: WhitneyParams) -> Rational {
    if n < k {
        return Rational::zero();
    }
    let point = ratio(p.r as i64, p.m as i64);
    rpow(&p.m_q(), n - k) * delta_power_at(k, n, &point) / from_bigint(factorial(k))
}

/// Both sides of `(mx + r)^n = sum_k m^k W_{m,r}(n, k) (x)_k`.
pub fn whitney_basis_identity(n: u32, p: WhitneyParams) -> (MultiPoly, MultiPoly) {
    let linear = &MultiPoly::x().scale(&p.m_q()) + &MultiPoly::constant(p.r_q());
    let lhs = linear.pow(n);
    let rhs = (0..=n)
        .map(|k| falling_factorial(k).scale(&(rpow(&p.m_q(), k) * whitney(n, k, p))))
        .sum();
    (lhs, rhs)
}

/// `W_{m,r}(n, k | l) = (1/(m^k k!)) sum_l C(k, l) (-1)^(k-l) (ml + r)_{n,l}`,
/// a polynomial in `l` only.
pub fn deg_whitney(n: u32, k: u32, p: WhitneyParams) -> MultiPoly {
    if n < k {
        return MultiPoly::zero();
    }
    deg_whitney_sum(n, k, p).scale(&p.norm(k))
}

/// The closed form without the `1/m^k` factor. Agrees with [`deg_whitney`]
/// only when `m = 1` or `k = 0`.
pub fn deg_whitney_unnormalized(n: u32, k: u32, p: WhitneyParams) -> MultiPoly {
    if n < k {
        return MultiPoly::zero();
    }
    deg_whitney_sum(n, k, p).scale(&from_bigint(factorial(k)).recip())
}

fn deg_whitney_sum(n: u32, k: u32, p: WhitneyParams) -> MultiPoly {
    let row = pascal_row(k as usize);
    (0..=k)
        .map(|l| {
            let base = MultiPoly::from_int((p.m * l + p.r) as i64);
            deg_falling(&base, n).scale(&(&row[l as usize] * sign(k - l)))
        })
        .sum()
}

/// `(1/(k! m^k)) sum_j l^(n-j) S1(n, j) m^j Δ^k (r/m)^j`.
pub fn deg_whitney_via_s1(n: u32, k: u32, p: WhitneyParams) -> MultiPoly {
    if n < k {
        return MultiPoly::zero();
    }
    let point = ratio(p.r as i64, p.m as i64);
    let norm = p.norm(k);
    MultiPoly::from_terms((0..=n).map(|j| {
        let c = stirling1(n, j) * rpow(&p.m_q(), j) * delta_power_at(k, j, &point) * &norm;
        ((0, n - j), c)
    }))
}

/// Coefficients `c_k ..= c_{n_max}` of the defining generating function.
pub fn deg_whitney_gf(n_max: u32, k: u32, p: WhitneyParams) -> Vec<MultiPoly> {
    let fam = SeriesFamily::DegWhitney { k, m: p.m, r: p.r };
    gf_oracle::coefficients(fam, n_max as usize)
        .expect("parameters already validated")
        .into_iter()
        .skip(k as usize)
        .collect()
}

/// Right-hand side of `W(n+1, k) = (r + mk - nl) W(n, k) + W(n, k-1)`; pass
/// `with_lambda = false` for the classical recurrence.
pub fn recurrence_rhs(
    n: u32,
    k: u32,
    p: WhitneyParams,
    with_lambda: bool,
    at: impl Fn(u32, u32) -> MultiPoly,
) -> MultiPoly {
    let mut factor = MultiPoly::from_int((p.r + p.m * k) as i64);
    if with_lambda {
        factor -= &MultiPoly::monomial(0, 1, int(n as i64));
    }
    let lower = if k == 0 {
        MultiPoly::zero()
    } else {
        at(n, k - 1)
    };
    &(&factor * &at(n, k)) + &lower
}
