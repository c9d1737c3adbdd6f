//! λ-falling factorials, λ-binomials and the degenerate exponential
//! `(1 + lt)^(a/l)`.
//!
//! Nothing here ever divides by `l`: the degenerate exponential is built from
//! its polynomial EGF coefficients `(a)_{n,l}`, and the logarithmic route uses
//! `(a/l) log(1 + lt)`, whose coefficients `(-1)^(n-1) a l^(n-1) (n-1)!` are
//! polynomial after cancellation. Substituting `l = 0` is always legal.

use crate::egf::EgfSeries;
use crate::error::Result;
use crate::poly::MultiPoly;
use crate::rational::{factorial, from_bigint, int, Rational};

/// `(a)_{n,l} = a (a - l) (a - 2l) ... (a - (n-1)l)`; the empty product is 1.
pub fn deg_falling(a: &MultiPoly, n: u32) -> MultiPoly {
    let lam = MultiPoly::lambda();
    (0..n).fold(MultiPoly::one(), |acc, i| {
        &acc * &(a - &lam.scale(&int(i as i64)))
    })
}

/// `(a choose n)_l = (a)_{n,l} / n!`.
pub fn deg_binom(a: &MultiPoly, n: u32) -> MultiPoly {
    deg_falling(a, n).scale(&from_bigint(factorial(n)).recip())
}

/// The λ-analogue of `n!`: `(n)_l! = n (n - l) ... (n - (n-1)l) = (n)_{n,l}`.
pub fn lambda_factorial(n: u32) -> MultiPoly {
    deg_falling(&MultiPoly::from_int(n as i64), n)
}

/// `(1 + lt)^(a/l)` truncated at `order`, with `c_n = (a)_{n,l}`.
pub fn build_deg_power(a: &MultiPoly, order: usize) -> EgfSeries {
    let lam = MultiPoly::lambda();
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut cur = MultiPoly::one();
    for i in 0..=order {
        coeffs.push(cur.clone());
        cur = &cur * &(a - &lam.scale(&int(i as i64)));
    }
    EgfSeries::from_coeffs(coeffs)
}

/// `(a/l) log(1 + lt)` as an EGF: `c_0 = 0`, `c_n = (-1)^(n-1) a l^(n-1) (n-1)!`.
pub fn scaled_log_series(a: &MultiPoly, order: usize) -> EgfSeries {
    EgfSeries::from_fn(order, |n| {
        if n == 0 {
            return MultiPoly::zero();
        }
        let n = n as u32;
        let mut c = from_bigint(factorial(n - 1));
        if n.is_multiple_of(2) {
            c = -c;
        }
        a.shift(0, n - 1).scale(&c)
    })
}

/// `(1 + lt)^(a/l)` computed as `exp((a/l) log(1 + lt))`, independent of the
/// falling-factorial construction in [`build_deg_power`].
pub fn build_deg_power_log(a: &MultiPoly, order: usize) -> Result<EgfSeries> {
    scaled_log_series(a, order).exp()
}

/// Both sides of the λ-Vandermonde identity
/// `sum_m (y choose m)_l (x choose n-m)_l = (x + y choose n)_l`.
pub fn chu_vandermonde_lambda(xv: &MultiPoly, yv: &MultiPoly, n: u32) -> (MultiPoly, MultiPoly) {
    let lhs = (0..=n)
        .map(|m| &deg_binom(yv, m) * &deg_binom(xv, n - m))
        .sum();
    let rhs = deg_binom(&(xv + yv), n);
    (lhs, rhs)
}

/// Rational sample points `1/2, 3/2, -2/3, ...` used to check two-variable
/// identities on univariate slices. Returns `count` distinct values.
pub fn sample_points(count: usize) -> Vec<Rational> {
    (0..count as i64)
        .map(|i| {
            let num = if i % 2 == 0 { 2 * i + 1 } else { -(i + 1) };
            Rational::new(num.into(), (i % 3 + 2).into())
        })
        .collect()
}
