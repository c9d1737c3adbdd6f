//! Forward differences `Δf(x) = f(x + 1) - f(x)` and exact Newton forward
//! expansion of polynomials.
//!
//! The classical statement `Δ^k 0^n = S2(n, k)` only holds after dividing by
//! `k!`; [`delta_at_zero`] returns the raw difference `Δ^k 0^n` and callers
//! normalize with `1/k!` (for instance `Δ^2 0^3 = 6 = 2! * S2(3, 2)`).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{from_bigint, int, pascal_row, rpow, sign, Rational};
use crate::stirling::falling_factorial;

/// `Δ^k x^m = sum_l C(k, l) (-1)^(k-l) (x + l)^m` as a polynomial in `x`.
pub fn delta_power(k: u32, m: u32) -> MultiPoly {
    let outer = pascal_row(k as usize);
    let inner = pascal_row(m as usize);
    // Coefficient of x^j is C(m, j) * sum_l C(k, l) (-1)^(k-l) l^(m-j).
    MultiPoly::from_terms((0..=m).map(|j| {
        let s: Rational = (0..=k)
            .map(|l| &outer[l as usize] * sign(k - l) * rpow(&int(l as i64), m - j))
            .sum();
        ((j, 0), &inner[j as usize] * s)
    }))
}

/// `Δ^k 0^n`, the constant term of [`delta_power`]; `0^0 = 1`.
pub fn delta_at_zero(k: u32, n: u32) -> Rational {
    delta_power(k, n).coeff(0, 0)
}

/// `Δ^k t^m` evaluated at a rational point `t`, i.e.
/// `sum_l C(k, l) (-1)^(k-l) (t + l)^m`.
pub fn delta_power_at(k: u32, m: u32, point: &Rational) -> Rational {
    let row = pascal_row(k as usize);
    (0..=k)
        .map(|l| &row[l as usize] * sign(k - l) * rpow(&(point + int(l as i64)), m))
        .sum()
}

/// Applies `Δ` once to an arbitrary polynomial in `x` (l is carried along).
pub fn delta(f: &MultiPoly) -> MultiPoly {
    let shifted = shift_x(f, &Rational::from_integer(1.into()));
    &shifted - f
}

/// `f(x + h)`.
pub fn shift_x(f: &MultiPoly, h: &Rational) -> MultiPoly {
    let x_plus_h = &MultiPoly::x() + &MultiPoly::constant(h.clone());
    f.terms()
        .map(|(&(dx, dl), c)| x_plus_h.pow(dx).shift(0, dl).scale(c))
        .sum()
}

/// Forward differences of a polynomial at the origin: entry `k` is `Δ^k f(0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonExpansion {
    diffs: Vec<Rational>,
}

impl NewtonExpansion {
    pub fn diffs(&self) -> &[Rational] {
        &self.diffs
    }

    /// `sum_k C(x, k) Δ^k f(0)`, which for a polynomial `f` is `f` itself.
    pub fn reconstruct(&self) -> MultiPoly {
        self.diffs
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_zero())
            .map(|(k, d)| {
                let k = k as u32;
                falling_factorial(k).scale(&(d / from_bigint(crate::rational::factorial(k))))
            })
            .sum()
    }
}

/// Newton forward expansion of a polynomial in `x`. Evaluates `f` at
/// `0..=deg f` and takes iterated differences of those samples.
pub fn newton_expand(f: &MultiPoly) -> Result<NewtonExpansion> {
    if f.has_lambda() {
        return Err(Error::WrongVariable(f.to_string()));
    }
    let Some(deg) = f.degree_x() else {
        return Ok(NewtonExpansion { diffs: Vec::new() });
    };
    let zero = Rational::zero();
    let mut row: Vec<Rational> = (0..=deg).map(|i| f.eval(&int(i as i64), &zero)).collect();
    let mut diffs = Vec::with_capacity(row.len());
    while !row.is_empty() {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(NewtonExpansion { diffs })
}
