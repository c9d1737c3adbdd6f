//! Degenerate Stirling polynomials of the second kind `S2_l(n, k | x)`,
//! the EGF coefficients of
//!
//! ```text
//! (1 + lt)^(x/l) ((1 + lt)^(1/l) - 1)^k / k!
//! ```
//!
//! [`deg_stirling2`] is the primary route; [`deg_stirling2_via_s1`] and
//! [`deg_stirling2_gf`] compute the same polynomials independently.

use crate::degenerate::deg_falling;
use crate::difference::delta_power;
use crate::gf_oracle::{self, SeriesFamily};
use crate::poly::MultiPoly;
use crate::rational::{factorial, from_bigint, int, pascal_row, sign};
use crate::stirling::stirling1;

/// Alternating binomial sum over shifted λ-binomials:
/// `(n!/k!) sum_l C(k, l) (-1)^(k-l) (l + x choose n)_l`.
///
/// The `n!` cancels against the binomial's `1/n!`, leaving
/// `(1/k!) sum_l C(k, l) (-1)^(k-l) (x + l)_{n,l}`.
pub fn deg_stirling2(n: u32, k: u32) -> MultiPoly {
    if n < k {
        return MultiPoly::zero();
    }
    let row = pascal_row(k as usize);
    let sum: MultiPoly = (0..=k)
        .map(|l| {
            let base = &MultiPoly::x() + &MultiPoly::from_int(l as i64);
            deg_falling(&base, n).scale(&(&row[l as usize] * sign(k - l)))
        })
        .sum();
    sum.scale(&from_bigint(factorial(k)).recip())
}

/// `sum_m (1/k!) Δ^k x^m l^(n-m) S1(n, m)`.
pub fn deg_stirling2_via_s1(n: u32, k: u32) -> MultiPoly {
    if n < k {
        return MultiPoly::zero();
    }
    let inv_kfact = from_bigint(factorial(k)).recip();
    (0..=n)
        .map(|m| {
            let s1 = stirling1(n, m);
            delta_power(k, m).shift(0, n - m).scale(&(&s1 * &inv_kfact))
        })
        .sum()
}

/// Coefficients `c_k ..= c_{n_max}` of the defining generating function.
pub fn deg_stirling2_gf(n_max: u32, k: u32) -> Vec<MultiPoly> {
    let coeffs = gf_oracle::coefficients(SeriesFamily::DegStirling2 { k }, n_max as usize)
        .expect("degenerate Stirling family takes any k");
    coeffs.into_iter().skip(k as usize).collect()
}

/// Right-hand side of the three-term recurrence
/// `S2_l(n+1, k | x) = (x + k - n l) S2_l(n, k | x) + S2_l(n, k-1 | x)`.
pub fn recurrence_rhs(n: u32, k: u32, at: impl Fn(u32, u32) -> MultiPoly) -> MultiPoly {
    let factor = &(&MultiPoly::x() + &MultiPoly::from_int(k as i64))
        - &MultiPoly::monomial(0, 1, int(n as i64));
    let lower = if k == 0 {
        MultiPoly::zero()
    } else {
        at(n, k - 1)
    };
    &(&factor * &at(n, k)) + &lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stirling::{stirling2, stirling2_poly};

    fn at0(p: &MultiPoly) -> MultiPoly {
        p.specialize(Some(&int(0)), None)
    }

    #[test]
    fn closed_form_examples() {
        assert!(deg_stirling2(1, 2).is_zero());
        assert_eq!(at0(&deg_stirling2(2, 1)).to_string(), "1 - l");
        for n in 0..=8 {
            for k in 0..=8 {
                let v = deg_stirling2(n, k).eval(&int(0), &int(0));
                assert_eq!(v, stirling2(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn via_s1_examples() {
        assert_eq!(at0(&deg_stirling2_via_s1(2, 1)).to_string(), "1 - l");
        assert!(deg_stirling2_via_s1(1, 2).is_zero());
        assert!(deg_stirling2_via_s1(3, 3).is_one());
        assert_eq!(deg_stirling2_via_s1(3, 3), deg_stirling2(3, 3));
    }

    #[test]
    fn gf_examples() {
        let col0 = deg_stirling2_gf(6, 0);
        for (n, c) in col0.iter().enumerate() {
            assert_eq!(*c, deg_falling(&MultiPoly::x(), n as u32));
        }
        let col1 = deg_stirling2_gf(2, 1);
        assert_eq!(at0(&col1[1]).to_string(), "1 - l");
        for k in 0..=6 {
            assert!(deg_stirling2_gf(k, k)[0].is_one(), "k={k}");
        }
        assert!(deg_stirling2_gf(2, 4).is_empty());
    }

    #[test]
    fn boundary_rows() {
        for n in 0..=8 {
            assert_eq!(deg_stirling2(n, 0), deg_falling(&MultiPoly::x(), n));
            assert!(deg_stirling2(n, n).is_one());
        }
    }

    #[test]
    fn recurrence_small() {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(
                    deg_stirling2(n + 1, k),
                    recurrence_rhs(n, k, deg_stirling2),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn lambda_zero_is_stirling_poly() {
        for n in 0..=8 {
            for k in 0..=n {
                let p = deg_stirling2(n, k).specialize(None, Some(&int(0)));
                assert_eq!(p, stirling2_poly(n, k));
            }
        }
    }
}
