//! Bernoulli and Euler polynomials, their Carlitz degenerate analogues, and
//! higher-order degenerate Euler polynomials.

use num_traits::Zero;

use crate::deg_stirling::deg_stirling2;
use crate::degenerate::{build_deg_power, deg_falling};
use crate::egf::EgfSeries;
use crate::poly::MultiPoly;
use crate::rational::{binomial, factorial, from_bigint, ratio, rpow, sign, Rational};
use crate::stirling::stirling2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    Bernoulli,
    Euler,
    DegBernoulli,
    /// Higher-order degenerate Euler polynomials of order `r >= 1`.
    DegEuler {
        r: u32,
    },
}

/// `values[n]` for `n = 0..=n_max`, all read off one series built at
/// truncation order `n_max + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    family: PolyFamily,
    values: Vec<MultiPoly>,
}

impl PolySequence {
    pub fn build(family: PolyFamily, n_max: u32) -> Self {
        let order = n_max as usize + 1;
        let series = match family {
            PolyFamily::Bernoulli => bernoulli_series(order),
            PolyFamily::Euler => euler_series(order),
            PolyFamily::DegBernoulli => deg_bernoulli_series(order),
            PolyFamily::DegEuler { r } => {
                assert!(r >= 1, "degenerate Euler order must be positive");
                deg_euler_series(order, r)
            }
        };
        let mut values = series.into_coeffs();
        values.truncate(n_max as usize + 1);
        Self { family, values }
    }

    pub fn family(&self) -> PolyFamily {
        self.family
    }

    pub fn values(&self) -> &[MultiPoly] {
        &self.values
    }

    pub fn get(&self, n: u32) -> Option<&MultiPoly> {
        self.values.get(n as usize)
    }
}

fn x_exponential(order: usize) -> EgfSeries {
    EgfSeries::exp_scaled(order, &MultiPoly::x())
}

fn bernoulli_series(order: usize) -> EgfSeries {
    let denom = EgfSeries::from_fn(order, |n| MultiPoly::constant(ratio(1, n as i64 + 1)));
    denom
        .inverse()
        .expect("constant term 1")
        .mul(&x_exponential(order))
        .expect("same order")
}

fn euler_series(order: usize) -> EgfSeries {
    let denom = EgfSeries::exp_t(order)
        .add(&EgfSeries::identity(order))
        .expect("same order")
        .scale(&ratio(1, 2));
    denom
        .inverse()
        .expect("constant term 1")
        .mul(&x_exponential(order))
        .expect("same order")
}

fn deg_bernoulli_series(order: usize) -> EgfSeries {
    // ((1 + lt)^(1/l) - 1)/t = sum_n (1)_{n+1,l}/(n+1) t^n/n!
    let one = MultiPoly::one();
    let denom = EgfSeries::from_fn(order, |n| {
        deg_falling(&one, n as u32 + 1).scale(&ratio(1, n as i64 + 1))
    });
    denom
        .inverse()
        .expect("constant term 1")
        .mul(&build_deg_power(&MultiPoly::x(), order))
        .expect("same order")
}

fn deg_euler_series(order: usize, r: u32) -> EgfSeries {
    let denom = EgfSeries::from_fn(order, |n| {
        let c = deg_falling(&MultiPoly::one(), n as u32);
        if n == 0 {
            c
        } else {
            c.scale(&ratio(1, 2))
        }
    });
    denom
        .inverse()
        .expect("constant term 1")
        .pow(r)
        .mul(&build_deg_power(&MultiPoly::x(), order))
        .expect("same order")
}

pub fn bernoulli_poly(n: u32) -> MultiPoly {
    take(PolySequence::build(PolyFamily::Bernoulli, n), n)
}

pub fn euler_poly(n: u32) -> MultiPoly {
    take(PolySequence::build(PolyFamily::Euler, n), n)
}

/// Carlitz degenerate Bernoulli polynomial `beta_{n,l}(x)`.
pub fn deg_bernoulli(n: u32) -> MultiPoly {
    take(PolySequence::build(PolyFamily::DegBernoulli, n), n)
}

/// Higher-order degenerate Euler polynomial `E^(r)_{n,l}(x)` from its
/// generating function; `r = 1` is the Carlitz degenerate Euler polynomial.
pub fn deg_euler_higher(n: u32, r: u32) -> MultiPoly {
    take(PolySequence::build(PolyFamily::DegEuler { r }, n), n)
}

fn take(seq: PolySequence, n: u32) -> MultiPoly {
    seq.values
        .into_iter()
        .nth(n as usize)
        .expect("sequence covers n")
}

/// `E_n = sum_l S2(n, l) 2^(-l) l! (-1)^l`.
pub fn euler_number_from_s2(n: u32) -> Rational {
    (0..=n)
        .map(|l| stirling2(n, l) * rpow(&ratio(1, 2), l) * from_bigint(factorial(l)) * sign(l))
        .fold(Rational::zero(), |a, b| a + b)
}

/// Expansion of `E^(r)_{n,l}(x)` in degenerate Stirling polynomials:
/// `sum_l C(r+l-1, l) 2^(-l) (-1)^l l! S2_l(n, l | x)`.
pub fn deg_euler_closed(n: u32, r: u32) -> MultiPoly {
    assert!(r >= 1, "degenerate Euler order must be positive");
    (0..=n)
        .map(|l| {
            let c = from_bigint(binomial(r + l - 1, l))
                * rpow(&ratio(1, 2), l)
                * sign(l)
                * from_bigint(factorial(l));
            deg_stirling2(n, l).scale(&c)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn at(p: &MultiPoly, x: Option<i64>, l: Option<i64>) -> MultiPoly {
        p.specialize(x.map(int).as_ref(), l.map(int).as_ref())
    }

    #[test]
    fn bernoulli_examples() {
        assert!(bernoulli_poly(0).is_one());
        assert_eq!(bernoulli_poly(1).to_string(), "x - 1/2");
        assert_eq!(at(&bernoulli_poly(2), Some(0), None).to_string(), "1/6");
        assert_eq!(bernoulli_poly(2).to_string(), "x^2 - x + 1/6");
    }

    #[test]
    fn euler_examples() {
        assert!(euler_poly(0).is_one());
        assert_eq!(euler_poly(1).to_string(), "x - 1/2");
        assert_eq!(at(&euler_poly(1), Some(0), None).to_string(), "-1/2");
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number_from_s2(0), int(1));
        assert_eq!(euler_number_from_s2(1), ratio(-1, 2));
        assert_eq!(euler_number_from_s2(2), int(0));
        assert_eq!(euler_number_from_s2(3), ratio(1, 4));
    }

    #[test]
    fn deg_bernoulli_examples() {
        assert!(deg_bernoulli(0).is_one());
        assert_eq!(
            at(&deg_bernoulli(1), Some(0), None).to_string(),
            "-1/2 + 1/2*l"
        );
        assert_eq!(at(&deg_bernoulli(2), Some(0), Some(0)).to_string(), "1/6");
    }

    #[test]
    fn deg_euler_examples() {
        for r in 1..=4 {
            assert!(deg_euler_higher(0, r).is_one());
            assert!(deg_euler_closed(0, r).is_one());
        }
        assert_eq!(deg_euler_higher(1, 1).to_string(), "x - 1/2");
        assert_eq!(
            at(&deg_euler_higher(1, 1), Some(0), Some(0)).to_string(),
            "-1/2"
        );
        assert!(deg_euler_higher(2, 1).has_lambda());
        assert_eq!(deg_euler_closed(1, 1).to_string(), "x - 1/2");
        assert_eq!(deg_euler_closed(4, 2), deg_euler_higher(4, 2));
    }

    #[test]
    fn sequence_starts_at_one() {
        for fam in [
            PolyFamily::Bernoulli,
            PolyFamily::Euler,
            PolyFamily::DegBernoulli,
            PolyFamily::DegEuler { r: 3 },
        ] {
            let s = PolySequence::build(fam, 5);
            assert_eq!(s.values().len(), 6);
            assert!(s.get(0).unwrap().is_one());
            assert_eq!(s.family(), fam);
        }
    }

    #[test]
    fn euler_denominator_inverse() {
        let denom = EgfSeries::exp_t(8)
            .add(&EgfSeries::identity(8))
            .unwrap()
            .scale(&ratio(1, 2));
        let gf = denom.inverse().unwrap();
        assert!(gf.mul(&denom).unwrap().is_identity());
    }
}
