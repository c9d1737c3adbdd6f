//! Generating-function oracle.
//!
//! Every family is rebuilt here from raw series arithmetic and the degenerate
//! exponential, without calling the closed forms and recurrences it is used
//! to check.

use std::fmt;

use crate::degenerate::build_deg_power;
use crate::egf::EgfSeries;
use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{factorial, from_bigint, int, ratio, Rational};

/// Largest truncation order the oracle accepts.
pub const MAX_ORDER: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesFamily {
    /// `(log(1 + t))^k / k!`
    Stirling1 { k: u32 },
    /// `(e^t - 1)^k / k!`
    Stirling2 { k: u32 },
    /// `e^(xt) (e^t - 1)^k / k!`
    Stirling2Poly { k: u32 },
    /// `(1 + lt)^(x/l) ((1 + lt)^(1/l) - 1)^k / k!`
    DegStirling2 { k: u32 },
    /// `t e^(xt) / (e^t - 1)`
    Bernoulli,
    /// `2 e^(xt) / (e^t + 1)`
    Euler,
    /// `t (1 + lt)^(x/l) / ((1 + lt)^(1/l) - 1)`
    DegBernoulli,
    /// `(2 / ((1 + lt)^(1/l) + 1))^r (1 + lt)^(x/l)`
    DegEuler { r: u32 },
    /// `e^(rt) (e^(mt) - 1)^k / (m^k k!)`
    Whitney { k: u32, m: u32, r: u32 },
    /// `(1 + lt)^(r/l) ((1 + lt)^(m/l) - 1)^k / (m^k k!)`
    DegWhitney { k: u32, m: u32, r: u32 },
}

impl SeriesFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Stirling1 { .. } => "stirling1_gf",
            Self::Stirling2 { .. } => "stirling2_gf",
            Self::Stirling2Poly { .. } => "stirling2_poly_gf",
            Self::DegStirling2 { .. } => "deg_stirling2_gf",
            Self::Bernoulli => "bernoulli_gf",
            Self::Euler => "euler_gf",
            Self::DegBernoulli => "deg_bernoulli_gf",
            Self::DegEuler { .. } => "deg_euler_r_gf",
            Self::Whitney { .. } => "whitney_gf",
            Self::DegWhitney { .. } => "deg_whitney_gf",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::DegEuler { r: 0 } => Err(Error::Parameter("order r must be at least 1".into())),
            Self::Whitney { m: 0, .. } | Self::DegWhitney { m: 0, .. } => {
                Err(Error::Parameter("m must be at least 1".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        match self {
            Self::Stirling1 { k }
            | Self::Stirling2 { k }
            | Self::Stirling2Poly { k }
            | Self::DegStirling2 { k } => write!(f, " k={k}"),
            Self::DegEuler { r } => write!(f, " r={r}"),
            Self::Whitney { k, m, r } | Self::DegWhitney { k, m, r } => {
                write!(f, " k={k} m={m} r={r}")
            }
            Self::Bernoulli | Self::Euler | Self::DegBernoulli => Ok(()),
        }
    }
}

fn inv_factorial(k: u32) -> Rational {
    from_bigint(factorial(k)).recip()
}

fn const_series(order: usize, f: impl Fn(usize) -> Rational) -> EgfSeries {
    EgfSeries::from_fn(order, |n| MultiPoly::constant(f(n)))
}

/// `(1 + lt)^(a/l) - 1`.
fn deg_power_minus_one(a: i64, order: usize) -> EgfSeries {
    build_deg_power(&MultiPoly::from_int(a), order)
        .sub(&EgfSeries::identity(order))
        .expect("same order")
}

pub fn build(family: SeriesFamily, order: usize) -> Result<EgfSeries> {
    family.validate()?;
    if order > MAX_ORDER {
        return Err(Error::Parameter(format!(
            "truncation order {order} exceeds {MAX_ORDER}"
        )));
    }
    let n = order;
    let one = || EgfSeries::identity(n);
    let exp_minus_one = || EgfSeries::exp_t(n).sub(&one()).expect("same order");
    let series = match family {
        SeriesFamily::Stirling1 { k } => {
            let log = const_series(n, |i| {
                if i == 0 {
                    return int(0);
                }
                let c = from_bigint(factorial(i as u32 - 1));
                if i % 2 == 0 {
                    -c
                } else {
                    c
                }
            });
            log.pow(k).scale(&inv_factorial(k))
        }
        SeriesFamily::Stirling2 { k } => exp_minus_one().pow(k).scale(&inv_factorial(k)),
        SeriesFamily::Stirling2Poly { k } => EgfSeries::exp_scaled(n, &MultiPoly::x())
            .mul(&exp_minus_one().pow(k))?
            .scale(&inv_factorial(k)),
        SeriesFamily::DegStirling2 { k } => build_deg_power(&MultiPoly::x(), n)
            .mul(&deg_power_minus_one(1, n).pow(k))?
            .scale(&inv_factorial(k)),
        SeriesFamily::Bernoulli => {
            // (e^t - 1)/t has EGF coefficients 1/(n+1).
            let denom = const_series(n, |i| ratio(1, i as i64 + 1));
            denom
                .inverse()?
                .mul(&EgfSeries::exp_scaled(n, &MultiPoly::x()))?
        }
        SeriesFamily::Euler => {
            let denom = const_series(n, |i| if i == 0 { int(1) } else { ratio(1, 2) });
            denom
                .inverse()?
                .mul(&EgfSeries::exp_scaled(n, &MultiPoly::x()))?
        }
        SeriesFamily::DegBernoulli => {
            // ((1 + lt)^(1/l) - 1)/t: shift the coefficients of (1 + lt)^(1/l) down by one.
            let full = build_deg_power(&MultiPoly::one(), n + 1);
            let denom =
                EgfSeries::from_fn(n, |i| full.coeffs()[i + 1].scale(&ratio(1, i as i64 + 1)));
            denom.inverse()?.mul(&build_deg_power(&MultiPoly::x(), n))?
        }
        SeriesFamily::DegEuler { r } => {
            let half = ratio(1, 2);
            let denom = build_deg_power(&MultiPoly::one(), n)
                .add(&one())?
                .scale(&half);
            denom
                .inverse()?
                .pow(r)
                .mul(&build_deg_power(&MultiPoly::x(), n))?
        }
        SeriesFamily::Whitney { k, m, r } => {
            let scale = inv_factorial(k) * num_traits::pow(int(m as i64), k as usize).recip();
            let emt = EgfSeries::exp_scaled(n, &MultiPoly::from_int(m as i64)).sub(&one())?;
            EgfSeries::exp_scaled(n, &MultiPoly::from_int(r as i64))
                .mul(&emt.pow(k))?
                .scale(&scale)
        }
        SeriesFamily::DegWhitney { k, m, r } => {
            let scale = inv_factorial(k) * num_traits::pow(int(m as i64), k as usize).recip();
            build_deg_power(&MultiPoly::from_int(r as i64), n)
                .mul(&deg_power_minus_one(m as i64, n).pow(k))?
                .scale(&scale)
        }
    };
    Ok(series)
}

/// `c_0 ..= c_order` of [`build`].
pub fn coefficients(family: SeriesFamily, order: usize) -> Result<Vec<MultiPoly>> {
    Ok(build(family, order)?.into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[MultiPoly]) -> Vec<String> {
        v.iter().map(|c| c.to_string()).collect()
    }

    fn at_x0(v: Vec<MultiPoly>) -> Vec<MultiPoly> {
        v.iter()
            .map(|c| c.specialize(Some(&int(0)), None))
            .collect()
    }

    #[test]
    fn build_examples() {
        assert!(build(SeriesFamily::Stirling2 { k: 0 }, 6)
            .unwrap()
            .is_identity());
        let s1 = coefficients(SeriesFamily::Stirling1 { k: 1 }, 3).unwrap();
        assert_eq!(strs(&s1), ["0", "1", "-1", "2"]);
        // Unscaled product for k = 1, m = 2, r = 1 has c_2 = 8 - 2l; after 1/(m k!) it is 4 - l.
        let w = coefficients(SeriesFamily::DegWhitney { k: 1, m: 2, r: 1 }, 2).unwrap();
        assert_eq!(w[2].scale(&int(2)).to_string(), "8 - 2*l");
        assert_eq!(w[2].to_string(), "4 - l");
    }

    #[test]
    fn coefficient_examples() {
        let b = at_x0(coefficients(SeriesFamily::Bernoulli, 4).unwrap());
        assert_eq!(strs(&b), ["1", "-1/2", "1/6", "0", "-1/30"]);
        let e = at_x0(coefficients(SeriesFamily::Euler, 3).unwrap());
        assert_eq!(strs(&e), ["1", "-1/2", "0", "1/4"]);
        let w = coefficients(SeriesFamily::Whitney { k: 2, m: 1, r: 0 }, 4).unwrap();
        assert_eq!(strs(&w), ["0", "0", "1", "3", "7"]);
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            build(SeriesFamily::Whitney { k: 1, m: 0, r: 0 }, 4),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            build(SeriesFamily::DegEuler { r: 0 }, 4),
            Err(Error::Parameter(_))
        ));
        assert!(build(SeriesFamily::Euler, MAX_ORDER + 1).is_err());
    }

    #[test]
    fn higher_order_is_prefix_extension() {
        let fams = [
            SeriesFamily::Stirling1 { k: 2 },
            SeriesFamily::DegStirling2 { k: 2 },
            SeriesFamily::DegBernoulli,
            SeriesFamily::DegEuler { r: 2 },
            SeriesFamily::DegWhitney { k: 2, m: 3, r: 1 },
        ];
        for f in fams {
            let short = coefficients(f, 6).unwrap();
            let long = coefficients(f, 10).unwrap();
            assert_eq!(short[..], long[..7], "{f}");
        }
    }
}
