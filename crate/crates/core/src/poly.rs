//! Sparse polynomials in the two formal variables `x` and `l` (lambda) over
//! exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, parse_rational, rpow, Rational};

/// Exponent pair `(deg_x, deg_l)`.
pub type Monomial = (u32, u32);

/// A polynomial in `x` and `l` with rational coefficients.
///
/// No stored coefficient is ever zero, so derived equality is mathematical
/// equality and the zero polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(int(v))
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn lambda() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(deg_x: u32, deg_l: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_x, deg_l), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from arbitrary `(monomial, coefficient)` pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(deg_x, deg_l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_x: u32, deg_l: u32) -> Rational {
        self.terms
            .get(&(deg_x, deg_l))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    pub fn degree_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    pub fn has_x(&self) -> bool {
        self.terms.keys().any(|m| m.0 > 0)
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.keys().any(|m| m.1 > 0)
    }

    /// The value of a polynomial with no `x` or `l`, if it is one.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by `x^dx * l^dl`.
    pub fn shift(&self, dx: u32, dl: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| ((m.0 + dx, m.1 + dl), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes the given values; a `None` leaves that variable formal.
    ///
    /// Substituting `l = 0` is how every `lambda -> 0` limit is realized,
    /// since all quantities here are polynomial in `l`.
    pub fn specialize(&self, x: Option<&Rational>, lambda: Option<&Rational>) -> Self {
        let mut out = Self::zero();
        for (&(dx, dl), c) in &self.terms {
            let mut c = c.clone();
            let mut m = (dx, dl);
            if let Some(xv) = x {
                c *= rpow(xv, dx);
                m.0 = 0;
            }
            if let Some(lv) = lambda {
                c *= rpow(lv, dl);
                m.1 = 0;
            }
            out.add_term(m, c);
        }
        out
    }

    pub fn eval(&self, x: &Rational, lambda: &Rational) -> Rational {
        self.specialize(Some(x), Some(lambda))
            .constant_value()
            .expect("full substitution yields a constant")
    }

    /// Canonical text with `l` or `λ` for the second variable.
    pub fn render(&self, unicode: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let lam = if unicode { "λ" } else { "l" };
        // Highest x-degree first; within equal x-degree, ascending powers of l.
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));

        let mut out = String::new();
        for (i, (&(dx, dl), c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if dl > 0 {
                factors.push(var_power(lam, dl));
            }
            if dx > 0 {
                factors.push(var_power("x", dx));
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn var_power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self.render(false))
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses the canonical text form (either `l` or `λ` is accepted). Terms
    /// are separated by ` + ` or ` - `; factors inside a term by `*`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut tokens = s.split_whitespace();
        let first = tokens.next().ok_or_else(|| err("empty input"))?;
        let mut out = MultiPoly::zero();
        let (neg, body) = match first.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, first),
        };
        out.add_term_str(body, neg).map_err(|r| err(&r))?;
        while let Some(op) = tokens.next() {
            let neg = match op {
                "+" => false,
                "-" => true,
                _ => return Err(err("expected + or -")),
            };
            let term = tokens.next().ok_or_else(|| err("dangling operator"))?;
            out.add_term_str(term, neg).map_err(|r| err(&r))?;
        }
        Ok(out)
    }
}

impl MultiPoly {
    fn add_term_str(&mut self, term: &str, negate: bool) -> std::result::Result<(), String> {
        let mut coeff = Rational::one();
        let (mut dx, mut dl) = (0u32, 0u32);
        for factor in term.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n,
                    e.parse::<u32>()
                        .map_err(|_| format!("bad exponent in {factor}"))?,
                ),
                None => (factor, 1),
            };
            match name {
                "x" => dx += exp,
                "l" | "λ" => dl += exp,
                _ if exp == 1 => {
                    coeff *= parse_rational(name).map_err(|_| format!("bad factor {factor}"))?
                }
                _ => return Err(format!("bad factor {factor}")),
            }
        }
        if negate {
            coeff = -coeff;
        }
        self.add_term((dx, dl), coeff);
        Ok(())
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term((a.0 + b.0, a.1 + b.1), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly { (&self).$method(&rhs) }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly { (&self).$method(rhs) }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly { self.$method(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn x() -> MultiPoly {
        MultiPoly::x()
    }
    fn l() -> MultiPoly {
        MultiPoly::lambda()
    }

    #[test]
    fn rendering() {
        let p = &x().pow(2) - &(&l() * &x());
        assert_eq!(p.to_string(), "x^2 - l*x");
        assert_eq!(p.render(true), "x^2 - λ*x");
        assert_eq!(
            (&x().scale(&int(2)) + &MultiPoly::one()).to_string(),
            "2*x + 1"
        );
        assert_eq!((&MultiPoly::one() - &l()).to_string(), "1 - l");
        let beta1 = (&l() - &MultiPoly::one()).scale(&ratio(1, 2));
        assert_eq!(beta1.to_string(), "-1/2 + 1/2*l");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(
            MultiPoly::monomial(3, 2, ratio(-7, 3)).to_string(),
            "-7/3*l^2*x^3"
        );
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "x^2 - l*x",
            "-1/2 + 1/2*l",
            "0",
            "4 - l",
            "-7/3*l^2*x^3 + x - 5",
        ] {
            let p: MultiPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        let p: MultiPoly = "x^2 - λ*x".parse().unwrap();
        assert_eq!(p.to_string(), "x^2 - l*x");
        assert!("x +".parse::<MultiPoly>().is_err());
        assert!("2*y".parse::<MultiPoly>().is_err());
        assert!("".parse::<MultiPoly>().is_err());
    }

    #[test]
    fn specialize_examples() {
        let p = &x().pow(2) - &(&l() * &x());
        assert_eq!(p.specialize(None, Some(&int(0))), x().pow(2));
        assert_eq!(
            p.specialize(Some(&int(2)), Some(&ratio(1, 2))),
            MultiPoly::from_int(3)
        );
        assert_eq!(
            p.specialize(Some(&int(1)), Some(&int(1))),
            MultiPoly::zero()
        );
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &(&x() + &l()) - &x();
        assert_eq!(p, l());
        assert_eq!(p.len(), 1);
        let q = &(&x() + &l()) * &(&x() - &l());
        assert_eq!(q, &x().pow(2) - &l().pow(2));
        assert_eq!(q.coeff(1, 1), Rational::zero());
        assert!(q.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn constant_value() {
        assert_eq!(MultiPoly::from_int(5).constant_value(), Some(int(5)));
        assert_eq!(MultiPoly::zero().constant_value(), Some(int(0)));
        assert_eq!(x().constant_value(), None);
    }
}
