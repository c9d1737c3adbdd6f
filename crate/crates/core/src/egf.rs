//! Truncated exponential generating functions `f(t) = sum c_n t^n / n!`
//! with polynomial coefficients, exact modulo `t^(order + 1)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{int, pascal_row, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<MultiPoly>,
}

impl EgfSeries {
    /// Wraps `c_0 ..= c_N`; the truncation order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector, which has no truncation order.
    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least c_0");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> MultiPoly) -> Self {
        Self::from_coeffs((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| MultiPoly::zero())
    }

    /// The multiplicative identity `1`.
    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == 0 {
                MultiPoly::one()
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// `e^(ct)` for a polynomial constant `c`: `c_n = c^n`.
    pub fn exp_scaled(order: usize, c: &MultiPoly) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cur = MultiPoly::one();
        for _ in 0..=order {
            coeffs.push(cur.clone());
            cur = &cur * c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `e^t`.
    pub fn exp_t(order: usize) -> Self {
        Self::from_fn(order, |_| MultiPoly::one())
    }

    /// `t^j`, whose only nonzero EGF coefficient is `c_j = j!`.
    pub fn t_power(order: usize, j: usize) -> Self {
        Self::from_fn(order, |n| {
            if n == j {
                MultiPoly::constant(int((1..=j as i64).product()))
            } else {
                MultiPoly::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&MultiPoly> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_coeffs(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn scale_poly(&self, c: &MultiPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|p| p * c).collect())
    }

    pub fn map_coeffs(&self, f: impl FnMut(&MultiPoly) -> MultiPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// EGF convolution: `c_n = sum_i C(n, i) a_i b_(n-i)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.order() {
            let row = pascal_row(n);
            let mut c = MultiPoly::zero();
            for (i, binom) in row.iter().enumerate() {
                let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                c += &(a * b).scale(binom);
            }
            out.push(c);
        }
        Ok(Self::from_coeffs(out))
    }

    /// Multiplicative inverse; `c_0` must be a nonzero rational constant.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.coeffs[0]
            .constant_value()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NotAUnit(self.coeffs[0].to_string()))?;
        let inv0 = a0.recip();
        let mut out: Vec<MultiPoly> = Vec::with_capacity(self.coeffs.len());
        out.push(MultiPoly::constant(inv0.clone()));
        for n in 1..=self.order() {
            let row = pascal_row(n);
            let mut acc = MultiPoly::zero();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if a.is_zero() {
                    continue;
                }
                acc += &(a * &out[n - i]).scale(&row[i]);
            }
            out.push(acc.scale(&-inv0.clone()));
        }
        Ok(Self::from_coeffs(out))
    }

    /// `exp(a)` for `a` with zero constant term. Since `a^(N+1) = 0` modulo
    /// `t^(N+1)`, the exponential sum is finite; it is accumulated in Horner
    /// form `1 + a(1 + a/2(1 + a/3(...)))`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotNilpotent(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let one = Self::identity(order);
        let mut acc = one.clone();
        for j in (1..=order).rev() {
            acc = self.mul(&acc)?.scale(&int(j as i64).recip()).add(&one)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same order");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(MultiPoly::is_zero)
    }
}

impl Default for EgfSeries {
    fn default() -> Self {
        Self::identity(0)
    }
}
