//! Truncated formal power series over an exact coefficient ring.
//!
//! Coefficients are stored as ordinary coefficients `c_n` of `t^n`; the EGF
//! value of the represented sequence is `c_n * n!`. Every constructor takes
//! the truncation order explicitly and no operation ever extends it.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{factorial, from_usize, gff, Rational};
use crate::error::{Error, Result};
use crate::poly::XPolynomial;

/// Ring operations a series coefficient must support.
pub trait Coefficient:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn scale(&self, r: &Rational) -> Self;

    /// Multiplicative inverse, if this element is a unit.
    fn try_recip(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn try_recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coefficient for XPolynomial {
    fn scale(&self, r: &Rational) -> Self {
        XPolynomial::scale(self, r)
    }

    fn try_recip(&self) -> Option<Self> {
        match self.as_constant() {
            Some(c) if !c.is_zero() => Some(XPolynomial::constant(c.recip())),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

/// Series with rational coefficients.
pub type TruncatedEGF = TruncatedSeries<Rational>;

impl<C: Coefficient> TruncatedSeries<C> {
    /// Builds a series from `order + 1` ordinary coefficients.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    /// Builds a series from EGF values `a_0..a_N` (divides by `n!`).
    pub fn from_egf_values(values: Vec<C>) -> Self {
        Self::from_coeffs(
            values.into_iter().enumerate().map(|(n, a)| a.scale(&factorial(n).recip())).collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `c t^k`, truncated (an out-of-range `k` gives zero).
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    /// `n! * c_n`
    pub fn egf_value(&self, n: usize) -> C {
        self.coeffs[n].scale(&factorial(n))
    }

    pub fn egf_values(&self) -> Vec<C> {
        (0..=self.order()).map(|n| self.egf_value(n)).collect()
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_coeffs(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_coeffs(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        ))
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn scale_by(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_recip().ok_or(Error::ZeroConstantTerm)?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-(inv0.clone() * acc));
        }
        Ok(Self::from_coeffs(out))
    }

    /// `self^m` by binary powering; `m = 0` is the constant 1.
    pub fn int_pow(&self, m: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// `exp(self)` for a series with zero constant term, via
    /// `n g_n = sum_{k=1}^n k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::one());
        for n in 1..self.coeffs.len() {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].scale(&from_usize(k)) * out[n - k].clone();
            }
            out.push(acc.scale(&from_usize(n).recip()));
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl TruncatedEGF {
    /// Promotes rational coefficients to constant polynomials in `x`.
    pub fn lift(&self) -> TruncatedSeries<XPolynomial> {
        self.map(|c| XPolynomial::constant(c.clone()))
    }
}

pub fn series_mul<C: Coefficient>(
    f: &TruncatedSeries<C>,
    g: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>> {
    f.mul(g)
}

pub fn series_geom_inverse<C: Coefficient>(f: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
    f.inverse()
}

pub fn series_int_pow<C: Coefficient>(f: &TruncatedSeries<C>, m: u32) -> TruncatedSeries<C> {
    f.int_pow(m)
}

/// Truncation of `(1 + alpha t)^(beta/alpha)`: EGF values `(beta|alpha)_n`.
/// At `alpha = 0` this is `e^(beta t)`.
pub fn binomial_series(alpha: &Rational, beta: &Rational, order: usize) -> TruncatedEGF {
    TruncatedSeries::from_egf_values((0..=order).map(|n| gff(beta, alpha, n)).collect())
}

/// `(1 - alpha t)^(-beta/alpha)`: EGF values `(beta|-alpha)_n`.
pub fn neg_binomial_series(alpha: &Rational, beta: &Rational, order: usize) -> TruncatedEGF {
    binomial_series(&-alpha, beta, order)
}
