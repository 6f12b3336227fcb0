//! Polynomials in the marker variable `x` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{format_rational, pow, Rational};

/// Ascending coefficients `p_0 + p_1 x + ... + p_d x^d`, trimmed so the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPolynomial {
    coeffs: Vec<Rational>,
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + crate::arith::to_f64(c))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Substitutes `x -> a x + b`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let lin = XPolynomial::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(XPolynomial::zero(), |acc, c| acc * lin.clone() + XPolynomial::constant(c.clone()))
    }

    /// Substitutes `x -> -x - 1`.
    pub fn reflect(&self) -> Self {
        let m1 = -Rational::one();
        self.compose_affine(&m1, &m1)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(XPolynomial::one(), |acc, _| acc * self.clone())
    }

    /// Human-readable form such as `1 + 3x - 1/2x^2`.
    pub fn pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = format_rational(c);
            let term = match k {
                0 => s,
                1 => format!("{s}x"),
                _ => format!("{s}x^{k}"),
            };
            if out.is_empty() {
                out = term;
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPolynomial({})", self.pretty())
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl From<Rational> for XPolynomial {
    fn from(c: Rational) -> Self {
        XPolynomial::constant(c)
    }
}

impl Add for XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: XPolynomial) -> XPolynomial {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        XPolynomial::new(long)
    }
}

impl Neg for XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        XPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: XPolynomial) -> XPolynomial {
        self + (-rhs)
    }
}

impl Mul for XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: XPolynomial) -> XPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return XPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPolynomial::new(out)
    }
}

impl Zero for XPolynomial {
    fn zero() -> Self {
        XPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for XPolynomial {
    fn one() -> Self {
        XPolynomial::constant(Rational::one())
    }
}

/// `prod_{k<n} (x - k*alpha)`: the generalized factorial with a symbolic base.
pub fn gff_poly(alpha: &Rational, n: usize) -> XPolynomial {
    (0..n).fold(XPolynomial::one(), |acc, k| {
        let shift = -(alpha * Rational::from_integer(k.into()));
        acc * XPolynomial::new(vec![shift, Rational::one()])
    })
}

/// `c x^k` summed over `k`, from a list of `(k, c)` terms.
pub fn from_terms<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> XPolynomial {
    let mut coeffs = Vec::new();
    for (k, c) in terms {
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::zero());
        }
        coeffs[k] += c;
    }
    XPolynomial::new(coeffs)
}

/// Power of a constant times `x^k`, handy for `(-beta x)^k`.
pub fn scaled_power(c: &Rational, k: usize) -> XPolynomial {
    XPolynomial::monomial(pow(c, k), k)
}
