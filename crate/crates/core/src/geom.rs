//! Second-type higher-order generalized geometric polynomials
//! `A_n^{lambda,x}(alpha, beta, gamma)`, with generating function
//!
//! ```text
//! (1 - alpha t)^(-gamma/alpha) [1 / (1 - x((1 - alpha t)^(-beta/alpha) - 1))]^lambda
//! ```
//!
//! and explicit form
//! `sum_k C(k+lambda-1, k) (-1)^(n+k) beta^k k! S(n,k; alpha, -beta, -gamma) x^k`.
//!
//! Three computation routes are provided (explicit sum, series extraction,
//! first-element recurrence), plus one `*_sides` function per identity that
//! returns both sides as exact polynomials in `x`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    bar_binom, binom_usize, factorial, from_usize, gff, neg_one_pow, pow, rat, rising, Rational,
};
use crate::error::{Error, Result};
use crate::poly::{scaled_power, XPolynomial};
use crate::series::{neg_binomial_series, TruncatedSeries};
use crate::stirling::{s1, s2};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyParams {
    pub lambda: u32,
    #[serde(with = "crate::arith::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub beta: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub gamma: Rational,
}

impl PolyParams {
    pub fn new(lambda: u32, alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        PolyParams { lambda, alpha, beta, gamma }
    }

    /// Shorthand for small integer parameters.
    pub fn ints(lambda: u32, alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(lambda, rat(alpha), rat(beta), rat(gamma))
    }

    pub fn with_lambda(&self, lambda: u32) -> Self {
        PolyParams { lambda, ..self.clone() }
    }

    pub fn with_alpha(&self, alpha: Rational) -> Self {
        PolyParams { alpha, ..self.clone() }
    }

    pub fn with_beta(&self, beta: Rational) -> Self {
        PolyParams { beta, ..self.clone() }
    }

    pub fn with_gamma(&self, gamma: Rational) -> Self {
        PolyParams { gamma, ..self.clone() }
    }
}

/// `A_0..A_N` for one parameter set.
#[derive(Clone, Debug, PartialEq)]
pub struct ASequence {
    pub params: PolyParams,
    pub order: usize,
    pub values: Vec<XPolynomial>,
}

/// Both sides of an identity, as exact polynomials in `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides {
    pub lhs: XPolynomial,
    pub rhs: XPolynomial,
}

impl Sides {
    pub fn new(lhs: XPolynomial, rhs: XPolynomial) -> Self {
        Sides { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn c(r: Rational) -> XPolynomial {
    XPolynomial::constant(r)
}

fn sum_polys<I: IntoIterator<Item = XPolynomial>>(it: I) -> XPolynomial {
    it.into_iter().fold(XPolynomial::zero(), |a, b| a + b)
}

/// Explicit-sum route.
pub fn a_explicit(p: &PolyParams, n: usize) -> XPolynomial {
    a_poly(p.lambda, &p.alpha, &p.beta, &p.gamma, n)
}

type PolyKey = (u32, Rational, Rational, Rational, usize);

fn poly_cache() -> &'static RwLock<HashMap<PolyKey, XPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<PolyKey, XPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// [`a_explicit`] with the parameters spelled out. Memoized.
pub fn a_poly(lambda: u32, alpha: &Rational, beta: &Rational, gamma: &Rational, n: usize) -> XPolynomial {
    let key = (lambda, alpha.clone(), beta.clone(), gamma.clone(), n);
    if let Some(p) = poly_cache().read().unwrap().get(&key) {
        return p.clone();
    }
    let p = a_poly_uncached(lambda, alpha, beta, gamma, n);
    poly_cache().write().unwrap().insert(key, p.clone());
    p
}

fn a_poly_uncached(
    lambda: u32,
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
    n: usize,
) -> XPolynomial {
    let nb = -beta.clone();
    let ng = -gamma.clone();
    let coeffs = (0..=n)
        .map(|k| {
            bar_binom(k, lambda)
                * neg_one_pow(n + k)
                * pow(beta, k)
                * factorial(k)
                * s2(n, k, alpha, &nb, &ng)
        })
        .collect();
    XPolynomial::new(coeffs)
}

pub fn a_value(p: &PolyParams, n: usize, x: &Rational) -> Rational {
    a_explicit(p, n).eval(x)
}

/// Series route: builds the generating function with polynomial-in-`x`
/// coefficients and reads off the EGF values.
pub fn a_egf(p: &PolyParams, order: usize) -> ASequence {
    let g = neg_binomial_series(&p.alpha, &p.gamma, order).lift();
    let b = neg_binomial_series(&p.alpha, &p.beta, order);
    let mut denom = vec![XPolynomial::one()];
    denom.extend(b.coeffs()[1..].iter().map(|bn| XPolynomial::monomial(-bn.clone(), 1)));
    let denom = TruncatedSeries::from_coeffs(denom);
    let inv = denom.inverse().expect("constant term is 1");
    let series = g.mul(&inv.int_pow(p.lambda)).expect("same order");
    ASequence { params: p.clone(), order, values: series.egf_values() }
}

/// First-element recurrence route:
/// `A_{n+1}^l(g) = g A_n^l(g + alpha) + x l beta A_n^{l+1}(g + beta + alpha)`.
pub fn a_recurrence(p: &PolyParams, n: usize) -> XPolynomial {
    let mut memo = HashMap::new();
    recurrence_inner(p.lambda, &p.gamma, n, &p.alpha, &p.beta, &mut memo)
}

fn recurrence_inner(
    lambda: u32,
    gamma: &Rational,
    n: usize,
    alpha: &Rational,
    beta: &Rational,
    memo: &mut HashMap<(u32, Rational, usize), XPolynomial>,
) -> XPolynomial {
    if n == 0 {
        return XPolynomial::one();
    }
    let key = (lambda, gamma.clone(), n);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let first = recurrence_inner(lambda, &(gamma + alpha), n - 1, alpha, beta, memo).scale(gamma);
    let second = if lambda == 0 || beta.is_zero() {
        XPolynomial::zero()
    } else {
        let shifted = gamma + beta + alpha;
        recurrence_inner(lambda + 1, &shifted, n - 1, alpha, beta, memo)
            * XPolynomial::monomial(from_usize(lambda as usize) * beta, 1)
    };
    let v = first + second;
    memo.insert(key, v.clone());
    v
}

/// `M_n(alpha, beta, 0) = sum_k (-1)^(n+k) beta^k k! S(n,k; alpha, -beta, 0) x^k`
/// as a polynomial in `x`.
pub fn m_polynomial(alpha: &Rational, beta: &Rational, n: usize) -> XPolynomial {
    // Same sum as A with the bar binomial replaced by 1, i.e. lambda = 1.
    a_poly(1, alpha, beta, &Rational::zero(), n)
}

pub fn m_numbers(alpha: &Rational, beta: &Rational, x: &Rational, n: usize) -> Rational {
    m_polynomial(alpha, beta, n).eval(x)
}

// ---------------------------------------------------------------------------
// Identity sides.

pub fn explicit_egf_sides(p: &PolyParams, n: usize) -> Sides {
    Sides::new(a_explicit(p, n), a_egf(p, n).values.pop_last())
}

trait PopLast<T> {
    fn pop_last(self) -> T;
}

impl<T> PopLast<T> for Vec<T> {
    fn pop_last(mut self) -> T {
        self.pop().expect("nonempty")
    }
}

fn x_times(r: Rational) -> XPolynomial {
    XPolynomial::monomial(r, 1)
}

pub fn recurrence_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let lhs = a_explicit(p, n + 1);
    let rhs = a_poly(*lambda, alpha, beta, &(gamma + alpha), n).scale(gamma)
        + x_times(from_usize(*lambda as usize) * beta)
            * a_poly(lambda + 1, alpha, beta, &(gamma + beta + alpha), n);
    Sides::new(lhs, rhs)
}

/// Which form of the first-section factor to use in the split-off
/// convolution identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitReading {
    /// `A_k^{0,x}(alpha, beta, gamma)`
    Statement,
    /// `A_k^{lambda,x}(alpha, 0, gamma)`
    Proof,
}

pub fn split_sides(p: &PolyParams, n: usize, reading: SplitReading) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let zero = Rational::zero();
    let lhs = a_explicit(p, n + 1);
    let head = a_poly(*lambda, alpha, beta, &(gamma + alpha), n).scale(gamma);
    let conv = sum_polys((0..=n).map(|k| {
        let first = match reading {
            SplitReading::Statement => a_poly(0, alpha, beta, gamma, k),
            SplitReading::Proof => a_poly(*lambda, alpha, &zero, gamma, k),
        };
        first * a_poly(*lambda, alpha, beta, &zero, n - k + 1) * c(binom_usize(n, k))
    }));
    Sides::new(lhs, head + conv)
}

pub fn convolution_recurrence_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let zero = Rational::zero();
    let lhs = a_explicit(p, n + 1);
    let shifted = gamma + beta + alpha;
    let conv = sum_polys((0..=n).map(|k| {
        a_poly(1, alpha, beta, &shifted, k)
            * a_poly(*lambda, alpha, beta, &zero, n - k)
            * c(binom_usize(n, k))
    }));
    let rhs = a_poly(*lambda, alpha, beta, &(gamma + alpha), n).scale(gamma)
        + x_times(from_usize(*lambda as usize) * beta) * conv;
    Sides::new(lhs, rhs)
}

/// Inclusion–exclusion on the first section, with the kernel as printed:
/// `sum_k C(n,k) A_{n-k}(gamma) A_k^{0,x}(alpha, 0, gamma) (-1)^k`.
pub fn inclusion_exclusion_sides(p: &PolyParams, n: usize) -> Sides {
    inclusion_exclusion_with_kernel(p, n, &p.alpha)
}

/// Same identity with the kernel `A_k^{0,x}(-alpha, 0, gamma) = (gamma|alpha)_k`,
/// the coefficients of the reciprocal of `(1 - alpha t)^(-gamma/alpha)`.
pub fn inclusion_exclusion_corrected_sides(p: &PolyParams, n: usize) -> Sides {
    inclusion_exclusion_with_kernel(p, n, &-p.alpha.clone())
}

fn inclusion_exclusion_with_kernel(p: &PolyParams, n: usize, kernel_alpha: &Rational) -> Sides {
    let zero = Rational::zero();
    let lhs = a_poly(p.lambda, &p.alpha, &p.beta, &zero, n);
    let rhs = sum_polys((0..=n).map(|k| {
        a_poly(p.lambda, &p.alpha, &p.beta, &p.gamma, n - k)
            * a_poly(0, kernel_alpha, &zero, &p.gamma, k)
            * c(binom_usize(n, k) * neg_one_pow(k))
    }));
    Sides::new(lhs, rhs)
}

pub fn gamma_expansion_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let nb = -beta.clone();
    let zero = Rational::zero();
    let neg_alpha = -alpha.clone();
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, ck) in coeffs.iter_mut().enumerate() {
        let mut inner = Rational::zero();
        for i in k..=n {
            inner += binom_usize(n, i)
                * neg_one_pow(k + i)
                * s2(i, k, alpha, &nb, &zero)
                * gff(gamma, &neg_alpha, n - i);
        }
        *ck = bar_binom(k, *lambda) * pow(beta, k) * factorial(k) * inner;
    }
    Sides::new(a_explicit(p, n), XPolynomial::new(coeffs))
}

/// `x A_n^{l+1}(g + beta) = (x+1) A_n^{l+1}(g) - A_n^l(g)`
pub fn x_shift_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let x = XPolynomial::x();
    let lhs = x.clone() * a_poly(lambda + 1, alpha, beta, &(gamma + beta), n);
    let rhs = (x + XPolynomial::one()) * a_poly(lambda + 1, alpha, beta, gamma, n)
        - a_poly(*lambda, alpha, beta, gamma, n);
    Sides::new(lhs, rhs)
}

/// `A_{n+1}^l(g - alpha) - (x+1) l beta A_n^{l+1}(g) = (g - alpha - l beta) A_n^l(g)`
pub fn lambda_shift_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let lb = from_usize(*lambda as usize) * beta;
    let x1 = XPolynomial::x() + XPolynomial::one();
    let lhs = a_poly(*lambda, alpha, beta, &(gamma - alpha), n + 1)
        - x1 * a_poly(lambda + 1, alpha, beta, gamma, n).scale(&lb);
    let rhs = a_poly(*lambda, alpha, beta, gamma, n).scale(&(gamma - alpha - &lb));
    Sides::new(lhs, rhs)
}

/// `A_n^{l,x}(alpha, beta, gamma + beta l) = A_n^{l,-x-1}(alpha, -beta, gamma)`
pub fn reflection_first_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let lb = from_usize(*lambda as usize) * beta;
    let lhs = a_poly(*lambda, alpha, beta, &(gamma + lb), n);
    let rhs = a_poly(*lambda, alpha, &-beta.clone(), gamma, n).reflect();
    Sides::new(lhs, rhs)
}

/// `A_n^{l,-x-1}(alpha, -beta, gamma) = (-1)^n A_n^{l,-x-1}(alpha, beta, -gamma)`, as printed.
pub fn reflection_second_sides(p: &PolyParams, n: usize) -> Sides {
    reflection_second_with(p, n, &p.alpha)
}

/// The companion that does hold: `(-1)^n A_n^{l,-x-1}(-alpha, beta, -gamma)`.
pub fn reflection_second_corrected_sides(p: &PolyParams, n: usize) -> Sides {
    reflection_second_with(p, n, &-p.alpha.clone())
}

fn reflection_second_with(p: &PolyParams, n: usize, right_alpha: &Rational) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let lhs = a_poly(*lambda, alpha, &-beta.clone(), gamma, n).reflect();
    let rhs = a_poly(*lambda, right_alpha, beta, &-gamma.clone(), n).reflect().scale(&neg_one_pow(n));
    Sides::new(lhs, rhs)
}

pub fn reflection_expansion_sides(p: &PolyParams, n: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let shifted = from_usize(*lambda as usize) * beta - gamma;
    let x1 = XPolynomial::new(vec![Rational::one(), Rational::one()]);
    let nb = -beta.clone();
    let rhs = sum_polys((0..=n).map(|k| {
        x1.pow(k)
            .scale(&(bar_binom(k, *lambda) * pow(&nb, k) * factorial(k) * s2(n, k, alpha, beta, &shifted)))
    }))
    .scale(&neg_one_pow(n));
    Sides::new(a_explicit(p, n), rhs)
}

fn check_shared(p1: &PolyParams, p2: &PolyParams) -> Result<()> {
    if p1.alpha != p2.alpha || p1.beta != p2.beta {
        return Err(Error::InvalidConfig("convolution parameters must share alpha and beta".into()));
    }
    Ok(())
}

fn conv_sum(lambda1: u32, gamma1: &Rational, p2: &PolyParams, n: usize) -> XPolynomial {
    let PolyParams { alpha, beta, .. } = p2;
    sum_polys((0..=n).map(|k| {
        a_poly(lambda1, alpha, beta, gamma1, k)
            * a_poly(p2.lambda, alpha, beta, &p2.gamma, n - k)
            * c(binom_usize(n, k))
    }))
}

/// Variants of the derivative-split convolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DerivativeConvolutionReading {
    /// `x beta (l1+l2) sum C(n,k) A_k^{l1}(alpha+beta+g1) A_{n-k}^{l2}(g2)`, as printed.
    Printed,
    /// The printed form without the `x` factor.
    NoX,
    /// First factor raised to `l1 + 1`, as the generating-function split requires.
    Corrected,
}

pub fn derivative_convolution_sides(
    p1: &PolyParams,
    p2: &PolyParams,
    n: usize,
    reading: DerivativeConvolutionReading,
) -> Result<Sides> {
    check_shared(p1, p2)?;
    let PolyParams { alpha, beta, .. } = p1;
    let lam = p1.lambda + p2.lambda;
    let g = &p1.gamma + &p2.gamma;
    let first_gamma = alpha + beta + &p1.gamma;
    let first_lambda = match reading {
        DerivativeConvolutionReading::Corrected => p1.lambda + 1,
        _ => p1.lambda,
    };
    let scale = beta * from_usize(lam as usize);
    let factor = match reading {
        DerivativeConvolutionReading::NoX => c(scale),
        _ => x_times(scale),
    };
    let lhs = factor * conv_sum(first_lambda, &first_gamma, p2, n);
    let rhs = a_poly(lam, alpha, beta, &g, n + 1) - a_poly(lam, alpha, beta, &(&g + alpha), n).scale(&g);
    Ok(Sides::new(lhs, rhs))
}

pub fn convolution_sides(p1: &PolyParams, p2: &PolyParams, n: usize) -> Result<Sides> {
    check_shared(p1, p2)?;
    let PolyParams { alpha, beta, .. } = p1;
    let first_gamma = alpha + beta + &p1.gamma;
    let lhs = conv_sum(p1.lambda, &first_gamma, p2, n);
    let rhs = a_poly(p1.lambda + p2.lambda, alpha, beta, &(&first_gamma + &p2.gamma), n);
    Ok(Sides::new(lhs, rhs))
}

/// `(-1)^m A_{n+m}^l(r) = sum_k S(m,k; alpha,-beta,-r) C(k+l-1,k) k! (-beta x)^k A_n^{l+k}(r + m alpha + k beta)`
pub fn shift_intermediate_sides(p: &PolyParams, n: usize, m: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma: r } = p;
    let nb = -beta.clone();
    let nr = -r.clone();
    let lhs = a_poly(*lambda, alpha, beta, r, n + m).scale(&neg_one_pow(m));
    let rhs = sum_polys((0..=m).map(|k| {
        let shifted = r + alpha * from_usize(m) + beta * from_usize(k);
        let w = s2(m, k, alpha, &nb, &nr) * bar_binom(k, *lambda) * factorial(k);
        scaled_power(&nb, k).scale(&w) * a_poly(lambda + k as u32, alpha, beta, &shifted, n)
    }));
    Sides::new(lhs, rhs)
}

/// `A_n^{l+m,-x-1}(alpha,-beta,gamma)` times `(l)^{m rising} (beta x)^m` on
/// the left, the printed `(-1)^m sum_k (-1)^k S1(m,k; alpha,-beta,-gamma+m alpha-l beta)
/// A_{n+k}^l(alpha,beta,gamma-m alpha+l beta)` on the right.
pub fn shift_final_sides(p: &PolyParams, n: usize, m: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let lam = from_usize(*lambda as usize);
    let mm = from_usize(m);
    let lhs = shift_final_lhs(p, n, m) * scaled_power(beta, m).scale(&rising(&lam, m));
    let s1_gamma = -gamma.clone() + alpha * &mm - &lam * beta;
    let a_gamma = gamma - alpha * &mm + &lam * beta;
    let nb = -beta.clone();
    let rhs = sum_polys((0..=m).map(|k| {
        a_poly(*lambda, alpha, beta, &a_gamma, n + k)
            .scale(&(neg_one_pow(k) * s1(m, k, alpha, &nb, &s1_gamma)))
    }))
    .scale(&neg_one_pow(m));
    Sides::new(lhs, rhs)
}

/// Derived form that holds for every alpha:
/// `(l)^{m rising} (-beta x)^m A_n^{l+m,-x-1}(alpha,-beta,gamma)
///   = sum_k (-1)^k S1(m,k; -alpha,-beta, alpha-gamma-l beta) A_{n+k}^l(alpha,beta,gamma-k alpha+l beta)`.
pub fn shift_final_corrected_sides(p: &PolyParams, n: usize, m: usize) -> Sides {
    let PolyParams { lambda, alpha, beta, gamma } = p;
    let lam = from_usize(*lambda as usize);
    let nb = -beta.clone();
    let na = -alpha.clone();
    let lhs = shift_final_lhs(p, n, m) * scaled_power(&nb, m).scale(&rising(&lam, m));
    let s1_gamma = alpha - gamma - &lam * beta;
    let rhs = sum_polys((0..=m).map(|k| {
        let a_gamma = gamma - alpha * from_usize(k) + &lam * beta;
        a_poly(*lambda, alpha, beta, &a_gamma, n + k).scale(&(neg_one_pow(k) * s1(m, k, &na, &nb, &s1_gamma)))
    }));
    Sides::new(lhs, rhs)
}

fn shift_final_lhs(p: &PolyParams, n: usize, m: usize) -> XPolynomial {
    a_poly(p.lambda + m as u32, &p.alpha, &-p.beta.clone(), &p.gamma, n).reflect()
}

/// The printed final form in its division shape, evaluated at the given
/// nonzero `x` values. Returns one `(lhs, rhs)` pair per point.
pub fn shift_final_division_values(
    p: &PolyParams,
    n: usize,
    m: usize,
    xs: &[Rational],
) -> Result<Vec<(Rational, Rational)>> {
    if p.lambda < 1 {
        return Err(Error::InvalidLambda { min: 1, got: p.lambda });
    }
    if p.beta.is_zero() {
        return Err(Error::ZeroBeta { context: "shift theorem" });
    }
    let sides = shift_final_sides(p, n, m);
    let lhs_poly = shift_final_lhs(p, n, m);
    let lam = from_usize(p.lambda as usize);
    xs.iter()
        .map(|x| {
            if x.is_zero() {
                return Err(Error::VanishingDenominator("x = 0 in the shift theorem".into()));
            }
            let denom = rising(&lam, m) * pow(&(&p.beta * x), m);
            Ok((lhs_poly.eval(x), sides.rhs.eval(x) / denom))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Boolean front ends.

pub fn check_thm6(p: &PolyParams, n: usize) -> bool {
    recurrence_sides(p, n).holds()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitOutcome {
    pub statement: bool,
    pub proof: bool,
}

pub fn check_thm2(p: &PolyParams, n: usize) -> SplitOutcome {
    SplitOutcome {
        statement: split_sides(p, n, SplitReading::Statement).holds(),
        proof: split_sides(p, n, SplitReading::Proof).holds(),
    }
}

pub fn check_thm4(p: &PolyParams, n: usize) -> bool {
    convolution_recurrence_sides(p, n).holds()
}

/// The printed form.
pub fn check_eq6(p: &PolyParams, n: usize) -> bool {
    inclusion_exclusion_sides(p, n).holds()
}

pub fn check_eq7(p: &PolyParams, n: usize) -> bool {
    gamma_expansion_sides(p, n).holds()
}

pub fn check_31_32(p: &PolyParams, n: usize) -> (bool, bool) {
    (x_shift_sides(p, n).holds(), lambda_shift_sides(p, n).holds())
}

/// `(derivative convolution as printed, plain convolution)`.
pub fn check_convolutions(p1: &PolyParams, p2: &PolyParams, n: usize) -> Result<(bool, bool)> {
    Ok((
        derivative_convolution_sides(p1, p2, n, DerivativeConvolutionReading::Printed)?.holds(),
        convolution_sides(p1, p2, n)?.holds(),
    ))
}

/// All three expressions of the reflection symmetry, as printed.
pub fn check_symmetry_37(p: &PolyParams, n: usize) -> bool {
    reflection_first_sides(p, n).holds() && reflection_second_sides(p, n).holds()
}

pub fn check_38(p: &PolyParams, n: usize) -> bool {
    reflection_expansion_sides(p, n).holds()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftOutcome {
    pub intermediate: bool,
    pub final_printed: bool,
    pub final_corrected: bool,
    /// Division form as printed, at three nonzero rational `x`.
    pub division_printed: bool,
}

pub fn shift_outcome(p: &PolyParams, n: usize, m: usize) -> Result<ShiftOutcome> {
    let xs = [rat(1), rat(-3), Rational::new(2.into(), 5.into())];
    let division_printed = shift_final_division_values(p, n, m, &xs)?.into_iter().all(|(l, r)| l == r);
    Ok(ShiftOutcome {
        intermediate: shift_intermediate_sides(p, n, m).holds(),
        final_printed: shift_final_sides(p, n, m).holds(),
        final_corrected: shift_final_corrected_sides(p, n, m).holds(),
        division_printed,
    })
}

/// Intermediate and final identities as printed.
pub fn check_shift_theorem(p: &PolyParams, n: usize, m: usize) -> Result<bool> {
    let o = shift_outcome(p, n, m)?;
    Ok(o.intermediate && o.final_printed && o.division_printed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn a_zero_is_one() {
        for p in [PolyParams::ints(0, 1, 2, 3), PolyParams::new(3, ratio(1, 2), ratio(-2, 3), rat(5))] {
            assert_eq!(a_explicit(&p, 0), XPolynomial::one());
            assert_eq!(a_egf(&p, 0).values[0], XPolynomial::one());
        }
    }

    #[test]
    fn fubini_values() {
        let p = PolyParams::ints(1, 0, 1, 0);
        let got: Vec<_> = (0..=5).map(|n| a_value(&p, n, &rat(1))).collect();
        assert_eq!(got, ints(&[1, 1, 3, 13, 75, 541]));
        let seq = a_egf(&p, 5);
        let from_series: Vec<_> = seq.values.iter().map(|a| a.eval(&rat(1))).collect();
        assert_eq!(from_series, ints(&[1, 1, 3, 13, 75, 541]));
    }

    #[test]
    fn chains_in_power_set() {
        // e^{2t}/(2 - e^t): 1, 3, 11, 51
        let p = PolyParams::ints(1, 0, 1, 2);
        let got: Vec<_> = (0..=3).map(|n| a_value(&p, n, &rat(1))).collect();
        assert_eq!(got, ints(&[1, 3, 11, 51]));
    }

    #[test]
    fn lambda_zero_is_pure_factorial() {
        let p = PolyParams::ints(0, 0, 1, 2);
        assert_eq!(a_explicit(&p, 3), XPolynomial::constant(rat(8)));
        let q = PolyParams::new(0, ratio(2, 3), rat(5), ratio(1, 4));
        for n in 0..6 {
            let want = gff(&q.gamma, &-q.alpha.clone(), n);
            assert_eq!(a_explicit(&q, n), XPolynomial::constant(want));
        }
    }

    #[test]
    fn m_numbers_are_geometric_at_classical_point() {
        assert_eq!(m_numbers(&rat(0), &rat(1), &rat(1), 0), rat(1));
        assert_eq!(m_numbers(&rat(0), &rat(1), &rat(1), 1), rat(1));
        assert_eq!(m_numbers(&rat(0), &rat(1), &rat(1), 3), rat(13));
    }

    #[test]
    fn recurrence_route_matches() {
        for p in [
            PolyParams::ints(1, 1, 1, 1),
            PolyParams::ints(2, 0, 1, 2),
            PolyParams::new(3, ratio(-1, 2), ratio(3, 2), ratio(2, 7)),
            PolyParams::ints(2, 1, 0, 3),
        ] {
            for n in 0..=7 {
                assert_eq!(a_recurrence(&p, n), a_explicit(&p, n), "{p:?} n={n}");
            }
        }
    }

    #[test]
    fn degree_bound() {
        let p = PolyParams::new(2, ratio(1, 3), ratio(-2, 5), rat(1));
        for n in 1..8 {
            assert_eq!(a_explicit(&p, n).degree(), Some(n));
            assert!(a_explicit(&p.with_beta(rat(0)), n).degree().unwrap_or(0) < n);
            assert!(a_explicit(&p.with_lambda(0), n).degree().unwrap_or(0) < n);
        }
    }

    #[test]
    fn theorem_checks_on_stated_points() {
        for n in 0..=8 {
            assert!(check_thm6(&PolyParams::ints(1, 1, 1, 1), n));
            assert!(check_thm6(&PolyParams::ints(2, 0, 1, 2), n));
        }
        for n in 0..=6 {
            assert!(check_thm4(&PolyParams::ints(1, 1, 2, 0), n));
            assert!(check_thm4(&PolyParams::ints(2, 0, 1, 1), n));
            let t2 = check_thm2(&PolyParams::ints(1, 1, 1, 1), n);
            assert!(t2.statement && t2.proof);
        }
    }

    #[test]
    fn lambda_zero_reduces_first_element_recurrence() {
        let p = PolyParams::new(0, ratio(2, 3), rat(1), ratio(5, 2));
        for n in 0..6 {
            let s = recurrence_sides(&p, n);
            let want = gff(&p.gamma, &-p.alpha.clone(), n + 1);
            assert_eq!(s.lhs, XPolynomial::constant(want));
            assert!(s.holds());
        }
    }

    #[test]
    fn inclusion_exclusion_printed_fails_only_off_alpha_zero() {
        for n in 0..=8 {
            assert!(check_eq6(&PolyParams::ints(1, 0, 1, 3), n));
            assert!(inclusion_exclusion_corrected_sides(&PolyParams::ints(2, 1, 1, 2), n).holds());
        }
        let s = inclusion_exclusion_sides(&PolyParams::ints(2, 1, 1, 2), 2);
        // residual 2 alpha gamma
        assert_eq!(s.rhs - s.lhs, XPolynomial::constant(rat(4)));
    }

    #[test]
    fn gamma_and_reflection_expansions() {
        for n in 0..=8 {
            assert!(check_eq7(&PolyParams::ints(1, 1, 1, 1), n));
            assert!(check_38(&PolyParams::ints(1, 1, 1, 0), n));
            assert!(check_38(&PolyParams::ints(2, 0, 1, 1), n));
        }
        for n in 0..=6 {
            assert!(check_eq7(&PolyParams::ints(3, 0, 2, 1), n));
        }
    }

    #[test]
    fn shift_recurrences() {
        assert_eq!(check_31_32(&PolyParams::ints(1, 1, 1, 0), 0), (true, true));
        for n in 0..=8 {
            assert_eq!(check_31_32(&PolyParams::ints(1, 1, 1, 0), n), (true, true));
            assert_eq!(check_31_32(&PolyParams::ints(2, 0, 1, 2), n), (true, true));
        }
    }

    #[test]
    fn reflection_symmetry() {
        for n in 0..=8 {
            assert!(check_symmetry_37(&PolyParams::ints(1, 0, 1, 0), n));
            let p = PolyParams::ints(2, 1, 2, 1);
            assert!(reflection_first_sides(&p, n).holds());
            assert!(reflection_second_corrected_sides(&p, n).holds());
        }
        assert!(reflection_second_sides(&PolyParams::ints(2, 1, 2, 1), 1).holds());
        assert!(!reflection_second_sides(&PolyParams::ints(2, 1, 2, 1), 2).holds());
    }

    #[test]
    fn convolutions() {
        let p1 = PolyParams::ints(1, 1, 1, 0);
        let p2 = PolyParams::ints(1, 1, 1, 1);
        let q1 = PolyParams::ints(2, 0, 1, 1);
        let q2 = PolyParams::ints(1, 0, 1, 2);
        for n in 0..=6 {
            assert!(convolution_sides(&p1, &p2, n).unwrap().holds());
            assert!(convolution_sides(&q1, &q2, n).unwrap().holds());
            assert!(derivative_convolution_sides(&p1, &p2, n, DerivativeConvolutionReading::Corrected)
                .unwrap()
                .holds());
            assert!(derivative_convolution_sides(&q1, &q2, n, DerivativeConvolutionReading::Corrected)
                .unwrap()
                .holds());
        }
        let (derivative, plain) = check_convolutions(&p1, &p2, 1).unwrap();
        assert!(!derivative && plain);
        // lambda1 = lambda2 = 0: plain product of factorial series
        let z1 = PolyParams::ints(0, 1, 2, 1);
        let z2 = PolyParams::ints(0, 1, 2, 3);
        for n in 0..=5 {
            assert!(convolution_sides(&z1, &z2, n).unwrap().holds());
        }
        assert!(convolution_sides(&p1, &PolyParams::ints(1, 2, 1, 0), 2).is_err());
    }

    #[test]
    fn shift_theorem() {
        let p = PolyParams::ints(1, 0, 1, 0);
        for n in 0..=6 {
            assert!(check_shift_theorem(&p, n, 0).unwrap());
            assert!(check_shift_theorem(&p, n, 1).unwrap());
        }
        let q = PolyParams::ints(2, 1, 1, 1);
        for n in 0..=5 {
            let o = shift_outcome(&q, n, 2).unwrap();
            assert!(o.intermediate && o.final_corrected);
        }
        assert!((0..=5).any(|n| !shift_outcome(&q, n, 2).unwrap().final_printed));
        assert!(matches!(
            check_shift_theorem(&PolyParams::ints(0, 0, 1, 0), 1, 1),
            Err(Error::InvalidLambda { .. })
        ));
    }
}
