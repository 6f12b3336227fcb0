//! Generalized exponential polynomials
//! `S_n(x; alpha, beta, r) = sum_k S(n,k; alpha, beta, r) x^k`, with generating
//! function `(1 + alpha t)^(r/alpha) exp((x/beta)((1 + alpha t)^(beta/alpha) - 1))`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{bar_binom, binom_usize, factorial, from_usize, gff, pow, rising, to_f64, Rational};
use crate::error::{Error, Result};
use crate::geom::{a_explicit, PolyParams};
use crate::poly::XPolynomial;
use crate::quadrature::GaussLaguerre;
use crate::series::{binomial_series, TruncatedEGF, TruncatedSeries};
use crate::stirling::s2;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpPolyParams {
    #[serde(with = "crate::arith::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub beta: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub r: Rational,
}

impl ExpPolyParams {
    pub fn new(alpha: Rational, beta: Rational, r: Rational) -> Self {
        ExpPolyParams { alpha, beta, r }
    }
}

pub fn s_exp_explicit(p: &ExpPolyParams, n: usize) -> XPolynomial {
    XPolynomial::new((0..=n).map(|k| s2(n, k, &p.alpha, &p.beta, &p.r)).collect())
}

fn s_exp_value(p: &ExpPolyParams, n: usize, x: &Rational) -> Rational {
    s_exp_explicit(p, n).eval(x)
}

/// `exp((x/beta)(C - 1))` with `C = (1 + alpha t)^(beta/alpha)`.
fn exp_part(p: &ExpPolyParams, x: &Rational, order: usize) -> Result<TruncatedEGF> {
    if p.beta.is_zero() {
        return Err(Error::ZeroBeta { context: "exponential polynomial generating function" });
    }
    let c = binomial_series(&p.alpha, &p.beta, order);
    let mut coeffs = c.coeffs().to_vec();
    coeffs[0] = Rational::zero();
    let scale = x / &p.beta;
    TruncatedSeries::from_coeffs(coeffs).scale(&scale).exp()
}

pub fn s_exp_egf(p: &ExpPolyParams, x: &Rational, order: usize) -> Result<TruncatedEGF> {
    let lead = binomial_series(&p.alpha, &p.r, order);
    lead.mul(&exp_part(p, x, order)?)
}

/// Which index placement to evaluate in the addition formula for `S_{n+m}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpiveyReading {
    /// `sum_k sum_j C(n,k) S(n,k) (j beta - m alpha | alpha)_{n-k} S_k(x) x^j`
    Printed,
    /// Same with the summand `S(m, j)`.
    Corrected,
    /// Binomial on the complementary index:
    /// `sum_k sum_j C(m,k) S(n,j) (j beta - n alpha | alpha)_{m-k} S_k(x) x^j`.
    Classical,
}

/// `(S_{n+m}(x), right side)` for one reading.
pub fn spivey_sides(
    p: &ExpPolyParams,
    x: &Rational,
    n: usize,
    m: usize,
    reading: SpiveyReading,
) -> (Rational, Rational) {
    let ExpPolyParams { alpha, beta, r } = p;
    let lhs = s_exp_value(p, n + m, x);
    // (outer, inner) ranges: k over the binomial index, j over the x power
    let (outer, inner) = match reading {
        SpiveyReading::Classical => (m, n),
        _ => (n, m),
    };
    let mut rhs = Rational::zero();
    for k in 0..=outer {
        let sk = s_exp_value(p, k, x);
        for j in 0..=inner {
            let stir = match reading {
                SpiveyReading::Printed => s2(n, k, alpha, beta, r),
                SpiveyReading::Corrected => s2(m, j, alpha, beta, r),
                SpiveyReading::Classical => s2(n, j, alpha, beta, r),
            };
            if stir.is_zero() {
                continue;
            }
            let base = beta * from_usize(j) - alpha * from_usize(inner);
            rhs += binom_usize(outer, k) * stir * gff(&base, alpha, outer - k) * &sk * pow(x, j);
        }
    }
    (lhs, rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiveyOutcome {
    pub printed: bool,
    pub corrected: bool,
    pub classical: bool,
}

/// The printed form.
pub fn check_spivey(p: &ExpPolyParams, x: &Rational, n: usize, m: usize) -> bool {
    let (l, r) = spivey_sides(p, x, n, m, SpiveyReading::Printed);
    l == r
}

pub fn spivey_outcome(p: &ExpPolyParams, x: &Rational, n: usize, m: usize) -> SpiveyOutcome {
    let holds = |reading| {
        let (l, r) = spivey_sides(p, x, n, m, reading);
        l == r
    };
    SpiveyOutcome {
        printed: holds(SpiveyReading::Printed),
        corrected: holds(SpiveyReading::Corrected),
        classical: holds(SpiveyReading::Classical),
    }
}

/// Generating function of the shifted sequence `S_{n+m}`:
/// `(1+alpha t)^((r - m alpha)/alpha) exp((x/beta)(C-1)) sum_j S(m,j) x^j C^j`.
/// Returns `(direct S_{n+m}, product series)` EGF values for `n <= order`.
pub fn shifted_egf_sides(
    p: &ExpPolyParams,
    x: &Rational,
    m: usize,
    order: usize,
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let ExpPolyParams { alpha, beta, r } = p;
    let c = binomial_series(alpha, beta, order);
    let mut poly_in_c = TruncatedSeries::zero(order);
    let mut c_pow = TruncatedSeries::one(order);
    for j in 0..=m {
        let w = s2(m, j, alpha, beta, r) * pow(x, j);
        poly_in_c = poly_in_c.add(&c_pow.scale(&w))?;
        c_pow = c_pow.mul(&c)?;
    }
    let lead = binomial_series(alpha, &(r - alpha * from_usize(m)), order);
    let rhs = lead.mul(&exp_part(p, x, order)?)?.mul(&poly_in_c)?;
    let lhs = (0..=order).map(|n| s_exp_value(p, n + m, x)).collect();
    Ok((lhs, rhs.egf_values()))
}

pub fn check_lemma34(p: &ExpPolyParams, x: &Rational, m: usize, order: usize) -> Result<bool> {
    let (l, r) = shifted_egf_sides(p, x, m, order)?;
    Ok(l == r)
}

/// Node count used by [`check_integral_rep`].
pub fn integral_nodes(n: usize) -> usize {
    (n + 2).max(16)
}

/// `A_n = ((-1)^n / Gamma(lambda)) int_0^inf z^(lambda-1) S_n(-beta x z; alpha, -beta, -r) e^(-z) dz`.
/// Returns `(quadrature, exact)`.
pub fn check_integral_rep(p: &PolyParams, x: f64, n: usize) -> Result<(f64, f64)> {
    if p.lambda < 1 {
        return Err(Error::InvalidLambda { min: 1, got: p.lambda });
    }
    let nb = -p.beta.clone();
    let ng = -p.gamma.clone();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    // coefficients of z^k, with x kept as a float
    let coeffs: Vec<f64> =
        (0..=n).map(|k| to_f64(&(s2(n, k, &p.alpha, &nb, &ng) * pow(&nb, k))) * x.powi(k as i32)).collect();
    let rule = GaussLaguerre::new(integral_nodes(n), f64::from(p.lambda) - 1.0);
    let quad = sign * rule.integrate(|z| coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c));
    let exact = a_explicit(p, n).eval_f64(x);
    Ok((quad, exact))
}

/// `Gamma(lambda + k) / Gamma(lambda) == C(k + lambda - 1, k) k!`, in exact
/// integer arithmetic.
pub fn gamma_ratio_holds(lambda: u32, k: usize) -> bool {
    let l = from_usize(lambda as usize);
    rising(&l, k) == bar_binom(k, lambda) * factorial(k)
}
