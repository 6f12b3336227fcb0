//! Higher-order generalized Euler polynomials `E_n^(lambda)(alpha, beta, gamma)`,
//! the coefficients of `[2 / ((1 + alpha t)^(beta/alpha) + 1)]^lambda (1 + alpha t)^(gamma/alpha)`.
//!
//! They are the `x = -1/2` specialization of the geometric polynomials with
//! `alpha` negated, which gives the A-routes below.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    bar_binom, binom_usize, factorial, format_rational, from_usize, neg_one_pow, pow, rat, ratio, rising,
    Rational,
};
use crate::error::{Error, Result};
use crate::geom::a_poly;
use crate::poly::{gff_poly, XPolynomial};
use crate::series::{binomial_series, TruncatedEGF, TruncatedSeries};
use crate::stirling::{s1, s2};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerParams {
    pub lambda: u32,
    #[serde(with = "crate::arith::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub beta: Rational,
}

impl EulerParams {
    pub fn new(lambda: u32, alpha: Rational, beta: Rational) -> Self {
        EulerParams { lambda, alpha, beta }
    }

    pub fn ints(lambda: u32, alpha: i64, beta: i64) -> Self {
        Self::new(lambda, rat(alpha), rat(beta))
    }
}

fn half() -> Rational {
    ratio(-1, 2)
}

/// Series route.
pub fn euler_egf(p: &EulerParams, gamma: &Rational, order: usize) -> TruncatedEGF {
    let c = binomial_series(&p.alpha, &p.beta, order);
    let bracket = c
        .add(&TruncatedSeries::one(order))
        .expect("same order")
        .inverse()
        .expect("constant term 2")
        .scale(&rat(2));
    bracket.int_pow(p.lambda).mul(&binomial_series(&p.alpha, gamma, order)).expect("same order")
}

/// `E_n` as a polynomial in its last argument.
pub fn euler_polynomial(p: &EulerParams, n: usize) -> XPolynomial {
    let at_zero = euler_egf(p, &Rational::zero(), n).egf_values();
    (0..=n)
        .map(|k| gff_poly(&p.alpha, n - k).scale(&(binom_usize(n, k) * &at_zero[k])))
        .fold(XPolynomial::zero(), |a, b| a + b)
}

/// `A_n^{lambda,-1/2}(-alpha, beta, gamma)`, the cheaper of the two A-forms.
pub fn euler_value(lambda: u32, alpha: &Rational, beta: &Rational, gamma: &Rational, n: usize) -> Rational {
    a_poly(lambda, &-alpha.clone(), beta, gamma, n).eval(&half())
}

/// Evaluates `(-1)^n A_n^{lambda,-1/2}(alpha,-beta,-gamma)` and
/// `A_n^{lambda,-1/2}(-alpha,beta,gamma)` and returns the common value.
pub fn euler_via_a(p: &EulerParams, gamma: &Rational, n: usize) -> Result<Rational> {
    let first =
        a_poly(p.lambda, &p.alpha, &-p.beta.clone(), &-gamma.clone(), n).eval(&half()) * neg_one_pow(n);
    let second = euler_value(p.lambda, &p.alpha, &p.beta, gamma, n);
    if first != second {
        return Err(Error::Inconsistent(format!(
            "A-forms disagree at n={n}: {} vs {}",
            format_rational(&first),
            format_rational(&second)
        )));
    }
    Ok(second)
}

/// Both explicit sums:
/// `sum_k S(n,k; alpha,beta,gamma) C(k+lambda-1,k) k! (-beta)^k / 2^k` and
/// `sum_k S(n,k; alpha,-beta,gamma-beta lambda) C(k+lambda-1,k) k! beta^k / 2^k`.
pub fn euler_explicit(p: &EulerParams, gamma: &Rational, n: usize) -> (Rational, Rational) {
    let EulerParams { lambda, alpha, beta } = p;
    let nb = -beta.clone();
    let shifted = gamma - beta * from_usize(*lambda as usize);
    let two = rat(2);
    let mut first = Rational::zero();
    let mut second = Rational::zero();
    for k in 0..=n {
        let w = bar_binom(k, *lambda) * factorial(k) / pow(&two, k);
        first += s2(n, k, alpha, beta, gamma) * &w * pow(&nb, k);
        second += s2(n, k, alpha, &nb, &shifted) * &w * pow(beta, k);
    }
    (first, second)
}

/// Classical Euler polynomial from `2 e^(x t) / (e^t + 1)`, built directly
/// from exponential series.
pub fn classical_euler_polynomial(n: usize) -> XPolynomial {
    let e_t = TruncatedSeries::from_coeffs((0..=n).map(|k| Rational::one() / factorial(k)).collect());
    let bracket = e_t
        .add(&TruncatedSeries::one(n))
        .expect("same order")
        .inverse()
        .expect("constant term 2")
        .scale(&rat(2))
        .lift();
    let e_xt = TruncatedSeries::from_coeffs(
        (0..=n).map(|k| XPolynomial::monomial(Rational::one() / factorial(k), k)).collect(),
    );
    bracket.mul(&e_xt).expect("same order").egf_value(n)
}

/// Outcome of one identity with all its readings; `None` where the reading
/// is undefined at the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerRecurrenceOutcome {
    /// `E^{l+1}(g) = 2E^l(g) - E^l(g+beta)`
    pub rec1: bool,
    /// `E^{l+1}(g+beta) = 2E^l(g) - E^{l+1}(g)`
    pub rec1_corrected: bool,
    /// `E_{n+1}(g) = (g - l beta) E_n(g-alpha) + l beta E_n(g-alpha) - (l beta/2) E_n(g+beta-alpha)`
    pub rec2: bool,
    /// Middle term read with argument `g + beta - alpha`.
    pub rec2_alt: bool,
    /// `E_{n+1}(g) = g E_n(g-alpha) - (l beta/2) E_n^{l+1}(g+beta-alpha)`
    pub rec2_corrected: bool,
    /// Inverse-shift relation with `S1(m,k; alpha,-beta, m alpha - l beta - g)`.
    pub rec3: Option<bool>,
    pub rec3_corrected: Option<bool>,
}

pub fn euler_recurrence_outcome(
    p: &EulerParams,
    gamma: &Rational,
    n: usize,
    m: usize,
) -> EulerRecurrenceOutcome {
    let EulerParams { lambda, alpha, beta } = p;
    let l = *lambda;
    let e = |lam: u32, g: &Rational, k: usize| euler_value(lam, alpha, beta, g, k);
    let g = gamma;
    let two = rat(2);
    let lb = from_usize(l as usize) * beta;
    let g_beta = g + beta;
    let g_ma = g - alpha;
    let g_b_ma = g + beta - alpha;

    let rec1 = e(l + 1, g, n) == &two * e(l, g, n) - e(l, &g_beta, n);
    let rec1_corrected = e(l + 1, &g_beta, n) == &two * e(l, g, n) - e(l + 1, g, n);

    let lhs2 = e(l, g, n + 1);
    let tail = &lb / &two * e(l, &g_b_ma, n);
    let rec2 = lhs2 == (g - &lb) * e(l, &g_ma, n) + &lb * e(l, &g_ma, n) - &tail;
    let rec2_alt = lhs2 == (g - &lb) * e(l, &g_ma, n) + &lb * e(l, &g_b_ma, n) - &tail;
    let rec2_corrected = lhs2 == g * e(l, &g_ma, n) - &lb / &two * e(l + 1, &g_b_ma, n);

    let (rec3, rec3_corrected) = if l >= 1 && !beta.is_zero() {
        let nb = -beta.clone();
        let pre = pow(&two, m) / (rising(&from_usize(l as usize), m) * pow(beta, m));
        let c = alpha * from_usize(m) - &lb - g;
        let printed_rhs: Rational = (0..=m)
            .map(|k| s1(m, k, alpha, &nb, &c) * euler_value(l, alpha, &nb, &c, n + k))
            .sum::<Rational>()
            * &pre;
        let printed = euler_value(l + m as u32, alpha, beta, &-g.clone(), n) == printed_rhs;
        let c2 = -alpha.clone() - g - &lb;
        let corrected_rhs: Rational = (0..=m)
            .map(|k| {
                let arg = g + alpha * from_usize(k) + &lb;
                s1(m, k, alpha, &nb, &c2) * neg_one_pow(k) * e(l, &arg, n + k)
            })
            .sum::<Rational>()
            * &pre;
        let corrected = euler_value(l + m as u32, alpha, &nb, g, n) == corrected_rhs;
        (Some(printed), Some(corrected))
    } else {
        (None, None)
    };

    EulerRecurrenceOutcome { rec1, rec1_corrected, rec2, rec2_alt, rec2_corrected, rec3, rec3_corrected }
}

/// The three recurrences as printed. The third reports `false` where it is
/// undefined (`lambda = 0` or `beta = 0`).
pub fn check_euler_recurrences(p: &EulerParams, gamma: &Rational, n: usize, m: usize) -> (bool, bool, bool) {
    let o = euler_recurrence_outcome(p, gamma, n, m);
    (o.rec1, o.rec2, o.rec3.unwrap_or(false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerConvolutionOutcome {
    /// `beta (l1+l2) sum C(n,k) E^{l1}_k(alpha+g1-beta) E^{l2}_{n-k}(g2) = 2G E^{L}_n(G-alpha) - 2 E^{L}_{n+1}(G)`
    pub conv1: bool,
    /// First factor `E^{l1+1}_k(g1+beta-alpha)`.
    pub conv1_corrected: bool,
    /// `sum C(n,k) E^{l1}_k(alpha+g1-beta) E^{l2}_{n-k}(g2) = E^{L}_n(alpha+G-beta)`
    pub conv2: bool,
    /// Mixed-sign convolution with the undefined `beta lambda` read as `beta l2`.
    pub conv3_lambda2: bool,
    /// Same with `beta (l1 + l2)`.
    pub conv3_lambda_sum: bool,
}

pub fn euler_convolution_outcome(
    p1: &EulerParams,
    p2: &EulerParams,
    g1: &Rational,
    g2: &Rational,
    n: usize,
) -> Result<EulerConvolutionOutcome> {
    if p1.alpha != p2.alpha || p1.beta != p2.beta {
        return Err(Error::InvalidConfig("convolution parameters must share alpha and beta".into()));
    }
    let (alpha, beta) = (&p1.alpha, &p1.beta);
    let (l1, l2) = (p1.lambda, p2.lambda);
    let big_l = l1 + l2;
    let big_g = g1 + g2;
    let e = |lam: u32, g: &Rational, k: usize| euler_value(lam, alpha, beta, g, k);
    let conv = |lam1: u32, gg1: &Rational| -> Rational {
        (0..=n).map(|k| binom_usize(n, k) * e(lam1, gg1, k) * e(l2, g2, n - k)).sum()
    };
    let two = rat(2);
    let shifted = alpha + g1 - beta;
    let right1 = &two * &big_g * e(big_l, &(&big_g - alpha), n) - &two * e(big_l, &big_g, n + 1);
    let scale = beta * from_usize(big_l as usize);
    let conv1 = &scale * conv(l1, &shifted) == right1;
    let conv1_corrected = &scale * conv(l1 + 1, &(g1 + beta - alpha)) == right1;
    let conv2 = conv(l1, &shifted) == e(big_l, &(alpha + &big_g - beta), n);

    let na = -alpha.clone();
    let mixed = |lam_for_shift: u32| -> bool {
        let left_g = alpha + beta - g1;
        let right_g = g2 + beta * from_usize(lam_for_shift as usize);
        let lhs: Rational = (0..=n)
            .map(|k| {
                binom_usize(n, k)
                    * neg_one_pow(n - k)
                    * euler_value(l1, &na, beta, &left_g, k)
                    * e(l2, &right_g, n - k)
            })
            .sum();
        lhs == euler_value(big_l, &na, beta, &(alpha + beta - &big_g), n)
    };
    Ok(EulerConvolutionOutcome {
        conv1,
        conv1_corrected,
        conv2,
        conv3_lambda2: mixed(l2),
        conv3_lambda_sum: mixed(big_l),
    })
}

/// The three convolutions as printed; the third with `beta lambda_2`.
pub fn check_euler_convolutions(
    p1: &EulerParams,
    p2: &EulerParams,
    g1: &Rational,
    g2: &Rational,
    n: usize,
) -> Result<(bool, bool, bool)> {
    let o = euler_convolution_outcome(p1, p2, g1, g2, n)?;
    Ok((o.conv1, o.conv2, o.conv3_lambda2))
}

/// `E_0..E_order` from the series route.
pub fn euler_sequence(p: &EulerParams, gamma: &Rational, order: usize) -> Vec<Rational> {
    euler_egf(p, gamma, order).egf_values()
}
