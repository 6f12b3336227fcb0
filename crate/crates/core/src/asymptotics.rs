//! Large-`lambda` expansion of `A_n^{lambda,x}(alpha, beta, lambda gamma)`.
//!
//! With `psi(t) = sum a_j t^j` the generating function of the `lambda = 1`
//! polynomials, `[t^n] psi^lambda = (lambda)_n sum_j W(n,j) / (lambda-n+j)_j`,
//! where `W(n,j)` sums `prod a_i^{k_i}/k_i!` over partitions of `n` into
//! `n - j` parts and `(y)_j` is the falling factorial.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, falling, from_usize, gff, pow, rat, to_f64, Rational};
use crate::error::{Error, Result};
use crate::geom::{a_explicit, PolyParams};
use crate::oracle::partitions_with_parts;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AsymptoticParams {
    #[serde(with = "crate::arith::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub beta: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub gamma: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub x: Rational,
}

impl AsymptoticParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, x: Rational) -> Self {
        AsymptoticParams { alpha, beta, gamma, x }
    }

    pub fn ints(alpha: i64, beta: i64, gamma: i64, x: i64) -> Self {
        Self::new(rat(alpha), rat(beta), rat(gamma), rat(x))
    }

    /// Polynomial parameters with `gamma` scaled by `lambda`.
    pub fn scaled(&self, lambda: u32) -> PolyParams {
        PolyParams::new(
            lambda,
            self.alpha.clone(),
            self.beta.clone(),
            &self.gamma * from_usize(lambda as usize),
        )
    }

    fn with_gamma(&self, gamma: Rational) -> Self {
        AsymptoticParams { gamma, ..self.clone() }
    }
}

/// `a_1..a_n` with `a_j = A_j^{1,x}(alpha, beta, gamma) / j!`.
pub fn a_coefficients(p: &AsymptoticParams, n: usize) -> Vec<Rational> {
    let base = PolyParams::new(1, p.alpha.clone(), p.beta.clone(), p.gamma.clone());
    (1..=n).map(|j| a_explicit(&base, j).eval(&p.x) / factorial(j)).collect()
}

/// `W(n, j)`; `a` holds `a_1, a_2, ...` and must reach `a_{j+1}`.
///
/// `W(n, n)` is the empty sum for `n >= 1` and 1 for `n = 0`.
pub fn w_coefficient(a: &[Rational], n: usize, j: usize) -> Result<Rational> {
    if j > n {
        return Err(Error::IndexOutOfRange(format!("W({n},{j}) needs j <= n")));
    }
    let largest_part = if j == n { 0 } else { j + 1 };
    if a.len() < largest_part {
        return Err(Error::IndexOutOfRange(format!(
            "W({n},{j}) needs a_1..a_{largest_part}, got {} coefficients",
            a.len()
        )));
    }
    let mut total = Rational::zero();
    for part in partitions_with_parts(n, n - j)? {
        let mut term = Rational::one();
        for (i, &k) in part.multiplicities(n).iter().enumerate() {
            if k > 0 {
                term *= pow(&a[i], k) / factorial(k);
            }
        }
        total += term;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionInput {
    /// `a_1..a_n`; `a_0 = 1` is implicit.
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub a: Vec<Rational>,
    pub n: usize,
    pub s: usize,
    #[serde(with = "crate::arith::serde_rational")]
    pub lambda: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionResult {
    /// `W(n,j) / (lambda-n+j)_j` for `j = 0..=s`; zero past `j = n`.
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub terms: Vec<Rational>,
    #[serde(with = "crate::arith::serde_rational")]
    pub total: Rational,
    /// `(lambda)_n n! total`, on the scale of `A_n`.
    #[serde(with = "crate::arith::serde_rational")]
    pub predicted: Rational,
}

pub fn hsu_expansion(inp: &ExpansionInput) -> Result<ExpansionResult> {
    let n = inp.n;
    let lam = &inp.lambda;
    if n > 0 && *lam <= from_usize(n - 1) {
        return Err(Error::VanishingDenominator(format!("lambda = {lam} must exceed n - 1 = {}", n - 1)));
    }
    let mut terms = Vec::with_capacity(inp.s + 1);
    for j in 0..=inp.s {
        if j > n {
            terms.push(Rational::zero());
            continue;
        }
        let denom = falling(&(lam - from_usize(n) + from_usize(j)), j);
        if denom.is_zero() {
            return Err(Error::VanishingDenominator(format!("(lambda-n+{j})_{j} = 0")));
        }
        terms.push(w_coefficient(&inp.a, n, j)? / denom);
    }
    let total: Rational = terms.iter().sum();
    let predicted = falling(lam, n) * factorial(n) * &total;
    Ok(ExpansionResult { terms, total, predicted })
}

/// Which printed instantiation of the closed forms to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// Written with `a_1 = beta x`.
    GammaZero,
    /// Written with `a_1 = gamma + beta x`.
    General,
}

/// `[W(n,0), W(n,1), W(n,2)]` from the expanded closed forms. Needs `n >= 4`.
pub fn closed_form_w(p: &AsymptoticParams, n: usize, form: ClosedForm) -> Result<[Rational; 3]> {
    if n < 4 {
        return Err(Error::IndexOutOfRange(format!("closed forms need n >= 4, got {n}")));
    }
    let AsymptoticParams { alpha, beta, gamma, x } = p;
    let (b2, b3) = (pow(beta, 2), pow(beta, 3));
    let (x2, x3) = (pow(x, 2), pow(x, 3));
    let f = |k: usize| factorial(k);
    match form {
        ClosedForm::GammaZero => {
            let bx = beta * x;
            let q2 = beta * (beta + alpha) * x + rat(2) * &b2 * &x2;
            let q3 = beta * (beta + alpha) * (beta + rat(2) * alpha) * x
                + rat(6) * &b2 * (beta + alpha) * &x2
                + rat(6) * &b3 * &x3;
            let w0 = pow(&bx, n) / f(n);
            let w1 = pow(&bx, n - 2) * &q2 / (rat(2) * f(n - 2));
            let w2 = pow(&bx, n - 3) * q3 / (f(3) * f(n - 3))
                + pow(&bx, n - 4) * pow(&q2, 2) / (rat(8) * f(n - 4));
            Ok([w0, w1, w2])
        }
        ClosedForm::General => {
            let a1 = gamma + beta * x;
            let na = -alpha.clone();
            let q2 = gff(gamma, &na, 2) + beta * (beta + rat(2) * gamma + alpha) * x + rat(2) * &b2 * &x2;
            let q3 = gff(gamma, &na, 3)
                + beta
                    * (gff(&-gamma.clone(), alpha, 2)
                        + (beta + gamma + rat(2) * alpha) * (beta + rat(2) * gamma + alpha))
                    * x
                + rat(6) * &b2 * (beta + alpha + gamma) * &x2
                + rat(6) * &b3 * &x3;
            let w0 = pow(&a1, n) / f(n);
            let w1 = pow(&a1, n - 2) * &q2 / (f(2) * f(n - 2));
            let w2 = pow(&a1, n - 3) * q3 / (f(3) * f(n - 3))
                + rat(3) * pow(&a1, n - 4) * pow(&q2, 2) / (f(4) * f(n - 4));
            Ok([w0, w1, w2])
        }
    }
}

/// Both instantiations against [`w_coefficient`]: the `gamma = 0` form at
/// `gamma = 0`, the general form at the given `gamma`.
pub fn closed_form_w_check(p: &AsymptoticParams, n: usize) -> Result<bool> {
    let zero = p.with_gamma(Rational::zero());
    for (params, form) in [(&zero, ClosedForm::GammaZero), (p, ClosedForm::General)] {
        let a = a_coefficients(params, n);
        let closed = closed_form_w(params, n, form)?;
        for (j, want) in closed.iter().enumerate() {
            if &w_coefficient(&a, n, j)? != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecayRow {
    pub lambda: u32,
    #[serde(with = "crate::arith::serde_rational")]
    pub exact: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub predicted: Rational,
    /// `|predicted - exact| / |exact|`; absolute error when `exact = 0`.
    pub rel_error: f64,
    /// This row's error over the previous row's; `None` on the first row or
    /// when the previous error is zero.
    pub ratio: Option<f64>,
}

/// Exact `A_n^{lambda,x}(alpha, beta, lambda gamma)` against the `s`-term
/// prediction, for each integer `lambda`.
pub fn error_decay_report(
    p: &AsymptoticParams,
    n: usize,
    s: usize,
    lambdas: &[u32],
) -> Result<Vec<DecayRow>> {
    let a = a_coefficients(p, n);
    let rows: Vec<(u32, Rational, Rational, Rational)> = lambdas
        .par_iter()
        .map(|&lambda| {
            let exact = a_explicit(&p.scaled(lambda), n).eval(&p.x);
            let res =
                hsu_expansion(&ExpansionInput { a: a.clone(), n, s, lambda: from_usize(lambda as usize) })?;
            let err = (&res.predicted - &exact).abs();
            let rel = if exact.is_zero() { err } else { err / exact.abs() };
            Ok((lambda, exact, res.predicted, rel))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<DecayRow> = Vec::with_capacity(rows.len());
    for (lambda, exact, predicted, rel) in rows {
        let ratio = out
            .last()
            .and_then(|prev: &DecayRow| (prev.rel_error != 0.0).then(|| to_f64(&rel) / prev.rel_error));
        out.push(DecayRow { lambda, exact, predicted, rel_error: to_f64(&rel), ratio });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::geom::a_egf;

    #[test]
    fn a_coefficients_match_printed_values() {
        let p = AsymptoticParams::new(rat(2), rat(3), rat(0), ratio(1, 2));
        let a = a_coefficients(&p, 2);
        let (al, be, x) = (&p.alpha, &p.beta, &p.x);
        assert_eq!(a[0], be * x);
        assert_eq!(a[1], be * x * (be + al) / rat(2) + be * be * x * x);
        let q = AsymptoticParams::new(rat(2), rat(3), ratio(5, 7), ratio(1, 2));
        assert_eq!(a_coefficients(&q, 1)[0], &q.gamma + &q.beta * &q.x);
    }

    #[test]
    fn w_closed_forms_small() {
        let a: Vec<Rational> = [ratio(2, 3), rat(5), ratio(-1, 4), rat(7), rat(1), rat(2)].to_vec();
        for n in 4..=6 {
            assert_eq!(w_coefficient(&a, n, 0).unwrap(), pow(&a[0], n) / factorial(n));
            assert_eq!(w_coefficient(&a, n, 1).unwrap(), pow(&a[0], n - 2) * &a[1] / factorial(n - 2));
            assert_eq!(
                w_coefficient(&a, n, 2).unwrap(),
                pow(&a[0], n - 3) * &a[2] / factorial(n - 3)
                    + pow(&a[0], n - 4) * pow(&a[1], 2) / (rat(2) * factorial(n - 4))
            );
        }
        assert_eq!(w_coefficient(&a, 0, 0).unwrap(), rat(1));
        assert_eq!(w_coefficient(&a, 3, 3).unwrap(), rat(0));
        assert!(w_coefficient(&a, 3, 4).is_err());
    }

    #[test]
    fn closed_forms_on_examples() {
        assert!(closed_form_w_check(&AsymptoticParams::ints(1, 1, 0, 1), 4).unwrap());
        assert!(closed_form_w_check(&AsymptoticParams::ints(1, 1, 2, 1), 5).unwrap());
        assert!(closed_form_w_check(&AsymptoticParams::ints(1, 0, 3, 2), 4).unwrap());
        assert!(closed_form_w_check(&AsymptoticParams::ints(1, 1, 0, 1), 3).is_err());
    }

    #[test]
    fn n1_is_exact_and_leading_term() {
        let p = AsymptoticParams::new(ratio(1, 2), rat(2), ratio(1, 3), rat(3));
        let a = a_coefficients(&p, 4);
        for lambda in [1u32, 5, 64] {
            for s in 0..3 {
                let r = hsu_expansion(&ExpansionInput {
                    a: a.clone(),
                    n: 1,
                    s,
                    lambda: from_usize(lambda as usize),
                })
                .unwrap();
                assert_eq!(r.predicted, a_explicit(&p.scaled(lambda), 1).eval(&p.x));
            }
        }
        let r = hsu_expansion(&ExpansionInput { a: a.clone(), n: 4, s: 0, lambda: rat(10) }).unwrap();
        assert_eq!(r.predicted, falling(&rat(10), 4) * pow(&(&p.gamma + &p.beta * &p.x), 4));
        assert!(hsu_expansion(&ExpansionInput { a, n: 4, s: 1, lambda: rat(3) }).is_err());
    }

    #[test]
    fn full_depth_is_exact() {
        for p in [
            AsymptoticParams::ints(1, 1, 0, 1),
            AsymptoticParams::new(ratio(1, 2), rat(2), ratio(-1, 3), rat(2)),
        ] {
            for n in 0..=6 {
                let a = a_coefficients(&p, n);
                for lambda in n.max(1)..=20 {
                    let lam = from_usize(lambda);
                    let r = hsu_expansion(&ExpansionInput { a: a.clone(), n, s: n, lambda: lam.clone() })
                        .unwrap();
                    // [t^n] psi^lambda from the series route
                    let want = a_egf(&p.scaled(lambda as u32), n).values[n].eval(&p.x);
                    assert_eq!(r.predicted, want, "n={n} lambda={lambda}");
                }
            }
        }
    }

    #[test]
    fn decay_report() {
        let rows = error_decay_report(&AsymptoticParams::ints(1, 1, 0, 1), 4, 1, &[64, 128, 256]).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].ratio.is_none());
        for r in &rows[1..] {
            let ratio = r.ratio.unwrap();
            assert!((0.125..=0.5).contains(&ratio), "{ratio}");
        }
        let rows = error_decay_report(&AsymptoticParams::ints(1, 1, 1, 1), 1, 2, &[5, 10]).unwrap();
        assert!(rows.iter().all(|r| r.rel_error == 0.0));
    }
}
