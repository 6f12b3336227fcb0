//! Hsu–Shiue generalized Stirling numbers `S(n, k; alpha, beta, gamma)`,
//! defined as connection coefficients
//! `(t|alpha)_n = sum_k S(n,k) (t - gamma|beta)_k`.
//!
//! Two independent routes are provided: the triangle recurrence
//! `S(n+1,k) = S(n,k-1) + (k beta - n alpha + gamma) S(n,k)` (memoized per
//! parameter triple, never evicted) and the alternating explicit sum, which
//! needs `beta != 0`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binom_usize, factorial, from_usize, gff, neg_one_pow, pow, Rational};
use crate::error::{Error, Result};
use crate::series::{binomial_series, TruncatedEGF};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StirlingParams {
    #[serde(with = "crate::arith::serde_rational")]
    pub alpha: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub beta: Rational,
    #[serde(with = "crate::arith::serde_rational")]
    pub gamma: Rational,
}

impl StirlingParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        StirlingParams { alpha, beta, gamma }
    }

    /// Parameters of the inverse (first-kind) partner: `(beta, alpha, -gamma)`.
    pub fn dual(&self) -> Self {
        StirlingParams::new(self.beta.clone(), self.alpha.clone(), -self.gamma.clone())
    }
}

/// Row-by-row memo of one Stirling triangle.
///
/// Reads after a fill are lock-free in the sense that they only take the
/// read side of the lock; rows are appended under the write lock.
#[derive(Debug)]
pub struct StirlingTable {
    params: StirlingParams,
    rows: RwLock<Vec<Vec<Rational>>>,
}

impl StirlingTable {
    pub fn new(params: StirlingParams) -> Self {
        StirlingTable { params, rows: RwLock::new(vec![vec![Rational::one()]]) }
    }

    pub fn params(&self) -> &StirlingParams {
        &self.params
    }

    /// Makes sure rows `0..=n` exist.
    pub fn fill_to(&self, n: usize) {
        if self.rows.read().unwrap().len() > n {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        let StirlingParams { alpha, beta, gamma } = &self.params;
        while rows.len() <= n {
            let m = rows.len() - 1;
            let prev = &rows[m];
            let mut next = Vec::with_capacity(m + 2);
            for k in 0..=m + 1 {
                let mut v = if k > 0 { prev[k - 1].clone() } else { Rational::zero() };
                if k <= m {
                    let w = beta * from_usize(k) - alpha * from_usize(m) + gamma;
                    v += w * &prev[k];
                }
                next.push(v);
            }
            rows.push(next);
        }
    }

    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            return Rational::zero();
        }
        self.fill_to(n);
        self.rows.read().unwrap()[n][k].clone()
    }

    pub fn row(&self, n: usize) -> Vec<Rational> {
        self.fill_to(n);
        self.rows.read().unwrap()[n].clone()
    }
}

type Registry = RwLock<HashMap<StirlingParams, Arc<StirlingTable>>>;

fn registry() -> &'static Registry {
    static TABLES: OnceLock<Registry> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared table for `params`, created on first use.
pub fn table(params: &StirlingParams) -> Arc<StirlingTable> {
    if let Some(t) = registry().read().unwrap().get(params) {
        return Arc::clone(t);
    }
    let mut map = registry().write().unwrap();
    Arc::clone(map.entry(params.clone()).or_insert_with(|| Arc::new(StirlingTable::new(params.clone()))))
}

/// `S(n, k; alpha, beta, gamma)` from the memoized recurrence. Accepts any
/// parameters, including all-zero (which gives the identity triangle).
pub fn stirling_rec(params: &StirlingParams, n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    table(params).get(n, k)
}

/// Convenience wrapper taking the three parameters separately.
pub fn s2(n: usize, k: usize, alpha: &Rational, beta: &Rational, gamma: &Rational) -> Rational {
    stirling_rec(&StirlingParams::new(alpha.clone(), beta.clone(), gamma.clone()), n, k)
}

/// `S(n,k) = 1/(beta^k k!) sum_s (-1)^(k-s) C(k,s) (beta s + gamma|alpha)_n`.
pub fn stirling_explicit(params: &StirlingParams, n: usize, k: usize) -> Result<Rational> {
    let StirlingParams { alpha, beta, gamma } = params;
    if beta.is_zero() {
        return Err(Error::ZeroBeta { context: "stirling_explicit" });
    }
    if k > n {
        return Ok(Rational::zero());
    }
    let mut acc = Rational::zero();
    for s in 0..=k {
        let base = beta * from_usize(s) + gamma;
        acc += neg_one_pow(k - s) * binom_usize(k, s) * gff(&base, alpha, n);
    }
    Ok(acc / (pow(beta, k) * factorial(k)))
}

/// First-kind partner `S1(n,k; alpha, beta, gamma) = S(n,k; beta, alpha, -gamma)`,
/// so that `f_n = sum S(n,k) g_k` inverts to `g_n = sum S1(n,k) f_k`.
pub fn stirling_dual(params: &StirlingParams, n: usize, k: usize) -> Rational {
    stirling_rec(&params.dual(), n, k)
}

pub fn s1(n: usize, k: usize, alpha: &Rational, beta: &Rational, gamma: &Rational) -> Rational {
    stirling_dual(&StirlingParams::new(alpha.clone(), beta.clone(), gamma.clone()), n, k)
}

/// Truncation of `(1+alpha t)^(gamma/alpha) ([(1+alpha t)^(beta/alpha) - 1]/beta)^k`,
/// whose EGF values are `k! S(n,k)`.
pub fn stirling_egf_check(params: &StirlingParams, k: u32, order: usize) -> Result<TruncatedEGF> {
    let StirlingParams { alpha, beta, gamma } = params;
    if beta.is_zero() {
        return Err(Error::ZeroBeta { context: "stirling_egf_check" });
    }
    let bracket = binomial_series(alpha, beta, order).sub(&TruncatedEGF::one(order))?.scale(&beta.recip());
    binomial_series(alpha, gamma, order).mul(&bracket.int_pow(k))
}

/// Both readings of the parameter-swap convolution, evaluated at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamSwapOutcome {
    /// `S(n,k; alpha, gamma, beta)`, the left side as printed.
    pub printed_lhs: Rational,
    /// `sum_{s=k}^n C(n,s) (gamma|alpha)_{n-s} S(s,k; alpha, beta, gamma)`.
    pub printed_rhs: Rational,
    /// `S(n,k; alpha, beta, gamma)`.
    pub resolved_lhs: Rational,
    /// `sum_{s=k}^n C(n,s) (gamma|alpha)_{n-s} S(s,k; alpha, beta, 0)`.
    pub resolved_rhs: Rational,
}

impl ParamSwapOutcome {
    pub fn printed_holds(&self) -> bool {
        self.printed_lhs == self.printed_rhs
    }

    pub fn resolved_holds(&self) -> bool {
        self.resolved_lhs == self.resolved_rhs
    }
}

pub fn param_swap_check(params: &StirlingParams, n: usize, k: usize) -> ParamSwapOutcome {
    let StirlingParams { alpha, beta, gamma } = params;
    let zero = Rational::zero();
    let sum_with = |g: &Rational| -> Rational {
        (k..=n)
            .map(|s| binom_usize(n, s) * gff(gamma, alpha, n - s) * s2(s, k, alpha, beta, g))
            .fold(Rational::zero(), |a, b| a + b)
    };
    ParamSwapOutcome {
        printed_lhs: s2(n, k, alpha, gamma, beta),
        printed_rhs: sum_with(gamma),
        resolved_lhs: s2(n, k, alpha, beta, gamma),
        resolved_rhs: sum_with(&zero),
    }
}

/// Entry `(n, m)` of the product of the dual triangle with the Stirling
/// triangle; the identity matrix when the inverse pair is consistent.
pub fn orthogonality_entry(params: &StirlingParams, n: usize, m: usize) -> Rational {
    (m..=n)
        .map(|k| stirling_dual(params, n, k) * stirling_rec(params, k, m))
        .fold(Rational::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn p(a: Rational, b: Rational, g: Rational) -> StirlingParams {
        StirlingParams::new(a, b, g)
    }

    /// Set partitions of {0..n} into exactly k blocks, by restricted growth strings.
    fn count_set_partitions(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, k: usize, used: usize) -> u64 {
            if i == n {
                return u64::from(used == k);
            }
            let mut total = 0;
            for b in 0..=used.min(k.saturating_sub(1)) {
                total += go(i + 1, n, k, if b == used { used + 1 } else { used });
            }
            total
        }
        go(0, n, k, 0)
    }

    #[test]
    fn classical_second_kind() {
        let c = p(rat(0), rat(1), rat(0));
        assert_eq!(count_set_partitions(4, 2), 7);
        assert_eq!(stirling_rec(&c, 4, 2), rat(7));
        assert_eq!(stirling_explicit(&c, 4, 2).unwrap(), rat(7));
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(stirling_rec(&c, n, k), rat(count_set_partitions(n, k) as i64));
            }
        }
    }

    #[test]
    fn base_cases() {
        let q = p(ratio(2, 3), ratio(-5, 4), ratio(7, 2));
        for n in 0..10 {
            assert_eq!(stirling_rec(&q, n, n), rat(1));
            assert_eq!(stirling_rec(&q, n, 0), gff(&q.gamma, &q.alpha, n));
            assert_eq!(stirling_rec(&q, n, n + 3), rat(0));
        }
        assert_eq!(stirling_explicit(&q, 1, 1).unwrap(), rat(1));
        assert_eq!(stirling_explicit(&q, 1, 0).unwrap(), q.gamma);
        let d = p(rat(1), rat(1), rat(0));
        for n in 0..8 {
            assert_eq!(stirling_explicit(&d, n, n).unwrap(), rat(1));
        }
    }

    #[test]
    fn explicit_rejects_zero_beta() {
        let q = p(rat(1), rat(0), rat(2));
        assert!(matches!(stirling_explicit(&q, 3, 1), Err(Error::ZeroBeta { .. })));
        assert!(matches!(stirling_egf_check(&q, 1, 3), Err(Error::ZeroBeta { .. })));
    }

    #[test]
    fn all_zero_parameters_give_identity() {
        let z = p(rat(0), rat(0), rat(0));
        for n in 0..6 {
            for k in 0..=n {
                assert_eq!(stirling_rec(&z, n, k), if n == k { rat(1) } else { rat(0) });
            }
        }
    }

    #[test]
    fn signed_first_kind() {
        // t(t-1)(t-2) = t^3 - 3t^2 + 2t
        let c = p(rat(0), rat(1), rat(0));
        assert_eq!(stirling_dual(&c, 3, 2), rat(-3));
        assert_eq!(stirling_dual(&c, 3, 1), rat(2));
        assert_eq!(stirling_dual(&c, 5, 5), rat(1));
    }

    #[test]
    fn orthogonality_small() {
        let q = p(ratio(1, 2), rat(3), ratio(-2, 7));
        for n in 0..=6 {
            for m in 0..=n {
                let want = if n == m { rat(1) } else { rat(0) };
                assert_eq!(orthogonality_entry(&q, n, m), want, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn egf_column() {
        let c = p(rat(0), rat(1), rat(0));
        let col = stirling_egf_check(&c, 2, 4).unwrap();
        let got: Vec<_> = col.egf_values().into_iter().map(|v| v / rat(2)).collect();
        assert_eq!(got, vec![rat(0), rat(0), rat(1), rat(3), rat(7)]);
        let trivial = stirling_egf_check(&p(ratio(1, 3), rat(2), rat(0)), 0, 5).unwrap();
        assert_eq!(trivial, TruncatedEGF::one(5));
        let q = p(rat(1), rat(1), rat(2));
        assert_eq!(stirling_egf_check(&q, 1, 3).unwrap().egf_value(1), rat(1));
    }

    #[test]
    fn param_swap_readings() {
        let q = p(rat(0), rat(1), rat(1));
        let out = param_swap_check(&q, 2, 1);
        assert!(out.resolved_holds());
        assert_eq!(out.resolved_lhs, rat(3));
        assert!(!out.printed_holds());
        for n in 0..5 {
            let diag = param_swap_check(&p(ratio(1, 2), rat(2), rat(3)), n, n);
            assert_eq!(diag.resolved_lhs, rat(1));
            assert_eq!(diag.resolved_rhs, rat(1));
        }
        // gamma = 0 collapses the sum to its s = n term for any alpha.
        let g0 = p(rat(2), rat(1), rat(0));
        for n in 0..6 {
            for k in 0..=n {
                assert_eq!(param_swap_check(&g0, n, k).resolved_rhs, stirling_rec(&g0, n, k));
            }
        }
    }
}
