//! Generalized Gauss–Laguerre rules for the weight `z^a e^(-z)` on `[0, inf)`,
//! built with the Golub–Welsch eigenvalue method.

use nalgebra::{DMatrix, SymmetricEigen};

/// Nodes ascending. Weights are normalized to sum to 1, i.e. the rule
/// integrates against `z^a e^(-z) / Gamma(a+1)`.
#[derive(Clone, Debug)]
pub struct GaussLaguerre {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLaguerre {
    /// An `n`-point rule; exact for polynomials of degree `< 2n` up to rounding.
    pub fn new(n: usize, a: f64) -> Self {
        assert!(n >= 1, "need at least one node");
        assert!(a > -1.0, "weight exponent must exceed -1");
        let mut jacobi = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            jacobi[(i, i)] = 2.0 * i as f64 + a + 1.0;
            if i + 1 < n {
                let k = (i + 1) as f64;
                let off = (k * (k + a)).sqrt();
                jacobi[(i, i + 1)] = off;
                jacobi[(i + 1, i)] = off;
            }
        }
        let eig = SymmetricEigen::new(jacobi);
        let mut pairs: Vec<(f64, f64)> =
            (0..n).map(|i| (eig.eigenvalues[i], eig.eigenvectors[(0, i)].powi(2))).collect();
        pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
        let total: f64 = pairs.iter().map(|p| p.1).sum();
        GaussLaguerre {
            alpha: a,
            nodes: pairs.iter().map(|p| p.0).collect(),
            weights: pairs.iter().map(|p| p.1 / total).collect(),
        }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&z, &w)| w * f(z)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments_are_rising_factorials() {
        // E[z^k] under z^a e^-z / Gamma(a+1) is (a+1)(a+2)...(a+k)
        for a in [0.0, 1.0, 2.5, 4.0] {
            let rule = GaussLaguerre::new(12, a);
            for k in 0..20 {
                let want: f64 = (1..=k).map(|i| a + i as f64).product();
                let got = rule.integrate(|z| z.powi(k));
                assert!(((got - want) / want).abs() < 1e-10, "a={a} k={k}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn nodes_are_positive_and_sorted() {
        let rule = GaussLaguerre::new(16, 2.0);
        assert!(rule.nodes[0] > 0.0);
        assert!(rule.nodes.windows(2).all(|w| w[0] < w[1]));
        assert!((rule.weights.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }
}
