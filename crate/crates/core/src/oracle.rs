//! Brute-force counts of barred preferential arrangements with splitting
//! compartments and colored cells, plus integer-partition enumeration.
//!
//! Counts are exact integers; every routine enumerates rather than evaluates
//! a closed form, so it can serve as ground truth for the algebraic routes.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::geom::{a_value, PolyParams};

/// Largest element count the enumerators accept.
pub const MAX_N: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BPAConfig {
    pub n: usize,
    pub lambda: u32,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub x: u64,
}

impl BPAConfig {
    pub fn validate(&self) -> Result<()> {
        check_cap(self.n)?;
        check_divides(self.alpha, "beta", self.beta)?;
        check_divides(self.alpha, "gamma", self.gamma)?;
        if self.alpha == 0 && self.beta == 0 && self.gamma == 0 && self.x == 0 {
            return Err(Error::InvalidConfig("(alpha, beta, gamma, x) must not all be zero".into()));
        }
        Ok(())
    }

    /// The matching polynomial parameters.
    pub fn poly_params(&self) -> PolyParams {
        PolyParams::new(self.lambda, int(self.alpha), int(self.beta), int(self.gamma))
    }
}

fn int(v: u64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn check_cap(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(Error::EnumerationCap { n, max: MAX_N });
    }
    Ok(())
}

fn check_divides(alpha: u64, what: &'static str, value: u64) -> Result<()> {
    if alpha > 0 && !value.is_multiple_of(alpha) {
        return Err(Error::Divisibility { alpha, what, value });
    }
    Ok(())
}

fn overflow() -> Error {
    Error::InvalidConfig("count exceeds 128-bit range".into())
}

/// Ways to drop `n` labelled elements, in order, into a cell that starts with
/// `gamma` compartments; a compartment that receives an element splits into
/// `alpha + 1`.
pub fn count_gamma_cell(n: usize, alpha: u64, gamma: u64) -> Result<BigInt> {
    check_cap(n)?;
    check_divides(alpha, "gamma", gamma)?;
    let mut compartments = u128::from(gamma);
    let mut ways: u128 = 1;
    for _ in 0..n {
        ways = ways.checked_mul(compartments).ok_or_else(overflow)?;
        compartments += u128::from(alpha);
    }
    Ok(BigInt::from(ways))
}

/// Ways to distribute `n` labelled elements into `k` ordered cells, each
/// opening with `beta` compartments that split as in [`count_gamma_cell`],
/// with no cell left empty. Enumerates every cell assignment.
pub fn count_m_sections(n: usize, k: usize, alpha: u64, beta: u64) -> Result<BigInt> {
    check_cap(n)?;
    check_divides(alpha, "beta", beta)?;
    if k > n {
        return Ok(BigInt::from(0));
    }
    let mut loads = vec![0u64; k];
    let total = sections_dfs(n, alpha, beta, &mut loads).ok_or_else(overflow)?;
    Ok(BigInt::from(total))
}

fn sections_dfs(remaining: usize, alpha: u64, beta: u64, loads: &mut [u64]) -> Option<u128> {
    let empty = loads.iter().filter(|&&l| l == 0).count();
    if remaining < empty {
        return Some(0);
    }
    if remaining == 0 {
        return Some(1);
    }
    let mut total: u128 = 0;
    for cell in 0..loads.len() {
        let choices = u128::from(beta) + u128::from(alpha) * u128::from(loads[cell]);
        if choices == 0 {
            continue;
        }
        loads[cell] += 1;
        let sub = sections_dfs(remaining - 1, alpha, beta, loads);
        loads[cell] -= 1;
        total = total.checked_add(sub?.checked_mul(choices)?)?;
    }
    Some(total)
}

/// Colored-section total `sum_k count_m_sections(n, k) x^k`.
pub fn count_section(n: usize, alpha: u64, beta: u64, x: u64) -> Result<BigInt> {
    let mut total = BigInt::from(0);
    for k in 0..=n {
        total += count_m_sections(n, k, alpha, beta)? * BigInt::from(x).pow(k as u32);
    }
    Ok(total)
}

/// Sum over compositions `(n_1, ..., n_{lambda+1})` of `n` of the multinomial
/// times the gamma-cell count for `n_1` times the colored-section counts for
/// the remaining sections.
pub fn count_bpa(cfg: &BPAConfig) -> Result<BigInt> {
    cfg.validate()?;
    let mut section_cache: HashMap<usize, BigInt> = HashMap::new();
    for m in 0..=cfg.n {
        section_cache.insert(m, count_section(m, cfg.alpha, cfg.beta, cfg.x)?);
    }
    let mut total = BigInt::from(0);
    for n1 in 0..=cfg.n {
        let head = count_gamma_cell(n1, cfg.alpha, cfg.gamma)? * binomial(cfg.n, n1);
        if head == BigInt::from(0) {
            continue;
        }
        total += head * sections_sum(cfg.n - n1, cfg.lambda as usize, &section_cache);
    }
    Ok(total)
}

/// `sum` over compositions of `m` into `parts` sections of the multinomial
/// times the product of section counts.
fn sections_sum(m: usize, parts: usize, cache: &HashMap<usize, BigInt>) -> BigInt {
    if parts == 0 {
        return BigInt::from(u8::from(m == 0));
    }
    let mut total = BigInt::from(0);
    for first in 0..=m {
        total += binomial(m, first) * &cache[&first] * sections_sum(m - first, parts - 1, cache);
    }
    total
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Brute-force count and the algebraic value at the same point.
pub fn oracle_compare(cfg: &BPAConfig) -> Result<(BigInt, Rational)> {
    let count = count_bpa(cfg)?;
    let value = a_value(&cfg.poly_params(), cfg.n, &int(cfg.x));
    Ok((count, value))
}

pub fn oracle_matches(cfg: &BPAConfig) -> Result<bool> {
    let (count, value) = oracle_compare(cfg)?;
    Ok(Rational::from_integer(count) == value)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    /// Weakly decreasing positive parts.
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `k_1..k_n`: how often each part size occurs.
    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut k = vec![0; n];
        for &p in &self.parts {
            k[p - 1] += 1;
        }
        k
    }
}

/// All partitions of `n` into exactly `p` positive parts, largest first part first.
pub fn partitions_with_parts(n: usize, p: usize) -> Result<Vec<Partition>> {
    if p > n {
        return Err(Error::IndexOutOfRange(format!("cannot split {n} into {p} positive parts")));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p);
    fill_parts(n, p, n, &mut current, &mut out);
    Ok(out)
}

fn fill_parts(
    rest: usize,
    slots: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if slots == 0 {
        if rest == 0 {
            out.push(Partition { parts: current.clone() });
        }
        return;
    }
    if slots > rest {
        return;
    }
    // leave at least 1 for every other slot
    let hi = max_part.min(rest - (slots - 1));
    for part in (1..=hi).rev() {
        if part * slots < rest {
            break;
        }
        current.push(part);
        fill_parts(rest - part, slots - 1, part, current, out);
        current.pop();
    }
}

/// `p(n, k) = p(n-1, k-1) + p(n-k, k)`, the number of partitions of `n`
/// into exactly `k` parts.
pub fn partition_count(n: usize, k: usize) -> u64 {
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            table[i][j] = table[i - 1][j - 1] + table[i - j][j];
        }
    }
    table[n][k]
}
