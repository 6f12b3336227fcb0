//! Shrinking a failing instance toward a small one that still fails.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::arith::Rational;
use crate::error::{Error, Result};

use super::identities::{lookup, Instance, Outcome};

/// Values with `|p| + q` above this are never proposed.
const MAX_CANDIDATE_SIZE: u64 = 12;

fn size(v: &Rational) -> u64 {
    let s = v.numer().abs() + v.denom();
    u64::try_from(s).unwrap_or(u64::MAX)
}

/// `(|p| + q, negative)`: smaller is simpler.
fn complexity(v: &Rational) -> (u64, bool) {
    (size(v), v.is_negative())
}

/// Every rational simpler than `v`, simplest first.
fn simpler_than(v: &Rational) -> Vec<Rational> {
    let bound = complexity(v);
    let top = bound.0.min(MAX_CANDIDATE_SIZE + 1);
    let mut out = Vec::new();
    for s in 1..=top {
        for q in 1..=s {
            let p = s - q;
            for sign in [1i64, -1] {
                if p == 0 && sign < 0 {
                    continue;
                }
                let r = Rational::new(BigInt::from(sign * p as i64), BigInt::from(q));
                if size(&r) == s && complexity(&r) < bound {
                    out.push(r);
                }
            }
        }
    }
    out.sort_by_key(complexity);
    out.dedup();
    out
}

/// Greedy shrink: lower `n` first, then each parameter in key order, until
/// no single change keeps `fails` true.
pub fn minimize_with(fails: impl Fn(&Instance) -> bool, inst: &Instance) -> Instance {
    let mut cur = inst.clone();
    loop {
        let mut changed = false;
        if let Some(n) = (0..cur.n).find(|&n| fails(&Instance { n, ..cur.clone() })) {
            cur.n = n;
            changed = true;
        }
        let keys: Vec<String> = cur.params.keys().cloned().collect();
        for key in keys {
            let here = cur.params[&key].clone();
            for cand in simpler_than(&here) {
                let mut trial = cur.clone();
                trial.params.insert(key.clone(), cand);
                if fails(&trial) {
                    cur = trial;
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// Shrinks a failing instance of a registered identity.
pub fn counterexample_minimize(id: &str, inst: &Instance) -> Result<Instance> {
    let identity = lookup(id)?;
    let fails = |i: &Instance| matches!(identity.evaluate(i), Outcome::Fail { .. });
    if !fails(inst) {
        return Err(Error::NotFailing);
    }
    Ok(minimize_with(fails, inst))
}
