//! The identity registry: one entry per checkable statement, each with the
//! grid axes it ranges over and an evaluator for a single instance.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{as_nonneg_int, factorial, format_rational, from_usize, to_f64, Rational};
use crate::asymptotics::{closed_form_w_check, AsymptoticParams};
use crate::error::{Error, Result};
use crate::euler::{
    euler_convolution_outcome, euler_egf, euler_explicit, euler_recurrence_outcome, euler_via_a,
    EulerConvolutionOutcome, EulerParams, EulerRecurrenceOutcome,
};
use crate::exp_poly::{
    check_integral_rep, s_exp_egf, s_exp_explicit, shifted_egf_sides, spivey_sides, ExpPolyParams,
    SpiveyReading,
};
use crate::geom::{
    self, a_egf, a_explicit, a_recurrence, DerivativeConvolutionReading, PolyParams, Sides, SplitReading,
};
use crate::oracle::{count_gamma_cell, count_m_sections, oracle_compare, BPAConfig};
use crate::stirling::{
    orthogonality_entry, param_swap_check, stirling_egf_check, stirling_explicit, stirling_rec,
    StirlingParams,
};

use super::grid::GridSpec;

/// Relative tolerance for the quadrature check.
pub const INTEGRAL_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    /// Must hold everywhere; a failure is a bug.
    Hard,
    /// Outcome is reported, never enforced.
    Recorded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Stirling,
    #[serde(rename = "A")]
    A,
    Oracle,
    Exp,
    Euler,
    Asymptotics,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling => "stirling",
            Family::A => "A",
            Family::Oracle => "oracle",
            Family::Exp => "exp",
            Family::Euler => "euler",
            Family::Asymptotics => "asymptotics",
        }
    }

    pub const ALL: [Family; 6] =
        [Family::Stirling, Family::A, Family::Oracle, Family::Exp, Family::Euler, Family::Asymptotics];
}

/// A grid dimension other than `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    Lambda,
    Alpha,
    Beta,
    Gamma,
    X,
    Lambda2,
    Gamma2,
    /// `0..=m_max`
    M,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Lambda => "lambda",
            Axis::Alpha => "alpha",
            Axis::Beta => "beta",
            Axis::Gamma => "gamma",
            Axis::X => "x",
            Axis::Lambda2 => "lambda2",
            Axis::Gamma2 => "gamma2",
            Axis::M => "m",
        }
    }

    pub fn values(self, grid: &GridSpec) -> Vec<Rational> {
        let lams = |v: &[u32]| v.iter().map(|&l| from_usize(l as usize)).collect();
        match self {
            Axis::Lambda => lams(&grid.lambda),
            Axis::Alpha => grid.alpha.clone(),
            Axis::Beta => grid.beta.clone(),
            Axis::Gamma => grid.gamma.clone(),
            Axis::X => grid.x.clone(),
            Axis::Lambda2 => lams(&grid.lambda2),
            Axis::Gamma2 => grid.gamma2.clone(),
            Axis::M => (0..=grid.m_max).map(from_usize).collect(),
        }
    }
}

/// One point of an identity's grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    pub params: BTreeMap<String, Rational>,
    pub n: usize,
}

impl Instance {
    pub fn new(n: usize) -> Self {
        Instance { params: BTreeMap::new(), n }
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Result<&Rational> {
        self.params.get(name).ok_or_else(|| Error::InvalidConfig(format!("instance has no `{name}`")))
    }

    /// A parameter that must be a nonnegative integer.
    pub fn nat(&self, name: &str) -> Result<usize> {
        let v = self.get(name)?;
        as_nonneg_int(v)
            .map(|u| u as usize)
            .ok_or_else(|| Error::InvalidConfig(format!("`{name}` = {v} is not a nonnegative integer")))
    }

    fn lambda(&self, name: &str) -> Result<u32> {
        let v = self.nat(name)?;
        u32::try_from(v).map_err(|_| Error::InvalidConfig(format!("`{name}` too large")))
    }

    /// `name=value` pairs in key order, for reports.
    pub fn describe(&self) -> BTreeMap<String, String> {
        let mut out: BTreeMap<String, String> =
            self.params.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect();
        out.insert("n".into(), self.n.to_string());
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail {
        lhs: String,
        rhs: String,
    },
    /// The instance lies outside the identity's domain.
    Skip,
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    fn sides(s: &Sides) -> Outcome {
        if s.holds() {
            Outcome::Pass
        } else {
            Outcome::Fail { lhs: s.lhs.pretty(), rhs: s.rhs.pretty() }
        }
    }

    fn values(l: &Rational, r: &Rational) -> Outcome {
        if l == r {
            Outcome::Pass
        } else {
            Outcome::Fail { lhs: format_rational(l), rhs: format_rational(r) }
        }
    }

    fn flag(ok: bool, what: &str) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail { lhs: what.to_string(), rhs: "does not hold".to_string() }
        }
    }

    /// Prefixes both sides of a failure with an inner index, e.g. `k=2: `.
    fn at(self, label: &str) -> Outcome {
        match self {
            Outcome::Fail { lhs, rhs } => {
                Outcome::Fail { lhs: format!("{label}: {lhs}"), rhs: format!("{label}: {rhs}") }
            }
            other => other,
        }
    }
}

pub type Evaluator = fn(&Instance) -> Result<Outcome>;

pub struct Identity {
    pub id: &'static str,
    /// The statement being checked, as a formula string.
    pub anchor: &'static str,
    pub class: Class,
    pub family: Family,
    pub axes: &'static [Axis],
    pub n_min: usize,
    /// Upper bound on `n` below the grid's `n_max`, if any.
    pub n_cap: Option<usize>,
    pub eval: Evaluator,
}

impl Identity {
    /// Every instance in grid order: axes outermost in declaration order,
    /// `n` innermost.
    pub fn instances(&self, grid: &GridSpec) -> Vec<Instance> {
        let n_hi = self.n_cap.map_or(grid.n_max, |c| c.min(grid.n_max));
        let mut out = vec![BTreeMap::new()];
        for axis in self.axes {
            let values = axis.values(grid);
            out = out
                .into_iter()
                .flat_map(|m: BTreeMap<String, Rational>| {
                    values.iter().map(move |v| {
                        let mut m = m.clone();
                        m.insert(axis.name().to_string(), v.clone());
                        m
                    })
                })
                .collect();
        }
        out.into_iter()
            .flat_map(|params| (self.n_min..=n_hi).map(move |n| Instance { params: params.clone(), n }))
            .collect()
    }

    /// Evaluates one instance; domain errors become [`Outcome::Skip`] and
    /// internal inconsistencies become failures.
    pub fn evaluate(&self, inst: &Instance) -> Outcome {
        match (self.eval)(inst) {
            Ok(o) => o,
            Err(Error::Inconsistent(msg)) => Outcome::Fail { lhs: msg, rhs: String::new() },
            Err(_) => Outcome::Skip,
        }
    }
}

// ---------------------------------------------------------------------------
// Parameter extraction.

fn poly(i: &Instance) -> Result<PolyParams> {
    Ok(PolyParams::new(
        i.lambda("lambda")?,
        i.get("alpha")?.clone(),
        i.get("beta")?.clone(),
        i.get("gamma")?.clone(),
    ))
}

fn poly2(i: &Instance) -> Result<(PolyParams, PolyParams)> {
    let p1 = poly(i)?;
    let p2 =
        PolyParams::new(i.lambda("lambda2")?, p1.alpha.clone(), p1.beta.clone(), i.get("gamma2")?.clone());
    Ok((p1, p2))
}

fn stir(i: &Instance) -> Result<StirlingParams> {
    Ok(StirlingParams::new(i.get("alpha")?.clone(), i.get("beta")?.clone(), i.get("gamma")?.clone()))
}

fn exp_params(i: &Instance) -> Result<ExpPolyParams> {
    Ok(ExpPolyParams::new(i.get("alpha")?.clone(), i.get("beta")?.clone(), i.get("gamma")?.clone()))
}

fn euler_params(i: &Instance, lambda: &str) -> Result<EulerParams> {
    Ok(EulerParams::new(i.lambda(lambda)?, i.get("alpha")?.clone(), i.get("beta")?.clone()))
}

fn first_failure(items: impl IntoIterator<Item = (String, Outcome)>) -> Outcome {
    let mut any_pass = false;
    for (label, o) in items {
        match o {
            Outcome::Fail { .. } => return o.at(&label),
            Outcome::Pass => any_pass = true,
            Outcome::Skip => {}
        }
    }
    if any_pass {
        Outcome::Pass
    } else {
        Outcome::Skip
    }
}

// ---------------------------------------------------------------------------
// Evaluators: Stirling family.

fn ev_stirling_routes(i: &Instance) -> Result<Outcome> {
    let p = stir(i)?;
    if p.beta.is_zero() {
        return Ok(Outcome::Skip);
    }
    let n = i.n;
    let mut items = Vec::new();
    for k in 0..=n {
        items.push((
            format!("k={k}"),
            Outcome::values(&stirling_explicit(&p, n, k)?, &stirling_rec(&p, n, k)),
        ));
    }
    Ok(first_failure(items))
}

fn ev_stirling_egf(i: &Instance) -> Result<Outcome> {
    let p = stir(i)?;
    if p.beta.is_zero() {
        return Ok(Outcome::Skip);
    }
    let n = i.n;
    let mut items = Vec::new();
    for k in 0..=n {
        let series = stirling_egf_check(&p, k as u32, n)?;
        let got = series.egf_value(n) / factorial(k);
        items.push((format!("k={k}"), Outcome::values(&got, &stirling_rec(&p, n, k))));
    }
    Ok(first_failure(items))
}

fn ev_orthogonality(i: &Instance) -> Result<Outcome> {
    let p = stir(i)?;
    let n = i.n;
    Ok(first_failure((0..=n).map(|m| {
        let want = if m == n { Rational::one() } else { Rational::zero() };
        (format!("m={m}"), Outcome::values(&orthogonality_entry(&p, n, m), &want))
    })))
}

fn ev_param_swap(i: &Instance, printed: bool) -> Result<Outcome> {
    let p = stir(i)?;
    let n = i.n;
    Ok(first_failure((0..=n).map(|k| {
        let o = param_swap_check(&p, n, k);
        let out = if printed {
            Outcome::values(&o.printed_lhs, &o.printed_rhs)
        } else {
            Outcome::values(&o.resolved_lhs, &o.resolved_rhs)
        };
        (format!("k={k}"), out)
    })))
}

fn ev_param_swap_printed(i: &Instance) -> Result<Outcome> {
    ev_param_swap(i, true)
}

fn ev_param_swap_resolved(i: &Instance) -> Result<Outcome> {
    ev_param_swap(i, false)
}

// ---------------------------------------------------------------------------
// Evaluators: A family.

fn ev_explicit_egf(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::explicit_egf_sides(&poly(i)?, i.n)))
}

fn ev_a_routes(i: &Instance) -> Result<Outcome> {
    let p = poly(i)?;
    let explicit = a_explicit(&p, i.n);
    let series = a_egf(&p, i.n).values.pop().expect("nonempty");
    let rec = a_recurrence(&p, i.n);
    Ok(first_failure([
        ("egf".to_string(), Outcome::sides(&Sides::new(explicit.clone(), series))),
        ("recurrence".to_string(), Outcome::sides(&Sides::new(explicit, rec))),
    ]))
}

fn ev_recurrence(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::recurrence_sides(&poly(i)?, i.n)))
}

fn ev_convolution_recurrence(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::convolution_recurrence_sides(&poly(i)?, i.n)))
}

fn ev_split_statement(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::split_sides(&poly(i)?, i.n, SplitReading::Statement)))
}

fn ev_split_proof(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::split_sides(&poly(i)?, i.n, SplitReading::Proof)))
}

fn ev_inclusion_exclusion(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::inclusion_exclusion_sides(&poly(i)?, i.n)))
}

fn ev_inclusion_exclusion_corrected(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::inclusion_exclusion_corrected_sides(&poly(i)?, i.n)))
}

fn ev_gamma_expansion(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::gamma_expansion_sides(&poly(i)?, i.n)))
}

fn ev_x_shift(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::x_shift_sides(&poly(i)?, i.n)))
}

fn ev_lambda_shift(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::lambda_shift_sides(&poly(i)?, i.n)))
}

fn ev_reflection_first(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::reflection_first_sides(&poly(i)?, i.n)))
}

fn ev_reflection_second(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::reflection_second_sides(&poly(i)?, i.n)))
}

fn ev_reflection_second_corrected(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::reflection_second_corrected_sides(&poly(i)?, i.n)))
}

fn ev_reflection_expansion(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::reflection_expansion_sides(&poly(i)?, i.n)))
}

fn ev_derivative_convolution(i: &Instance, reading: DerivativeConvolutionReading) -> Result<Outcome> {
    let (p1, p2) = poly2(i)?;
    Ok(Outcome::sides(&geom::derivative_convolution_sides(&p1, &p2, i.n, reading)?))
}

fn ev_derivative_convolution_printed(i: &Instance) -> Result<Outcome> {
    ev_derivative_convolution(i, DerivativeConvolutionReading::Printed)
}

fn ev_derivative_convolution_no_x(i: &Instance) -> Result<Outcome> {
    ev_derivative_convolution(i, DerivativeConvolutionReading::NoX)
}

fn ev_derivative_convolution_corrected(i: &Instance) -> Result<Outcome> {
    ev_derivative_convolution(i, DerivativeConvolutionReading::Corrected)
}

fn ev_convolution(i: &Instance) -> Result<Outcome> {
    let (p1, p2) = poly2(i)?;
    Ok(Outcome::sides(&geom::convolution_sides(&p1, &p2, i.n)?))
}

fn ev_shift_intermediate(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::sides(&geom::shift_intermediate_sides(&poly(i)?, i.n, i.nat("m")?)))
}

fn shift_domain(p: &PolyParams) -> bool {
    p.lambda >= 1 && !p.beta.is_zero()
}

fn ev_shift_final(i: &Instance) -> Result<Outcome> {
    let p = poly(i)?;
    if !shift_domain(&p) {
        return Ok(Outcome::Skip);
    }
    Ok(Outcome::sides(&geom::shift_final_sides(&p, i.n, i.nat("m")?)))
}

fn ev_shift_final_corrected(i: &Instance) -> Result<Outcome> {
    let p = poly(i)?;
    if !shift_domain(&p) {
        return Ok(Outcome::Skip);
    }
    Ok(Outcome::sides(&geom::shift_final_corrected_sides(&p, i.n, i.nat("m")?)))
}

// ---------------------------------------------------------------------------
// Evaluators: oracle family.

fn bpa_config(i: &Instance) -> Result<BPAConfig> {
    let to_u64 = |name: &str| -> Result<u64> { Ok(i.nat(name)? as u64) };
    Ok(BPAConfig {
        n: i.n,
        lambda: i.lambda("lambda")?,
        alpha: to_u64("alpha")?,
        beta: to_u64("beta")?,
        gamma: to_u64("gamma")?,
        x: to_u64("x")?,
    })
}

fn ev_oracle_bpa(i: &Instance) -> Result<Outcome> {
    let cfg = bpa_config(i)?;
    let (count, value) = oracle_compare(&cfg)?;
    Ok(Outcome::values(&Rational::from_integer(count), &value))
}

fn ev_oracle_sections(i: &Instance) -> Result<Outcome> {
    let alpha = i.nat("alpha")? as u64;
    let beta = i.nat("beta")? as u64;
    let n = i.n;
    let mut items = Vec::new();
    for k in 0..=n {
        let count = Rational::from_integer(count_m_sections(n, k, alpha, beta)?);
        let b = from_usize(beta as usize);
        let want = crate::arith::neg_one_pow(n + k)
            * crate::arith::pow(&b, k)
            * factorial(k)
            * stirling_rec(&StirlingParams::new(from_usize(alpha as usize), -b, Rational::zero()), n, k);
        items.push((format!("k={k}"), Outcome::values(&count, &want)));
    }
    Ok(first_failure(items))
}

fn ev_oracle_gamma_cell(i: &Instance) -> Result<Outcome> {
    let alpha = i.nat("alpha")? as u64;
    let gamma = i.nat("gamma")? as u64;
    let count = Rational::from_integer(count_gamma_cell(i.n, alpha, gamma)?);
    let want = crate::arith::gff(i.get("gamma")?, &-i.get("alpha")?.clone(), i.n);
    Ok(Outcome::values(&count, &want))
}

// ---------------------------------------------------------------------------
// Evaluators: exponential polynomials.

fn ev_exp_routes(i: &Instance) -> Result<Outcome> {
    let p = exp_params(i)?;
    let x = i.get("x")?;
    let series = s_exp_egf(&p, x, i.n)?;
    Ok(Outcome::values(&s_exp_explicit(&p, i.n).eval(x), &series.egf_value(i.n)))
}

fn ev_spivey(i: &Instance, reading: SpiveyReading) -> Result<Outcome> {
    let p = exp_params(i)?;
    let (l, r) = spivey_sides(&p, i.get("x")?, i.n, i.nat("m")?, reading);
    Ok(Outcome::values(&l, &r))
}

fn ev_spivey_printed(i: &Instance) -> Result<Outcome> {
    ev_spivey(i, SpiveyReading::Printed)
}

fn ev_spivey_corrected(i: &Instance) -> Result<Outcome> {
    ev_spivey(i, SpiveyReading::Corrected)
}

fn ev_spivey_classical(i: &Instance) -> Result<Outcome> {
    ev_spivey(i, SpiveyReading::Classical)
}

fn ev_shifted_egf(i: &Instance) -> Result<Outcome> {
    let p = exp_params(i)?;
    let (l, r) = shifted_egf_sides(&p, i.get("x")?, i.nat("m")?, i.n)?;
    Ok(Outcome::values(&l[i.n], &r[i.n]))
}

fn ev_integral(i: &Instance) -> Result<Outcome> {
    let p = poly(i)?;
    let x = to_f64(i.get("x")?);
    let (quad, exact) = check_integral_rep(&p, x, i.n)?;
    let ok = (quad - exact).abs() <= INTEGRAL_TOLERANCE * exact.abs().max(1.0);
    Ok(if ok {
        Outcome::Pass
    } else {
        Outcome::Fail { lhs: format!("{quad:.12e}"), rhs: format!("{exact:.12e}") }
    })
}

// ---------------------------------------------------------------------------
// Evaluators: Euler family.

fn ev_euler_routes(i: &Instance) -> Result<Outcome> {
    let p = euler_params(i, "lambda")?;
    let g = i.get("gamma")?;
    let want = euler_egf(&p, g, i.n).egf_value(i.n);
    let via_a = euler_via_a(&p, g, i.n)?;
    let (e1, e2) = euler_explicit(&p, g, i.n);
    Ok(first_failure([
        ("A-route".to_string(), Outcome::values(&via_a, &want)),
        ("explicit-1".to_string(), Outcome::values(&e1, &want)),
        ("explicit-2".to_string(), Outcome::values(&e2, &want)),
    ]))
}

fn euler_rec(i: &Instance) -> Result<EulerRecurrenceOutcome> {
    let p = euler_params(i, "lambda")?;
    Ok(euler_recurrence_outcome(&p, i.get("gamma")?, i.n, i.nat("m")?))
}

fn opt_flag(v: Option<bool>, what: &str) -> Outcome {
    v.map_or(Outcome::Skip, |b| Outcome::flag(b, what))
}

fn ev_euler_rec1(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_rec(i)?.rec1, "rec1"))
}

fn ev_euler_rec1_corrected(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_rec(i)?.rec1_corrected, "rec1.corrected"))
}

fn ev_euler_rec2(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_rec(i)?.rec2, "rec2"))
}

fn ev_euler_rec2_alt(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_rec(i)?.rec2_alt, "rec2.alt"))
}

fn ev_euler_rec2_corrected(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_rec(i)?.rec2_corrected, "rec2.corrected"))
}

fn ev_euler_rec3(i: &Instance) -> Result<Outcome> {
    Ok(opt_flag(euler_rec(i)?.rec3, "rec3"))
}

fn ev_euler_rec3_corrected(i: &Instance) -> Result<Outcome> {
    Ok(opt_flag(euler_rec(i)?.rec3_corrected, "rec3.corrected"))
}

fn euler_conv(i: &Instance) -> Result<EulerConvolutionOutcome> {
    let p1 = euler_params(i, "lambda")?;
    let p2 = euler_params(i, "lambda2")?;
    euler_convolution_outcome(&p1, &p2, i.get("gamma")?, i.get("gamma2")?, i.n)
}

fn ev_euler_conv1(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_conv(i)?.conv1, "conv1"))
}

fn ev_euler_conv1_corrected(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_conv(i)?.conv1_corrected, "conv1.corrected"))
}

fn ev_euler_conv2(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_conv(i)?.conv2, "conv2"))
}

fn ev_euler_conv3_lambda2(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_conv(i)?.conv3_lambda2, "conv3"))
}

fn ev_euler_conv3_lambda_sum(i: &Instance) -> Result<Outcome> {
    Ok(Outcome::flag(euler_conv(i)?.conv3_lambda_sum, "conv3"))
}

// ---------------------------------------------------------------------------
// Evaluators: asymptotics.

fn ev_closed_form_w(i: &Instance) -> Result<Outcome> {
    let p = AsymptoticParams::new(
        i.get("alpha")?.clone(),
        i.get("beta")?.clone(),
        i.get("gamma")?.clone(),
        i.get("x")?.clone(),
    );
    Ok(Outcome::flag(closed_form_w_check(&p, i.n)?, "closed-form W(n,0..2)"))
}

// ---------------------------------------------------------------------------
// The registry.

use Axis::*;

const STIR: &[Axis] = &[Alpha, Beta, Gamma];
const POLY: &[Axis] = &[Lambda, Alpha, Beta, Gamma];
const POLY_M: &[Axis] = &[Lambda, Alpha, Beta, Gamma, M];
const CONV: &[Axis] = &[Lambda, Lambda2, Alpha, Beta, Gamma, Gamma2];
const EXP: &[Axis] = &[Alpha, Beta, Gamma, X];
const EXP_M: &[Axis] = &[Alpha, Beta, Gamma, X, M];
const POLY_X: &[Axis] = &[Lambda, Alpha, Beta, Gamma, X];

/// The oracle enumerates, so its grid stops here.
pub const ORACLE_N_CAP: usize = 6;

macro_rules! identity {
    ($id:expr, $class:ident, $family:ident, $axes:expr, $eval:expr, $anchor:expr) => {
        identity!($id, $class, $family, $axes, $eval, $anchor, 0, None)
    };
    ($id:expr, $class:ident, $family:ident, $axes:expr, $eval:expr, $anchor:expr, $n_min:expr, $n_cap:expr) => {
        Identity {
            id: $id,
            anchor: $anchor,
            class: Class::$class,
            family: Family::$family,
            axes: $axes,
            n_min: $n_min,
            n_cap: $n_cap,
            eval: $eval,
        }
    };
}

pub static REGISTRY: &[Identity] = &[
    // Stirling numbers
    identity!("stirling.routes", Hard, Stirling, STIR, ev_stirling_routes,
        "S(n,k) = (1/(b^k k!)) sum_s (-1)^(k-s) C(k,s) (b s + g | a)_n = triangle recurrence"),
    identity!("stirling.egf", Hard, Stirling, STIR, ev_stirling_egf,
        "k! sum_n S(n,k) t^n/n! = (1+a t)^(g/a) ([(1+a t)^(b/a) - 1]/b)^k"),
    identity!("stirling.orthogonality", Hard, Stirling, STIR, ev_orthogonality,
        "sum_k S(n,k; b,a,-g) S(k,m; a,b,g) = delta(n,m)"),
    identity!("stirling.param-swap.printed", Recorded, Stirling, STIR, ev_param_swap_printed,
        "S(n,k,a,g,b) = sum_s C(n,s) (g|a)_(n-s) S(s,k,a,b,g)"),
    identity!("stirling.param-swap.resolved", Recorded, Stirling, STIR, ev_param_swap_resolved,
        "S(n,k,a,b,g) = sum_s C(n,s) (g|a)_(n-s) S(s,k,a,b,0)"),
    // Geometric polynomials
    identity!("a.explicit-egf", Hard, A, POLY, ev_explicit_egf,
        "sum_k C(k+l-1,k) (-1)^(n+k) b^k k! S(n,k,a,-b,-g) x^k = n! [t^n] (1-a t)^(-g/a) [1 - x((1-a t)^(-b/a) - 1)]^(-l)"),
    identity!("a.routes", Hard, A, POLY, ev_a_routes,
        "explicit sum = series coefficient = first-element recurrence chain"),
    identity!("a.recurrence", Hard, A, POLY, ev_recurrence,
        "A^l_(n+1)(g) = g A^l_n(g+a) + x l b A^(l+1)_n(g+b+a)"),
    identity!("a.convolution-recurrence", Hard, A, POLY, ev_convolution_recurrence,
        "A^l_(n+1)(g) = g A^l_n(g+a) + x l b sum_k C(n,k) A^1_k(g+b+a) A^l_(n-k)(0)"),
    identity!("a.split.statement", Recorded, A, POLY, ev_split_statement,
        "A^l_(n+1)(g) = g A^l_n(g+a) + sum_k C(n,k) A^(0)_k(a,b,g) A^l_(n-k+1)(0)"),
    identity!("a.split.proof", Recorded, A, POLY, ev_split_proof,
        "A^l_(n+1)(g) = g A^l_n(g+a) + sum_k C(n,k) A^l_k(a,0,g) A^l_(n-k+1)(0)"),
    identity!("a.inclusion-exclusion", Recorded, A, POLY, ev_inclusion_exclusion,
        "A^l_n(a,b,0) = sum_k C(n,k) A^l_(n-k)(a,b,g) A^0_k(a,0,g) (-1)^k"),
    identity!("a.inclusion-exclusion.corrected", Hard, A, POLY, ev_inclusion_exclusion_corrected,
        "A^l_n(a,b,0) = sum_k C(n,k) A^l_(n-k)(a,b,g) A^0_k(-a,0,g) (-1)^k"),
    identity!("a.gamma-expansion", Hard, A, POLY, ev_gamma_expansion,
        "A^l_n = sum_k C(k+l-1,k) sum_i C(n,i) x^k (-1)^(k+i) b^k k! S(i,k,a,-b,0) (g|-a)_(n-i)"),
    identity!("a.x-shift", Hard, A, POLY, ev_x_shift,
        "x A^(l+1)_n(g+b) = (x+1) A^(l+1)_n(g) - A^l_n(g)"),
    identity!("a.lambda-shift", Hard, A, POLY, ev_lambda_shift,
        "A^l_(n+1)(g-a) - (x+1) l b A^(l+1)_n(g) = (g-a-l b) A^l_n(g)"),
    identity!("a.reflection.first", Hard, A, POLY, ev_reflection_first,
        "A^(l,x)_n(a,b,g+b l) = A^(l,-x-1)_n(a,-b,g)"),
    identity!("a.reflection.second", Recorded, A, POLY, ev_reflection_second,
        "A^(l,-x-1)_n(a,-b,g) = (-1)^n A^(l,-x-1)_n(a,b,-g)"),
    identity!("a.reflection.second.corrected", Hard, A, POLY, ev_reflection_second_corrected,
        "A^(l,-x-1)_n(a,-b,g) = (-1)^n A^(l,-x-1)_n(-a,b,-g)"),
    identity!("a.reflection-expansion", Hard, A, POLY, ev_reflection_expansion,
        "A^l_n(g) = (-1)^n sum_k C(k+l-1,k) (-b)^k k! S(n,k,a,b,b l-g) (x+1)^k"),
    identity!("a.derivative-convolution", Recorded, A, CONV, ev_derivative_convolution_printed,
        "x b (l1+l2) sum_k C(n,k) A^l1_k(a+b+g1) A^l2_(n-k)(g2) = A^(l1+l2)_(n+1)(g1+g2) - (g1+g2) A^(l1+l2)_n(g1+g2+a)"),
    identity!("a.derivative-convolution.no-x", Recorded, A, CONV, ev_derivative_convolution_no_x,
        "b (l1+l2) sum_k C(n,k) A^l1_k(a+b+g1) A^l2_(n-k)(g2) = A^(l1+l2)_(n+1)(g1+g2) - (g1+g2) A^(l1+l2)_n(g1+g2+a)"),
    identity!("a.derivative-convolution.corrected", Recorded, A, CONV, ev_derivative_convolution_corrected,
        "x b (l1+l2) sum_k C(n,k) A^(l1+1)_k(a+b+g1) A^l2_(n-k)(g2) = A^(l1+l2)_(n+1)(g1+g2) - (g1+g2) A^(l1+l2)_n(g1+g2+a)"),
    identity!("a.convolution", Hard, A, CONV, ev_convolution,
        "sum_k C(n,k) A^l1_k(a+b+g1) A^l2_(n-k)(g2) = A^(l1+l2)_n(a+b+g1+g2)"),
    identity!("shift.intermediate", Hard, A, POLY_M, ev_shift_intermediate,
        "(-1)^m A^l_(n+m)(r) = sum_k S(m,k,a,-b,-r) C(k+l-1,k) k! (-b x)^k A^(l+k)_n(r+m a+k b)"),
    identity!("shift.final", Recorded, A, POLY_M, ev_shift_final,
        "A^(l+m,-x-1)_n(a,-b,g) = ((-1)^m/((l)^(m) (b x)^m)) sum_k (-1)^k S1(m,k,a,-b,-g+m a-l b) A^l_(n+k)(a,b,g-m a+l b)"),
    identity!("shift.final.corrected", Hard, A, POLY_M, ev_shift_final_corrected,
        "(l)^(m) (-b x)^m A^(l+m,-x-1)_n(a,-b,g) = sum_k (-1)^k S1(m,k,-a,-b,a-g-l b) A^l_(n+k)(a,b,g-k a+l b)"),
    // Brute-force oracle
    identity!("oracle.bpa", Hard, Oracle, POLY_X, ev_oracle_bpa,
        "#barred preferential arrangements = A^(l,x)_n(a,b,g) at integer x", 0, Some(ORACLE_N_CAP)),
    identity!("oracle.m-sections", Hard, Oracle, &[Alpha, Beta], ev_oracle_sections,
        "#surjective section fillings = (-1)^(n+k) b^k k! S(n,k,a,-b,0)", 0, Some(ORACLE_N_CAP)),
    identity!("oracle.gamma-cell", Hard, Oracle, &[Alpha, Gamma], ev_oracle_gamma_cell,
        "#gamma-cell fillings = (g|-a)_n", 0, Some(ORACLE_N_CAP)),
    // Exponential polynomials
    identity!("exp.routes", Hard, Exp, EXP, ev_exp_routes,
        "sum_k S(n,k,a,b,r) x^k = n! [t^n] (1+a t)^(r/a) exp((x/b)((1+a t)^(b/a) - 1))"),
    identity!("spivey.printed", Recorded, Exp, EXP_M, ev_spivey_printed,
        "S_(n+m)(x) = sum_k sum_j C(n,k) S(n,k) (j b - m a | a)_(n-k) S_k(x) x^j"),
    identity!("spivey.corrected", Recorded, Exp, EXP_M, ev_spivey_corrected,
        "S_(n+m)(x) = sum_k sum_j C(n,k) S(m,j) (j b - m a | a)_(n-k) S_k(x) x^j"),
    identity!("spivey.classical", Recorded, Exp, EXP_M, ev_spivey_classical,
        "S_(n+m)(x) = sum_k sum_j C(m,k) S(n,j) (j b - n a | a)_(m-k) S_k(x) x^j"),
    identity!("exp.shifted-egf", Hard, Exp, EXP_M, ev_shifted_egf,
        "sum_n S_(n+m)(x) t^n/n! = (1+a t)^((r-m a)/a) exp((x/b)(C-1)) sum_j S(m,j) x^j C^j, C = (1+a t)^(b/a)"),
    identity!("exp.integral", Hard, Exp, POLY_X, ev_integral,
        "A^l_n(a,b,r) = ((-1)^n/Gamma(l)) int_0^inf z^(l-1) S_n(-b x z; a,-b,-r) e^(-z) dz"),
    // Euler polynomials
    identity!("euler.routes", Hard, Euler, POLY, ev_euler_routes,
        "n! [t^n] [2/((1+a t)^(b/a)+1)]^l (1+a t)^(g/a) = (-1)^n A^(l,-1/2)_n(a,-b,-g) = A^(l,-1/2)_n(-a,b,g) = both explicit sums"),
    identity!("euler.rec1", Recorded, Euler, POLY_M, ev_euler_rec1,
        "E^(l+1)_n(g) = 2 E^l_n(g) - E^l_n(g+b)"),
    identity!("euler.rec1.corrected", Recorded, Euler, POLY_M, ev_euler_rec1_corrected,
        "E^(l+1)_n(g+b) = 2 E^l_n(g) - E^(l+1)_n(g)"),
    identity!("euler.rec2", Recorded, Euler, POLY_M, ev_euler_rec2,
        "E^l_(n+1)(g) = (g-l b) E^l_n(g-a) + l b E^l_n(g-a) - (l b/2) E^l_n(g+b-a)"),
    identity!("euler.rec2.alt", Recorded, Euler, POLY_M, ev_euler_rec2_alt,
        "E^l_(n+1)(g) = (g-l b) E^l_n(g-a) + l b E^l_n(g+b-a) - (l b/2) E^l_n(g+b-a)"),
    identity!("euler.rec2.corrected", Recorded, Euler, POLY_M, ev_euler_rec2_corrected,
        "E^l_(n+1)(g) = g E^l_n(g-a) - (l b/2) E^(l+1)_n(g+b-a)"),
    identity!("euler.rec3", Recorded, Euler, POLY_M, ev_euler_rec3,
        "E^(l+m)_n(a,b,-g) = (2^m/((l)^(m) b^m)) sum_k S1(m,k,a,-b,m a-l b-g) E^l_(n+k)(a,-b,m a-l b-g)"),
    identity!("euler.rec3.corrected", Recorded, Euler, POLY_M, ev_euler_rec3_corrected,
        "E^(l+m)_n(a,-b,g) = (2^m/((l)^(m) b^m)) sum_k S1(m,k,a,-b,-a-g-l b) (-1)^k E^l_(n+k)(a,b,g+k a+l b)"),
    identity!("euler.conv1", Recorded, Euler, CONV, ev_euler_conv1,
        "b (l1+l2) sum_k C(n,k) E^l1_k(a+g1-b) E^l2_(n-k)(g2) = 2(g1+g2) E^(l1+l2)_n(g1+g2-a) - 2 E^(l1+l2)_(n+1)(g1+g2)"),
    identity!("euler.conv1.corrected", Recorded, Euler, CONV, ev_euler_conv1_corrected,
        "b (l1+l2) sum_k C(n,k) E^(l1+1)_k(g1+b-a) E^l2_(n-k)(g2) = 2(g1+g2) E^(l1+l2)_n(g1+g2-a) - 2 E^(l1+l2)_(n+1)(g1+g2)"),
    identity!("euler.conv2", Recorded, Euler, CONV, ev_euler_conv2,
        "sum_k C(n,k) E^l1_k(a+g1-b) E^l2_(n-k)(g2) = E^(l1+l2)_n(a+g1+g2-b)"),
    identity!("euler.conv3.lambda2", Recorded, Euler, CONV, ev_euler_conv3_lambda2,
        "sum_k C(n,k) (-1)^(n-k) E^l1_k(-a,b,a+b-g1) E^l2_(n-k)(a,b,g2+b l2) = E^(l1+l2)_n(-a,b,a+b-g1-g2)"),
    identity!("euler.conv3.lambda-sum", Recorded, Euler, CONV, ev_euler_conv3_lambda_sum,
        "sum_k C(n,k) (-1)^(n-k) E^l1_k(-a,b,a+b-g1) E^l2_(n-k)(a,b,g2+b(l1+l2)) = E^(l1+l2)_n(-a,b,a+b-g1-g2)"),
    // Asymptotics
    identity!("asym.closed-form", Hard, Asymptotics, EXP, ev_closed_form_w,
        "W(n,0) = a1^n/n!, W(n,1) = a1^(n-2) a2/(n-2)!, W(n,2) = a1^(n-3) a3/(n-3)! + a1^(n-4) a2^2/(2!(n-4)!)", 4, None),
];

pub fn lookup(id: &str) -> Result<&'static Identity> {
    REGISTRY.iter().find(|i| i.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Resolves selectors (identity ids or family names) to registry entries,
/// in registry order and without duplicates.
pub fn resolve(selectors: &[String]) -> Result<Vec<&'static Identity>> {
    for s in selectors {
        let known = REGISTRY.iter().any(|i| i.id == s) || Family::ALL.iter().any(|f| f.name() == s);
        if !known {
            return Err(Error::UnknownIdentity(s.clone()));
        }
    }
    Ok(REGISTRY.iter().filter(|i| selectors.iter().any(|s| s == i.id || s == i.family.name())).collect())
}
