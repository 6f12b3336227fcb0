//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Timing budgets are part of each criterion.

use std::time::{Duration, Instant};

use geomstir_core::arith::{from_usize, rat, ratio};
use geomstir_core::asymptotics::{
    a_coefficients, closed_form_w_check, error_decay_report, hsu_expansion, AsymptoticParams, ExpansionInput,
};
use geomstir_core::euler::{
    classical_euler_polynomial, euler_egf, euler_explicit, euler_polynomial, euler_via_a,
};
use geomstir_core::exp_poly::check_integral_rep;
use geomstir_core::geom::{a_egf, a_explicit, a_recurrence};
use geomstir_core::harness::{run_suite, GridSpec};
use geomstir_core::oracle::{count_bpa, oracle_compare};
use geomstir_core::stirling::{orthogonality_entry, stirling_explicit, stirling_rec};
use geomstir_core::{BPAConfig, EulerParams, PolyParams, Rational, StirlingParams, XPolynomial};
use num_traits::{One, Zero};

/// Relative tolerance for the quadrature criterion.
const INTEGRAL_RTOL: f64 = 1e-8;
/// Allowed factor between observed and expected error ratios.
const DECAY_FACTOR: f64 = 2.0;

struct Verdict {
    ok: bool,
    detail: String,
}

impl Verdict {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Verdict { ok, detail: detail.into() }
    }
}

fn run(id: u32, name: &str, budget: Option<Duration>, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let v = f();
    let took = start.elapsed();
    let in_time = budget.is_none_or(|b| took <= b);
    let ok = v.ok && in_time;
    let timing = match budget {
        Some(b) => format!("{:.2}s of {}s", took.as_secs_f64(), b.as_secs()),
        None => format!("{:.2}s, no budget", took.as_secs_f64()),
    };
    println!(
        "{} criterion {id}: {name} [{timing}]{} {}",
        if ok { "PASS" } else { "FAIL" },
        if in_time { "" } else { " over budget" },
        v.detail
    );
    ok
}

fn q(p: i64, d: i64) -> Rational {
    ratio(p, d)
}

fn stirling_triples() -> Vec<StirlingParams> {
    [
        (q(0, 1), q(1, 1), q(0, 1)),
        (q(1, 1), q(-1, 1), q(0, 1)),
        (q(1, 1), q(1, 1), q(1, 1)),
        (q(-1, 1), q(1, 1), q(0, 1)),
        (q(1, 2), q(1, 1), q(1, 3)),
        (q(2, 1), q(-3, 1), q(1, 1)),
        (q(-1, 3), q(2, 5), q(-7, 2)),
        (q(3, 4), q(-1, 2), q(5, 1)),
        (q(0, 1), q(7, 3), q(-1, 1)),
        (q(5, 2), q(3, 1), q(-2, 3)),
        (q(-2, 1), q(-1, 1), q(1, 2)),
    ]
    .into_iter()
    .map(|(a, b, g)| StirlingParams::new(a, b, g))
    .collect()
}

fn criterion1() -> Verdict {
    let triples = stirling_triples();
    let mut checked = 0;
    for p in &triples {
        for n in 0..=16 {
            for k in 0..=n {
                match stirling_explicit(p, n, k) {
                    Ok(v) if v == stirling_rec(p, n, k) => checked += 1,
                    _ => return Verdict::new(false, format!("mismatch at {p:?} n={n} k={k}")),
                }
            }
        }
    }
    Verdict::new(true, format!("{} triples, {checked} entries equal", triples.len()))
}

fn criterion2() -> Verdict {
    let triples = stirling_triples();
    for p in &triples {
        for n in 0..=12 {
            for m in 0..=12 {
                let want = if n == m { Rational::one() } else { Rational::zero() };
                if orthogonality_entry(p, n, m) != want {
                    return Verdict::new(false, format!("entry ({n},{m}) at {p:?}"));
                }
            }
        }
    }
    Verdict::new(true, format!("{} triples, 13x13 identity", triples.len()))
}

fn poly_points() -> Vec<PolyParams> {
    vec![
        PolyParams::ints(1, 0, 1, 0),
        PolyParams::ints(1, 0, 1, 2),
        PolyParams::ints(0, 1, 1, 1),
        PolyParams::ints(2, 1, 1, 1),
        PolyParams::ints(3, -1, 2, 0),
        PolyParams::new(2, q(1, 2), q(1, 1), q(-1, 3)),
        PolyParams::new(1, q(-2, 3), q(3, 2), q(1, 1)),
        PolyParams::new(4, q(1, 1), q(-1, 2), q(5, 4)),
        PolyParams::new(2, q(0, 1), q(2, 7), q(-1, 1)),
        PolyParams::new(5, q(3, 1), q(1, 1), q(0, 1)),
        PolyParams::new(1, q(1, 1), q(0, 1), q(2, 1)),
    ]
}

fn criterion3() -> Verdict {
    let points = poly_points();
    for p in &points {
        let series = a_egf(p, 16).values;
        for (n, from_series) in series.iter().enumerate() {
            let e = a_explicit(p, n);
            if &e != from_series || e != a_recurrence(p, n) {
                return Verdict::new(false, format!("routes differ at {p:?} n={n}"));
            }
        }
    }
    Verdict::new(true, format!("{} points, n <= 16", points.len()))
}

fn oracle_sequence(lambda: u32, gamma: u64, len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            let cfg = BPAConfig { n, lambda, alpha: 0, beta: 1, gamma, x: 1 };
            Rational::from_integer(count_bpa(&cfg).expect("valid config"))
        })
        .collect()
}

fn a_sequence(p: &PolyParams, len: usize) -> Vec<Rational> {
    (0..len).map(|n| a_explicit(p, n).eval(&rat(1))).collect()
}

fn criterion4() -> Verdict {
    let ints = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    let fubini = ints(&[1, 1, 3, 13, 75, 541]);
    let fubini_oracle = oracle_sequence(1, 0, 6);
    let fubini_a = a_sequence(&PolyParams::ints(1, 0, 1, 0), 6);
    let chain_start = ints(&[1, 3, 11]);
    let chain_oracle = oracle_sequence(1, 2, 6);
    let chain_a = a_sequence(&PolyParams::ints(1, 0, 1, 2), 6);
    let ok = fubini_oracle == fubini
        && fubini_a == fubini
        && chain_oracle == chain_a
        && chain_a[..3] == chain_start[..];
    let shown: Vec<String> = chain_a.iter().map(|v| v.to_string()).collect();
    Verdict::new(ok, format!("fubini 1,1,3,13,75,541; chain {}", shown.join(",")))
}

fn criterion5() -> Verdict {
    let (mut checked, mut invalid) = (0, 0);
    for lambda in 0..=3 {
        for alpha in 0..=2u64 {
            for beta in 0..=3u64 {
                for gamma in 0..=3u64 {
                    for x in 0..=3u64 {
                        for n in 0..=6 {
                            let cfg = BPAConfig { n, lambda, alpha, beta, gamma, x };
                            if cfg.validate().is_err() {
                                invalid += 1;
                                continue;
                            }
                            let (count, value) = oracle_compare(&cfg).expect("validated");
                            if Rational::from_integer(count) != value {
                                return Verdict::new(false, format!("mismatch at {cfg:?}"));
                            }
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Verdict::new(true, format!("{checked} configurations equal, {invalid} outside the invariants"))
}

/// The identities the criterion names, in their printed forms.
const CRITERION6_IDS: &[&str] = &[
    "a.explicit-egf",
    "a.routes",
    "a.recurrence",
    "a.convolution-recurrence",
    "a.inclusion-exclusion",
    "a.gamma-expansion",
    "a.x-shift",
    "a.lambda-shift",
    "a.reflection.first",
    "a.reflection.second",
    "a.reflection-expansion",
    "a.convolution",
    "shift.intermediate",
    "shift.final",
];

/// Corrected readings of the printed forms above that fail.
const CRITERION6_CORRECTED: &[&str] =
    &["a.inclusion-exclusion.corrected", "a.reflection.second.corrected", "shift.final.corrected"];

fn criterion6() -> Verdict {
    let mut grid = GridSpec::default_grid();
    let ids: Vec<String> = CRITERION6_IDS.iter().chain(CRITERION6_CORRECTED).map(|s| s.to_string()).collect();
    grid.select = Some(ids);
    let report = run_suite(&grid).expect("default grid runs");
    let mut ok = true;
    let mut lines = Vec::new();
    for e in &report.entries {
        let named = CRITERION6_IDS.contains(&e.id.as_str());
        if named && e.fail > 0 {
            ok = false;
        }
        let tag = if named { "" } else { " (corrected reading, informational)" };
        let mut line = format!("    {:<24} {}/{} pass{tag}", e.id, e.pass, e.grid_size);
        if let Some(c) = &e.first_counterexample {
            let at: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            line.push_str(&format!("; first failure at {}", at.join(" ")));
        }
        lines.push(line);
    }
    Verdict::new(ok, format!("default grid, n <= {}\n{}", grid.n_max, lines.join("\n")))
}

fn criterion7() -> Verdict {
    let points = [
        (EulerParams::ints(1, 0, 1), rat(0)),
        (EulerParams::ints(1, 0, 1), ratio(1, 3)),
        (EulerParams::ints(2, 1, 1), rat(1)),
        (EulerParams::ints(3, -1, 2), ratio(-1, 2)),
        (EulerParams::new(1, ratio(1, 2), rat(1)), rat(2)),
        (EulerParams::new(2, ratio(-2, 3), ratio(3, 2)), ratio(5, 7)),
        (EulerParams::new(0, rat(1), rat(1)), rat(1)),
    ];
    for (p, g) in &points {
        let series = euler_egf(p, g, 12).egf_values();
        for (n, want) in series.iter().enumerate() {
            let via_a = match euler_via_a(p, g, n) {
                Ok(v) => v,
                Err(e) => return Verdict::new(false, format!("A-forms disagree at {p:?} g={g} n={n}: {e}")),
            };
            let (e1, e2) = euler_explicit(p, g, n);
            if &via_a != want || &e1 != want || &e2 != want {
                return Verdict::new(false, format!("routes differ at {p:?} g={g} n={n}"));
            }
        }
    }
    let classical = EulerParams::ints(1, 0, 1);
    let e1 = euler_polynomial(&classical, 1);
    let e1_ok = e1 == XPolynomial::new(vec![ratio(-1, 2), rat(1)]);
    let all_ok = (0..=12).all(|n| euler_polynomial(&classical, n) == classical_euler_polynomial(n));
    Verdict::new(e1_ok && all_ok, format!("{} points, n <= 12; E_1 = {}", points.len(), e1.pretty()))
}

fn criterion8() -> Verdict {
    let bases = [
        (rat(0), rat(1), rat(0), 1.0),
        (rat(1), rat(1), rat(1), 1.0),
        (ratio(1, 2), rat(2), ratio(-1, 3), 0.5),
        (rat(-1), ratio(3, 2), rat(2), -0.25),
        (rat(2), rat(-1), rat(1), 2.0),
    ];
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for lambda in [1u32, 2, 3, 5] {
        for (a, b, g, x) in &bases {
            let p = PolyParams::new(lambda, a.clone(), b.clone(), g.clone());
            for n in 0..=8 {
                let (quad, exact) = check_integral_rep(&p, *x, n).expect("lambda >= 1");
                let err = if exact == 0.0 { quad.abs() } else { ((quad - exact) / exact).abs() };
                worst = worst.max(err);
                count += 1;
            }
        }
    }
    Verdict::new(
        worst <= INTEGRAL_RTOL,
        format!("{count} cases, worst relative error {worst:.3e}, tolerance {INTEGRAL_RTOL:e}"),
    )
}

fn criterion9() -> Verdict {
    let grid = [
        AsymptoticParams::ints(1, 1, 0, 1),
        AsymptoticParams::ints(1, 1, 2, 1),
        AsymptoticParams::new(ratio(1, 2), rat(2), ratio(-1, 3), ratio(3, 5)),
        AsymptoticParams::new(rat(-1), ratio(2, 3), rat(1), rat(2)),
        AsymptoticParams::new(rat(0), rat(1), ratio(5, 2), ratio(-1, 2)),
        AsymptoticParams::new(rat(3), rat(-1), rat(2), ratio(1, 4)),
    ];
    for p in &grid {
        for n in 4..=8 {
            if !closed_form_w_check(p, n).unwrap_or(false) {
                return Verdict::new(false, format!("closed forms differ at {p:?} n={n}"));
            }
        }
    }
    let target = 0.25;
    let decay_points = [AsymptoticParams::ints(1, 1, 1, 1), AsymptoticParams::ints(1, 1, 0, 1)];
    let mut ratios = Vec::new();
    for p in &decay_points {
        let rows = error_decay_report(p, 4, 1, &[64, 128, 256]).expect("lambda > n - 1");
        ratios.extend(rows.iter().filter_map(|r| r.ratio));
    }
    let decay_ok = ratios.len() == 2 * decay_points.len()
        && ratios.iter().all(|&r| r >= target / DECAY_FACTOR && r <= target * DECAY_FACTOR);
    let mut n1_ok = true;
    for p in &grid {
        let a = a_coefficients(p, 1);
        for lambda in [1u32, 2, 7, 64] {
            for s in 0..=3 {
                let res = hsu_expansion(&ExpansionInput {
                    a: a.clone(),
                    n: 1,
                    s,
                    lambda: from_usize(lambda as usize),
                })
                .expect("lambda > 0");
                let exact = a_explicit(&p.scaled(lambda), 1).eval(&p.x);
                n1_ok &= res.predicted == exact;
            }
        }
    }
    let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.4}")).collect();
    Verdict::new(
        decay_ok && n1_ok,
        format!(
            "closed forms exact on {} points for 4 <= n <= 8; decay ratios [{}] against [{}, {}]; n=1 exact: {n1_ok}",
            grid.len(),
            shown.join(", "),
            target / DECAY_FACTOR,
            target * DECAY_FACTOR
        ),
    )
}

/// Readings of each recorded identity; the criterion asks for a passing one
/// wherever any reading passes.
const RECORDED_GROUPS: &[&[&str]] = &[
    &["a.split.statement", "a.split.proof"],
    &["stirling.param-swap.printed", "stirling.param-swap.resolved"],
    &["a.derivative-convolution", "a.derivative-convolution.no-x", "a.derivative-convolution.corrected"],
    &["spivey.printed", "spivey.corrected", "spivey.classical"],
    &["euler.rec1", "euler.rec1.corrected"],
    &["euler.rec2", "euler.rec2.alt", "euler.rec2.corrected"],
    &["euler.rec3", "euler.rec3.corrected"],
    &["euler.conv1", "euler.conv1.corrected"],
    &["euler.conv2"],
    &["euler.conv3.lambda2", "euler.conv3.lambda-sum"],
];

fn criterion10() -> Verdict {
    let mut grid = GridSpec::default_grid();
    grid.select = Some(RECORDED_GROUPS.iter().flat_map(|g| g.iter().map(|s| s.to_string())).collect());
    let first = run_suite(&grid).expect("default grid runs");
    let second = run_suite(&grid).expect("default grid runs");
    let deterministic = first.to_json() == second.to_json() && first.to_text() == second.to_text();
    let mut ok = deterministic && first.hard_ok;
    let mut lines = Vec::new();
    for group in RECORDED_GROUPS {
        let entries: Vec<_> = group.iter().map(|id| first.entry(id).expect("selected")).collect();
        let resolved = entries.iter().any(|e| e.fail == 0 && e.pass > 0);
        ok &= resolved;
        let parts: Vec<String> =
            entries.iter().map(|e| format!("{} {}/{}", e.id, e.pass, e.grid_size)).collect();
        lines.push(format!("    {}{}", parts.join(", "), if resolved { "" } else { "  NO READING PASSES" }));
    }
    Verdict::new(
        ok,
        format!(
            "byte-identical reruns: {deterministic}; recorded outcomes leave hard status clean: {}\n{}",
            first.hard_ok,
            lines.join("\n")
        ),
    )
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(1, "Stirling explicit sum equals recurrence", Some(secs(10)), criterion1),
        run(2, "Stirling orthogonality", Some(secs(5)), criterion2),
        run(3, "A polynomials agree across three routes", Some(secs(30)), criterion3),
        run(4, "specializations pinned by the oracle", None, criterion4),
        run(5, "brute-force arrangement counts match", Some(secs(120)), criterion5),
        run(6, "hard identity suite on the default grid", Some(secs(120)), criterion6),
        run(7, "Euler route triangle", Some(secs(30)), criterion7),
        run(8, "integral representation by quadrature", Some(secs(5)), criterion8),
        run(9, "asymptotic closed forms and error decay", Some(secs(30)), criterion9),
        run(10, "recorded identity report", None, criterion10),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
