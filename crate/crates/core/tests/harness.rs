use geomstir_core::arith::{rat, ratio};
use geomstir_core::geom::a_explicit;
use geomstir_core::harness::{
    counterexample_minimize, lookup, minimize_with, run_suite, GridSpec, Instance, Outcome,
};
use geomstir_core::{Error, PolyParams};

fn small_grid() -> GridSpec {
    let mut g = GridSpec::default_grid();
    g.lambda = vec![0, 2];
    g.alpha = vec![rat(0), ratio(1, 2)];
    g.gamma = vec![rat(0), ratio(-1, 2)];
    g.n_max = 4;
    g
}

#[test]
fn reports_are_byte_identical() {
    let mut g = small_grid();
    g.select = Some(vec!["A".into(), "stirling".into()]);
    let a = run_suite(&g).unwrap();
    let b = run_suite(&g).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
    assert!(a.hard_ok);
    for e in &a.entries {
        assert_eq!(e.pass + e.fail, e.grid_size);
        assert!(!e.anchor.is_empty());
    }
}

#[test]
fn empty_selection_gives_empty_report() {
    let mut g = small_grid();
    g.select = Some(vec![]);
    let r = run_suite(&g).unwrap();
    assert!(r.entries.is_empty());
    assert!(r.hard_ok);
}

#[test]
fn unknown_selector_is_an_error() {
    let mut g = small_grid();
    g.select = Some(vec!["no-such-identity".into()]);
    assert!(matches!(run_suite(&g), Err(Error::UnknownIdentity(_))));
}

#[test]
fn single_point_recurrence() {
    let g = GridSpec::from_json(
        r#"{"schema_version": 1, "lambda": [2], "alpha": ["1/2"], "beta": [1], "gamma": [-1],
            "x": [1], "lambda2": [1], "gamma2": [0], "m_max": 0, "n_max": 0, "select": ["a.recurrence"]}"#,
    )
    .unwrap();
    let r = run_suite(&g).unwrap();
    assert_eq!(r.entries.len(), 1);
    let e = &r.entries[0];
    assert_eq!((e.id.as_str(), e.grid_size, e.pass, e.fail), ("a.recurrence", 1, 1, 0));
}

#[test]
fn printed_failures_carry_a_counterexample() {
    let mut g = small_grid();
    g.select = Some(vec!["a.inclusion-exclusion".into()]);
    let r = run_suite(&g).unwrap();
    let c = r.entries[0].first_counterexample.as_ref().expect("printed form fails");
    assert_ne!(c.lhs, c.rhs);
    assert!(r.hard_ok, "recorded identities never break the hard status");
}

/// An identity perturbed to fail once `n >= 2` and `gamma != 0`.
fn perturbed(i: &Instance) -> bool {
    let p = PolyParams::new(
        i.nat("lambda").unwrap() as u32,
        i.get("alpha").unwrap().clone(),
        i.get("beta").unwrap().clone(),
        i.get("gamma").unwrap().clone(),
    );
    let exact = a_explicit(&p, i.n).eval(&rat(1));
    let wrong = exact.clone() + if i.n >= 2 { p.gamma.clone() } else { rat(0) };
    exact != wrong
}

#[test]
fn synthetic_failure_shrinks() {
    let inst = Instance::new(7)
        .with("lambda", rat(3))
        .with("alpha", ratio(5, 3))
        .with("beta", rat(-4))
        .with("gamma", ratio(7, 2));
    assert!(perturbed(&inst));
    let min = minimize_with(perturbed, &inst);
    assert!(min.n <= 2);
    assert!(perturbed(&min));
    assert_eq!(min.params["gamma"], rat(1));
    assert_eq!(minimize_with(perturbed, &min), min);
}

#[test]
fn minimizer_rejects_passing_input() {
    let inst = Instance::new(3)
        .with("lambda", rat(1))
        .with("alpha", rat(1))
        .with("beta", rat(1))
        .with("gamma", rat(1));
    assert!(matches!(counterexample_minimize("a.recurrence", &inst), Err(Error::NotFailing)));
    assert!(matches!(counterexample_minimize("nope", &inst), Err(Error::UnknownIdentity(_))));
}

#[test]
fn registered_failure_shrinks_and_still_fails() {
    let inst = Instance::new(6)
        .with("lambda", rat(2))
        .with("alpha", ratio(1, 2))
        .with("beta", rat(2))
        .with("gamma", ratio(-1, 2));
    let id = "a.reflection.second";
    assert!(lookup(id).unwrap().evaluate(&inst).is_fail());
    let min = counterexample_minimize(id, &inst).unwrap();
    assert!(matches!(lookup(id).unwrap().evaluate(&min), Outcome::Fail { .. }));
    assert!(min.n <= 2);
    assert_eq!(counterexample_minimize(id, &min).unwrap(), min);
}
