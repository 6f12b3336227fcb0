//! Grid-driven conformance harness over the identity registry.

pub mod grid;
pub mod identities;
pub mod minimize;
pub mod report;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use grid::GridSpec;
pub use identities::{lookup, resolve, Axis, Class, Family, Identity, Instance, Outcome, REGISTRY};
pub use minimize::{counterexample_minimize, minimize_with};
pub use report::{ConformanceReport, Counterexample, Entry, FamilySummary};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "GEOMSTIR_THREADS";

/// Runs `f` on a pool sized by [`THREADS_ENV`], or on the global pool when
/// the variable is unset.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("{THREADS_ENV}={v:?} is not a count")))?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidConfig(e.to_string()))?;
            Ok(pool.install(f))
        }
        Err(_) => Ok(f()),
    }
}

/// Evaluates one identity over its grid. The reported counterexample is the
/// first failure in grid order, independent of scheduling.
pub fn run_identity(identity: &Identity, grid: &GridSpec) -> Entry {
    let instances = identity.instances(grid);
    let outcomes: Vec<Outcome> = instances.par_iter().map(|i| identity.evaluate(i)).collect();
    let mut entry = Entry::new(identity);
    for (inst, outcome) in instances.iter().zip(outcomes) {
        match outcome {
            Outcome::Pass => entry.pass += 1,
            Outcome::Skip => entry.skipped += 1,
            Outcome::Fail { lhs, rhs } => {
                entry.fail += 1;
                if entry.first_counterexample.is_none() {
                    entry.first_counterexample =
                        Some(Counterexample { params: inst.describe(), n: inst.n, lhs, rhs });
                }
            }
        }
    }
    entry.grid_size = entry.pass + entry.fail;
    entry
}

pub fn run_suite(spec: &GridSpec) -> Result<ConformanceReport> {
    spec.validate()?;
    let selected: Vec<&Identity> = match &spec.select {
        Some(sel) => resolve(sel)?,
        None => REGISTRY.iter().collect(),
    };
    let entries = with_pool(|| selected.iter().map(|i| run_identity(i, spec)).collect())?;
    Ok(ConformanceReport::new(entries))
}
