//! Fixtures shared by the benchmarks.

use geomstir_core::arith::{rat, ratio};
use geomstir_core::{BPAConfig, EulerParams, PolyParams, StirlingParams};

pub fn stirling_params() -> StirlingParams {
    StirlingParams::new(ratio(1, 2), rat(3), ratio(-2, 3))
}

pub fn poly_params() -> PolyParams {
    PolyParams::new(3, ratio(1, 2), rat(2), ratio(-1, 3))
}

pub fn euler_params() -> EulerParams {
    EulerParams::new(2, ratio(1, 3), rat(1))
}

pub fn bpa(n: usize) -> BPAConfig {
    BPAConfig { n, lambda: 2, alpha: 1, beta: 2, gamma: 1, x: 2 }
}
