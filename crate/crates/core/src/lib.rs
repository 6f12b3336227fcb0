//! Exact rational arithmetic for generalized Stirling numbers and the
//! polynomial families built on them.

pub mod arith;
pub mod asymptotics;
pub mod error;
pub mod euler;
pub mod exp_poly;
pub mod geom;
pub mod harness;
pub mod oracle;
pub mod poly;
pub mod quadrature;
pub mod series;
pub mod stirling;

pub use arith::{format_rational, parse_rational, Rational};
pub use error::{Error, Result};
pub use euler::EulerParams;
pub use exp_poly::ExpPolyParams;
pub use geom::{ASequence, PolyParams, Sides};
pub use oracle::BPAConfig;
pub use poly::XPolynomial;
pub use series::{TruncatedEGF, TruncatedSeries};
pub use stirling::StirlingParams;
