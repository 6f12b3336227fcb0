use thiserror::Error;

/// Errors produced by the computational routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{context}: beta must be nonzero (use the recurrence route for beta = 0)")]
    ZeroBeta { context: &'static str },

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has a non-invertible constant term")]
    ZeroConstantTerm,

    #[error("exp() requires a series with zero constant term")]
    NonzeroConstantTerm,

    #[error("divisibility violated: alpha = {alpha} must divide {what} = {value}")]
    Divisibility { alpha: u64, what: &'static str, value: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("enumeration capped at n <= {max}, got n = {n}")]
    EnumerationCap { n: usize, max: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("vanishing denominator: {0}")]
    VanishingDenominator(String),

    #[error("lambda must be at least {min}, got {got}")]
    InvalidLambda { min: u32, got: u32 },

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("instance does not fail; nothing to minimize")]
    NotFailing,

    #[error("malformed grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
