//! Declarative parameter grids.

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

const DEFAULT_GRID: &str = include_str!("../../grids/default.json");

/// Lists of values per symbol. Rationals are written as integers or `"p/q"`
/// strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub schema_version: u32,
    pub lambda: Vec<u32>,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub alpha: Vec<Rational>,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub beta: Vec<Rational>,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub gamma: Vec<Rational>,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub x: Vec<Rational>,
    pub lambda2: Vec<u32>,
    #[serde(with = "crate::arith::serde_rational::vec")]
    pub gamma2: Vec<Rational>,
    pub m_max: usize,
    pub n_max: usize,
    /// Identity ids or family names; absent means every identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub select: Option<Vec<String>>,
}

impl GridSpec {
    pub fn default_grid() -> Self {
        Self::from_json(DEFAULT_GRID).expect("shipped grid is valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GridSpec = serde_json::from_str(text).map_err(|e| Error::Grid(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grid serializes")
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Grid(format!(
                "unsupported schema_version {}, expected {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        let lens = [
            ("lambda", self.lambda.len()),
            ("alpha", self.alpha.len()),
            ("beta", self.beta.len()),
            ("gamma", self.gamma.len()),
            ("x", self.x.len()),
            ("lambda2", self.lambda2.len()),
            ("gamma2", self.gamma2.len()),
        ];
        if let Some((name, _)) = lens.iter().find(|(_, len)| *len == 0) {
            return Err(Error::Grid(format!("`{name}` must list at least one value")));
        }
        if self.n_max > 16 {
            return Err(Error::Grid(format!("n_max {} exceeds 16", self.n_max)));
        }
        Ok(())
    }
}
