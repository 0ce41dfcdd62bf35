//! Run settings from the command line, a JSON file, and built-in defaults.
//!
//! The file is a single JSON object whose keys mirror [`RunConfig`], plus
//! `runs`; every key is optional:
//!
//! ```json
//! { "population_size": 20, "max_function_evaluations": 100000,
//!   "penalty_weight": 10.0, "seed": 42, "runs": 25, "branch_scope": "candidate" }
//! ```

use std::path::Path;

use bmrbwr_core::{catalog, Algorithm, BranchScope, ProblemSpec, RunConfig};
use serde::Deserialize;

use crate::error::{Error, Result};

pub const DEFAULT_RUNS: usize = 30;

/// Optional overrides; `None` falls through to the next source.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    pub population_size: Option<usize>,
    pub max_function_evaluations: Option<u64>,
    pub algorithm: Option<Algorithm>,
    pub penalty_weight: Option<f64>,
    pub equality_tolerance: Option<f64>,
    /// Base seed; run `i` uses `seed + i`.
    pub seed: Option<u64>,
    pub success_tolerance: Option<f64>,
    pub branch_scope: Option<BranchScope>,
    pub runs: Option<usize>,
}

impl Settings {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(Error::io(path))?;
        serde_json::from_str(&text).map_err(|source| Error::Config { path: path.into(), source })
    }

    /// Fields of `self`, falling back to `other` where unset.
    pub fn or(self, other: Settings) -> Settings {
        Settings {
            population_size: self.population_size.or(other.population_size),
            max_function_evaluations: self.max_function_evaluations.or(other.max_function_evaluations),
            algorithm: self.algorithm.or(other.algorithm),
            penalty_weight: self.penalty_weight.or(other.penalty_weight),
            equality_tolerance: self.equality_tolerance.or(other.equality_tolerance),
            seed: self.seed.or(other.seed),
            success_tolerance: self.success_tolerance.or(other.success_tolerance),
            branch_scope: self.branch_scope.or(other.branch_scope),
            runs: self.runs.or(other.runs),
        }
    }

    pub fn runs(&self) -> usize {
        self.runs.unwrap_or(DEFAULT_RUNS)
    }

    pub fn base_seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    /// The validated configuration for `problem`; the budget defaults to
    /// the catalog rule for the problem's size and kind.
    pub fn run_config(&self, algorithm: Algorithm, problem: &ProblemSpec) -> Result<RunConfig> {
        let budget = self.max_function_evaluations.unwrap_or_else(|| catalog::default_budget(problem));
        let mut c = RunConfig::new(algorithm, budget).with_seed(self.base_seed());
        if let Some(n) = self.population_size {
            c.population_size = n;
        }
        if let Some(w) = self.penalty_weight {
            c.penalty_weight = w;
        }
        if let Some(e) = self.equality_tolerance {
            c.equality_tolerance = e;
        }
        if let Some(t) = self.success_tolerance {
            c.success_tolerance = t;
        }
        if let Some(s) = self.branch_scope {
            c.branch_scope = s;
        }
        if self.runs == Some(0) {
            return Err(bmrbwr_core::Error::InvalidConfig("runs must be at least 1".into()).into());
        }
        c.validate()?;
        Ok(c)
    }
}
