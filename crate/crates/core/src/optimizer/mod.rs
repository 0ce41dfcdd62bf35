//! Population initialization, the BMR/BWR trial rules, greedy selection and
//! the budgeted run loop.

mod population;
mod run;
mod trial;

pub use population::{initialize_population, Candidate, Population};
pub use run::{run, IterationRecord, RunResult};
pub use trial::{bmr_trial, bwr_trial, clamp, greedy_select, trial, trial_scoped};

use alloc::format;

use crate::penalty::{DEFAULT_EQUALITY_TOLERANCE, DEFAULT_WEIGHT};
use crate::Error;

/// Which trial rule drives the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Algorithm {
    /// Best, mean and random partner.
    Bmr,
    /// Best, worst and random partner.
    Bwr,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Bmr, Algorithm::Bwr];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Bmr => "bmr",
            Algorithm::Bwr => "bwr",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "bmr" => Some(Algorithm::Bmr),
            "bwr" => Some(Algorithm::Bwr),
            _ => None,
        }
    }
}

impl core::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Algorithm::Bmr => "BMR",
            Algorithm::Bwr => "BWR",
        })
    }
}

/// How often the exploit-or-reinitialize decision (`r4 > 0.5`) is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum BranchScope {
    /// One draw per variable of each trial.
    Variable,
    /// One draw per trial, shared by all its variables.
    #[default]
    Candidate,
}

impl BranchScope {
    pub fn as_str(self) -> &'static str {
        match self {
            BranchScope::Variable => "variable",
            BranchScope::Candidate => "candidate",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "variable" => Some(BranchScope::Variable),
            "candidate" => Some(BranchScope::Candidate),
            _ => None,
        }
    }
}

/// Settings for one run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RunConfig {
    pub population_size: usize,
    pub max_function_evaluations: u64,
    pub algorithm: Algorithm,
    pub penalty_weight: f64,
    /// Equality tolerance of the violation metrics; the penalty ignores it.
    pub equality_tolerance: f64,
    pub seed: u64,
    /// A run succeeds once a feasible point is within this distance of the
    /// known optimum.
    pub success_tolerance: f64,
    pub branch_scope: BranchScope,
}

pub const DEFAULT_POPULATION_SIZE: usize = 20;
pub const DEFAULT_SUCCESS_TOLERANCE: f64 = 1e-8;

impl RunConfig {
    pub fn new(algorithm: Algorithm, max_function_evaluations: u64) -> Self {
        Self {
            population_size: DEFAULT_POPULATION_SIZE,
            max_function_evaluations,
            algorithm,
            penalty_weight: DEFAULT_WEIGHT,
            equality_tolerance: DEFAULT_EQUALITY_TOLERANCE,
            seed: 0,
            success_tolerance: DEFAULT_SUCCESS_TOLERANCE,
            branch_scope: BranchScope::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_branch_scope(mut self, scope: BranchScope) -> Self {
        self.branch_scope = scope;
        self
    }

    pub fn with_population_size(mut self, n: usize) -> Self {
        self.population_size = n;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.population_size < 3 {
            return Err(Error::InvalidConfig(format!(
                "population size must be at least 3, got {}",
                self.population_size
            )));
        }
        if self.max_function_evaluations < self.population_size as u64 {
            return Err(Error::InvalidConfig(format!(
                "budget of {} evaluations cannot evaluate a population of {}",
                self.max_function_evaluations, self.population_size
            )));
        }
        if !(self.penalty_weight.is_finite() && self.penalty_weight > 0.0) {
            return Err(Error::InvalidConfig(format!("penalty weight must be positive, got {}", self.penalty_weight)));
        }
        if !(self.equality_tolerance.is_finite() && self.equality_tolerance >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "equality tolerance must be non-negative, got {}",
                self.equality_tolerance
            )));
        }
        if !(self.success_tolerance.is_finite() && self.success_tolerance > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "success tolerance must be positive, got {}",
                self.success_tolerance
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let ok = RunConfig::new(Algorithm::Bmr, 100);
        assert!(ok.validate().is_ok());
        assert!(ok.clone().with_population_size(2).validate().is_err());
        assert!(RunConfig::new(Algorithm::Bmr, 10).validate().is_err());
        let mut bad = ok.clone();
        bad.penalty_weight = 0.0;
        assert!(bad.validate().is_err());
        let mut bad = ok;
        bad.equality_tolerance = -1.0;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn algorithm_names() {
        assert_eq!(Algorithm::parse("BWR"), Some(Algorithm::Bwr));
        assert_eq!(Algorithm::parse("bmr"), Some(Algorithm::Bmr));
        assert_eq!(Algorithm::parse("pso"), None);
    }
}
