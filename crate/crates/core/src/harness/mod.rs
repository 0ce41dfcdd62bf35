//! Repeated independent runs and their aggregate statistics.
//!
//! Objective statistics (best, median, mean, worst, standard deviation) are
//! taken over the runs that found a feasible point; runs that never did are
//! left out of them but still count towards the feasibility rate and the
//! mean violation.

mod compare;
mod stats;

use alloc::string::String;
use alloc::vec::Vec;

pub use compare::{classify, compare, similar, ComparisonMatrix, Criterion, Outcome, Tally, DEFAULT_TOLERANCE};
pub use stats::{mfe, summarize, summarize_with, Deviation, Statistics};

use crate::optimizer::run;
use crate::{Algorithm, Error, ProblemSpec, RunConfig, RunResult, SeededStream, Sense};

/// Aggregate results of `n_runs` independent runs of one algorithm on one
/// problem. Objective fields are `None` when no run was feasible.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExperimentSummary {
    pub problem: String,
    pub algorithm: Algorithm,
    pub sense: Sense,
    pub n_runs: usize,
    pub best: Option<f64>,
    pub median: Option<f64>,
    pub mean: Option<f64>,
    pub worst: Option<f64>,
    pub std_dev: Option<f64>,
    /// Percentage of runs that found a feasible point.
    pub fr: f64,
    /// Mean violation of the reported point, averaged over all runs.
    pub mv: f64,
    /// Percentage of runs that reached a feasible point within the success
    /// tolerance of the known optimum.
    pub sr: f64,
    /// Mean evaluations to success; failed runs are charged the budget.
    pub mfe: f64,
}

/// A summary together with the runs it was computed from, in seed order.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment {
    pub summary: ExperimentSummary,
    pub runs: Vec<RunResult>,
}

/// Builds the summary of finished runs.
pub fn summarize_runs(
    problem: &ProblemSpec,
    config: &RunConfig,
    runs: &[RunResult],
    deviation: Deviation,
) -> Result<ExperimentSummary, Error> {
    if runs.is_empty() {
        return Err(Error::EmptySample);
    }
    let n = runs.len() as f64;
    let feasible: Vec<f64> = runs.iter().filter_map(|r| r.best_feasible.as_ref()).map(|c| c.objective).collect();
    let stats = if feasible.is_empty() { None } else { Some(summarize_with(&feasible, problem.sense, deviation)?) };
    let percent = |count: usize| 100.0 * count as f64 / n;
    Ok(ExperimentSummary {
        problem: problem.name.clone(),
        algorithm: config.algorithm,
        sense: problem.sense,
        n_runs: runs.len(),
        best: stats.map(|s| s.best),
        median: stats.map(|s| s.median),
        mean: stats.map(|s| s.mean),
        worst: stats.map(|s| s.worst),
        std_dev: stats.map(|s| s.std_dev),
        fr: percent(feasible.len()),
        mv: runs.iter().map(|r| r.reported().mean_violation()).sum::<f64>() / n,
        sr: percent(runs.iter().filter(|r| r.fe_to_success.is_some()).count()),
        mfe: mfe(runs, config.max_function_evaluations),
    })
}

/// Runs `n_runs` independent runs sequentially; run `i` is seeded with
/// `base_seed + i` (wrapping) and `config.seed` is ignored.
pub fn run_experiment(
    problem: &ProblemSpec,
    config: &RunConfig,
    n_runs: usize,
    base_seed: u64,
) -> Result<Experiment, Error> {
    if n_runs == 0 {
        return Err(Error::InvalidConfig("n_runs must be at least 1".into()));
    }
    config.validate()?;
    let runs = (0..n_runs).map(|i| single_run(problem, config, base_seed, i)).collect::<Result<Vec<_>, _>>()?;
    let summary = summarize_runs(problem, config, &runs, Deviation::Population)?;
    Ok(Experiment { summary, runs })
}

/// Run `index` of an experiment, with its error tagged by the index.
pub fn single_run(problem: &ProblemSpec, config: &RunConfig, base_seed: u64, index: usize) -> Result<RunResult, Error> {
    let seed = base_seed.wrapping_add(index as u64);
    let config = RunConfig { seed, ..*config };
    let mut rng = SeededStream::new(seed);
    run(problem, &config, &mut rng).map_err(|e| Error::Run { index, source: alloc::boxed::Box::new(e) })
}
