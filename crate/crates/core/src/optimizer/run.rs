use alloc::vec::Vec;

use super::{greedy_select, initialize_population, trial_scoped, Candidate, Population, RunConfig};
use crate::rng::RandomStream;
use crate::{Error, ProblemSpec, Sense};

/// Population statistics after one iteration (iteration 0 is the initial
/// population).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IterationRecord {
    pub iteration: u64,
    /// Function evaluations consumed so far.
    pub fe_count: u64,
    /// Best penalized fitness in the population, which is also the best so
    /// far since selection is greedy.
    pub best_penalized: f64,
    pub mean_penalized: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    /// Best member of the final population by penalized fitness.
    pub best: Candidate,
    /// Best feasible point evaluated during the run, whether or not it
    /// survived selection.
    pub best_feasible: Option<Candidate>,
    pub trace: Vec<IterationRecord>,
    pub fe_used: u64,
    /// Evaluation count at which a feasible point first came within the
    /// success tolerance of the known optimum.
    pub fe_to_success: Option<u64>,
}

impl RunResult {
    /// The candidate a run reports: its best feasible point if it found one,
    /// otherwise its best penalized point.
    pub fn reported(&self) -> &Candidate {
        self.best_feasible.as_ref().unwrap_or(&self.best)
    }

    pub fn is_feasible(&self) -> bool {
        self.best_feasible.is_some()
    }

    pub fn iterations(&self) -> u64 {
        self.trace.last().map_or(0, |r| r.iteration)
    }
}

struct Tracker<'a> {
    problem: &'a ProblemSpec,
    tolerance: f64,
    fe: u64,
    best_feasible: Option<Candidate>,
    fe_to_success: Option<u64>,
}

impl Tracker<'_> {
    fn observe(&mut self, c: &Candidate) {
        if !c.is_feasible() {
            return;
        }
        if self.fe_to_success.is_none() {
            if let Some(target) = self.problem.known_best {
                if (c.objective - target).abs() <= self.tolerance {
                    self.fe_to_success = Some(self.fe);
                }
            }
        }
        let sense = self.problem.sense;
        let better = match &self.best_feasible {
            None => true,
            Some(b) => sense.is_better(c.penalized, b.penalized),
        };
        if better {
            self.best_feasible = Some(c.clone());
        }
    }
}

fn record(iteration: u64, fe_count: u64, pop: &Population) -> IterationRecord {
    IterationRecord { iteration, fe_count, best_penalized: pop.best().penalized, mean_penalized: pop.mean_penalized() }
}

/// Runs one optimization.
///
/// Each iteration builds one trial per member against the roles of the
/// population as it stood at the start of the iteration, evaluates it, and
/// applies greedy selection; roles are refreshed once all members are done.
/// Iterations continue while a full iteration still fits the evaluation
/// budget, so `fe_used = n * (1 + iterations)`.
///
/// A trial whose evaluation is not finite costs one evaluation and is
/// rejected. The same failure in the initial population aborts the run.
pub fn run<R: RandomStream + ?Sized>(
    problem: &ProblemSpec,
    config: &RunConfig,
    rng: &mut R,
) -> Result<RunResult, Error> {
    config.validate()?;
    let n = config.population_size as u64;
    let sense: Sense = problem.sense;

    let mut pop = initialize_population(problem, config, rng)?;
    let mut tracker =
        Tracker { problem, tolerance: config.success_tolerance, fe: 0, best_feasible: None, fe_to_success: None };
    for c in &pop.members {
        tracker.fe += 1;
        tracker.observe(c);
    }
    let mut trace = Vec::new();
    trace.push(record(0, tracker.fe, &pop));

    let mut iteration = 0;
    while tracker.fe + n <= config.max_function_evaluations {
        let mut next = Vec::with_capacity(pop.len());
        for k in 0..pop.len() {
            let x = trial_scoped(config.algorithm, config.branch_scope, k, &pop, &problem.bounds, rng)?;
            tracker.fe += 1;
            let current = pop.members[k].clone();
            match Candidate::evaluate(problem, x, config.penalty_weight, config.equality_tolerance) {
                Ok(candidate) => {
                    tracker.observe(&candidate);
                    next.push(greedy_select(current, candidate, sense));
                }
                Err(Error::NonFinite { .. }) => next.push(current),
                Err(e) => return Err(e),
            }
        }
        pop = Population::new(next, sense);
        iteration += 1;
        trace.push(record(iteration, tracker.fe, &pop));
    }

    Ok(RunResult {
        best: pop.best().clone(),
        best_feasible: tracker.best_feasible,
        trace,
        fe_used: tracker.fe,
        fe_to_success: tracker.fe_to_success,
    })
}
