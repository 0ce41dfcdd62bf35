use alloc::vec::Vec;

use super::RunConfig;
use crate::penalty::{penalize, violations};
use crate::rng::RandomStream;
use crate::{Error, ProblemSpec, Sense};

/// One evaluated point of the search space.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub position: Vec<f64>,
    /// Raw objective in the problem's own sense.
    pub objective: f64,
    /// Per-constraint violations, inequalities first.
    pub violations: Vec<f64>,
    /// Objective adjusted by the static penalty, in the problem's own sense.
    pub penalized: f64,
}

impl Candidate {
    /// Evaluates `position` on `problem`.
    pub fn evaluate(
        problem: &ProblemSpec,
        position: Vec<f64>,
        penalty_weight: f64,
        equality_tolerance: f64,
    ) -> Result<Self, Error> {
        let eval = problem.evaluate(&position)?;
        let penalized = penalize(eval.objective, &eval.inequalities, &eval.equalities, penalty_weight, problem.sense)?;
        let report = violations(&eval.inequalities, &eval.equalities, equality_tolerance);
        Ok(Self { position, objective: eval.objective, violations: report.per_constraint, penalized })
    }

    pub fn is_feasible(&self) -> bool {
        self.violations.iter().all(|&v| v == 0.0)
    }

    pub fn mean_violation(&self) -> f64 {
        if self.violations.is_empty() {
            0.0
        } else {
            self.violations.iter().sum::<f64>() / self.violations.len() as f64
        }
    }
}

/// Members plus the roles the trial rules read: best, worst and mean.
///
/// Roles are computed once from penalized fitness and stay fixed until a new
/// population is built. Ties go to the lowest index.
#[derive(Debug, Clone, PartialEq)]
pub struct Population {
    pub members: Vec<Candidate>,
    pub best_index: usize,
    pub worst_index: usize,
    pub mean_position: Vec<f64>,
    sense: Sense,
}

impl Population {
    /// # Panics
    /// If `members` is empty or positions differ in length.
    pub fn new(members: Vec<Candidate>, sense: Sense) -> Self {
        assert!(!members.is_empty(), "population needs at least one member");
        let dim = members[0].position.len();
        let mut best_index = 0;
        let mut worst_index = 0;
        let mut mean_position = alloc::vec![0.0; dim];
        for (i, member) in members.iter().enumerate() {
            assert_eq!(member.position.len(), dim, "member {i} has wrong dimension");
            let cost = sense.to_cost(member.penalized);
            if cost < sense.to_cost(members[best_index].penalized) {
                best_index = i;
            }
            if cost > sense.to_cost(members[worst_index].penalized) {
                worst_index = i;
            }
            for (m, x) in mean_position.iter_mut().zip(&member.position) {
                *m += x;
            }
        }
        let n = members.len() as f64;
        for m in &mut mean_position {
            *m /= n;
        }
        Self { members, best_index, worst_index, mean_position, sense }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn best(&self) -> &Candidate {
        &self.members[self.best_index]
    }

    pub fn worst(&self) -> &Candidate {
        &self.members[self.worst_index]
    }

    pub fn mean_penalized(&self) -> f64 {
        self.members.iter().map(|c| c.penalized).sum::<f64>() / self.members.len() as f64
    }

    /// `true` when any member satisfies every constraint.
    pub fn any_feasible(&self) -> bool {
        self.members.iter().any(Candidate::is_feasible)
    }
}

/// Draws `config.population_size` positions uniformly inside the bounds and
/// evaluates them.
///
/// Consumes exactly `n * m` uniforms, member by member and variable by
/// variable. Only requires a population of at least one; [`super::run`]
/// enforces the full configuration rules.
pub fn initialize_population<R: RandomStream + ?Sized>(
    problem: &ProblemSpec,
    config: &RunConfig,
    rng: &mut R,
) -> Result<Population, Error> {
    if config.population_size == 0 {
        return Err(Error::InvalidConfig("population size must be positive".into()));
    }
    let bounds = &problem.bounds;
    let mut positions = Vec::with_capacity(config.population_size);
    for _ in 0..config.population_size {
        let mut x = Vec::with_capacity(bounds.len());
        for (lo, hi) in bounds.lower().iter().zip(bounds.upper()) {
            x.push(lo + (hi - lo) * rng.next_uniform()?);
        }
        positions.push(x);
    }
    let members = positions
        .into_iter()
        .map(|x| Candidate::evaluate(problem, x, config.penalty_weight, config.equality_tolerance))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Population::new(members, problem.sense))
}
