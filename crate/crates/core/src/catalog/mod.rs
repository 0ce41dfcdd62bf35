//! Registry of built-in benchmark problems.
//!
//! Two suites are available: `unconstrained-25`, the standard unconstrained
//! test functions, and `engineering-12`, classical constrained design
//! problems. Scalable functions accept a dimension suffix (`sphere-2`,
//! `rosenbrock-10`); the bare name uses the suite dimension.

pub mod engineering;
pub mod unconstrained;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::problem::{ProblemKind, ProblemSpec};
use crate::Error;

pub const UNCONSTRAINED_SUITE: &str = "unconstrained-25";
pub const ENGINEERING_SUITE: &str = "engineering-12";
pub const SUITES: [&str; 2] = [UNCONSTRAINED_SUITE, ENGINEERING_SUITE];

/// Names held for the recent functions of Yang (2023). They have no built-in
/// formulation; load them from a problem definition file instead.
pub const RESERVED: [&str; 5] = [
    "yang-complex-noisy",
    "yang-non-differentiable",
    "yang-hyperboloid",
    "yang-non-smooth-multilayer",
    "yang-shortest-path",
];

#[inline]
pub(crate) fn sq(v: f64) -> f64 {
    v * v
}

/// Every name `lookup` accepts without a dimension suffix.
pub fn names() -> Vec<&'static str> {
    unconstrained::SUITE.iter().chain(engineering::SUITE.iter()).copied().collect()
}

/// Resolves a problem by name.
pub fn lookup(name: &str) -> Result<ProblemSpec, Error> {
    let name = name.trim();
    if let Some(p) = engineering::lookup(name).or_else(|| unconstrained::fixed(name)) {
        return Ok(p);
    }
    if let Some(&(base, dim)) = unconstrained::SCALABLE.iter().find(|(base, _)| *base == name) {
        return Ok(unconstrained::scalable(base, dim).expect("scalable table is consistent"));
    }
    if let Some((base, suffix)) = name.rsplit_once('-') {
        if let Ok(dim) = suffix.parse::<usize>() {
            if dim >= 1 {
                if let Some(p) = unconstrained::scalable(base, dim) {
                    return Ok(p);
                }
            }
        }
    }
    if RESERVED.contains(&name) {
        return Err(Error::ReservedProblem(name.to_string()));
    }
    Err(Error::UnknownProblem { name: name.to_string(), available: names().into_iter().map(String::from).collect() })
}

/// The problems of a named suite, in catalog order.
pub fn suite(name: &str) -> Result<Vec<ProblemSpec>, Error> {
    let members: &[&str] = match name {
        UNCONSTRAINED_SUITE => &unconstrained::SUITE,
        ENGINEERING_SUITE => &engineering::SUITE,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    members.iter().map(|n| lookup(n)).collect()
}

/// Default evaluation budget.
///
/// Constrained problems get `100_000` evaluations up to 10 variables and
/// `200_000` beyond; unconstrained problems get `500_000`.
pub fn default_budget(problem: &ProblemSpec) -> u64 {
    match problem.kind {
        ProblemKind::Unconstrained => 500_000,
        ProblemKind::Constrained if problem.dimension() <= 10 => 100_000,
        ProblemKind::Constrained => 200_000,
    }
}

#[cfg(test)]
mod tests;
