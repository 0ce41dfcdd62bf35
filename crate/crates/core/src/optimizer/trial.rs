use alloc::vec::Vec;

use super::{Algorithm, BranchScope, Candidate, Population};
use crate::rng::{draw_factor, draw_partner, RandomStream};
use crate::{Bounds, Error, Sense};

/// Trial vector for member `k` under the best-mean-random rule.
///
/// Draw order: partner index, factor `T`, then per variable `r4` followed by
/// either `(r1, r2)` when `r4 > 0.5` or `r3`.
///
/// ```text
/// r4 > 0.5:  x[j] + r1 (best[j] - T mean[j]) + r2 (best[j] - partner[j])
/// otherwise: upper[j] - (upper[j] - lower[j]) r3
/// ```
pub fn bmr_trial<R: RandomStream + ?Sized>(
    k: usize,
    pop: &Population,
    bounds: &Bounds,
    rng: &mut R,
) -> Result<Vec<f64>, Error> {
    trial(Algorithm::Bmr, k, pop, bounds, rng)
}

/// Trial vector for member `k` under the best-worst-random rule.
///
/// Same draw order as [`bmr_trial`]; the exploiting move is
/// `x[j] + r1 (best[j] - T partner[j]) - r2 (worst[j] - partner[j])`.
pub fn bwr_trial<R: RandomStream + ?Sized>(
    k: usize,
    pop: &Population,
    bounds: &Bounds,
    rng: &mut R,
) -> Result<Vec<f64>, Error> {
    trial(Algorithm::Bwr, k, pop, bounds, rng)
}

/// Dispatches to the rule selected by `algorithm`. The result is clamped to
/// `bounds`; `pop` is not modified.
///
/// # Panics
/// If the population has fewer than two members or `k` is out of range.
pub fn trial<R: RandomStream + ?Sized>(
    algorithm: Algorithm,
    k: usize,
    pop: &Population,
    bounds: &Bounds,
    rng: &mut R,
) -> Result<Vec<f64>, Error> {
    trial_scoped(algorithm, BranchScope::Variable, k, pop, bounds, rng)
}

/// Like [`trial`], with the branch decision drawn per `scope`. With
/// [`BranchScope::Candidate`] the draw order is partner, `T`, `r4`, then per
/// variable `(r1, r2)` or `r3`.
pub fn trial_scoped<R: RandomStream + ?Sized>(
    algorithm: Algorithm,
    scope: BranchScope,
    k: usize,
    pop: &Population,
    bounds: &Bounds,
    rng: &mut R,
) -> Result<Vec<f64>, Error> {
    let n = pop.len();
    assert!(n >= 2 && k < n, "member {k} of a population of {n} has no partner");
    let partner = draw_partner(rng, k, n)?;
    let t = draw_factor(rng)?;

    let current = &pop.members[k].position;
    let best = &pop.best().position;
    let worst = &pop.worst().position;
    let random = &pop.members[partner].position;
    let (lower, upper) = (bounds.lower(), bounds.upper());

    let shared = match scope {
        BranchScope::Candidate => Some(rng.next_uniform()? > 0.5),
        BranchScope::Variable => None,
    };
    let mut out = Vec::with_capacity(current.len());
    for j in 0..current.len() {
        let exploit = match shared {
            Some(e) => e,
            None => rng.next_uniform()? > 0.5,
        };
        let v = if exploit {
            let r1 = rng.next_uniform()?;
            let r2 = rng.next_uniform()?;
            match algorithm {
                Algorithm::Bmr => current[j] + r1 * (best[j] - t * pop.mean_position[j]) + r2 * (best[j] - random[j]),
                Algorithm::Bwr => current[j] + r1 * (best[j] - t * random[j]) - r2 * (worst[j] - random[j]),
            }
        } else {
            let r3 = rng.next_uniform()?;
            upper[j] - (upper[j] - lower[j]) * r3
        };
        out.push(v);
    }
    bounds.clamp_in_place(&mut out);
    Ok(out)
}

/// Component-wise `min(upper, max(lower, v))`.
pub fn clamp(v: &[f64], bounds: &Bounds) -> Vec<f64> {
    let mut out = v.to_vec();
    bounds.clamp_in_place(&mut out);
    out
}

/// Keeps `trial` only when its penalized fitness is strictly better.
pub fn greedy_select(current: Candidate, trial: Candidate, sense: Sense) -> Candidate {
    if sense.is_better(trial.penalized, current.penalized) {
        trial
    } else {
        current
    }
}
