//! Static quadratic penalty and constraint violation metrics.
//!
//! The penalty that drives selection and the violation metrics that drive
//! reporting use different equality handling. [`penalize`] squares the raw
//! equality residual `h_j(x)`. [`violations`] forgives equality residuals up
//! to a tolerance `eps` (`1e-4` by default), so a solution can be reported
//! feasible while still carrying a tiny penalty.

use alloc::vec::Vec;

use crate::{Error, Sense};

/// Default penalty weight.
pub const DEFAULT_WEIGHT: f64 = 10.0;
/// Default equality tolerance for the violation metrics.
pub const DEFAULT_EQUALITY_TOLERANCE: f64 = 1e-4;

/// `objective ± weight * (Σ max(0, g_i)² + Σ h_j²)`, adding for
/// minimization and subtracting for maximization.
pub fn penalize(
    objective: f64,
    inequalities: &[f64],
    equalities: &[f64],
    weight: f64,
    sense: Sense,
) -> Result<f64, Error> {
    if !objective.is_finite() {
        return Err(Error::NonFinite { what: "objective" });
    }
    if inequalities.iter().chain(equalities).any(|v| !v.is_finite()) {
        return Err(Error::NonFinite { what: "constraint" });
    }
    let sum: f64 = inequalities
        .iter()
        .map(|g| {
            let v = g.max(0.0);
            v * v
        })
        .sum::<f64>()
        + equalities.iter().map(|h| h * h).sum::<f64>();
    if sum == 0.0 {
        return Ok(objective);
    }
    let penalty = weight * sum;
    if !penalty.is_finite() {
        return Err(Error::NonFinite { what: "penalty" });
    }
    Ok(match sense {
        Sense::Minimize => objective + penalty,
        Sense::Maximize => objective - penalty,
    })
}

/// Per-constraint violations and their mean.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ViolationReport {
    /// Inequalities first, then equalities.
    pub per_constraint: Vec<f64>,
    pub mean_violation: f64,
}

/// `max(0, g_i)` for inequalities and `max(0, |h_j| - eps)` for equalities.
pub fn violations(inequalities: &[f64], equalities: &[f64], eps: f64) -> ViolationReport {
    let per_constraint: Vec<f64> =
        inequalities.iter().map(|g| g.max(0.0)).chain(equalities.iter().map(|h| (h.abs() - eps).max(0.0))).collect();
    let mean_violation =
        if per_constraint.is_empty() { 0.0 } else { per_constraint.iter().sum::<f64>() / per_constraint.len() as f64 };
    ViolationReport { per_constraint, mean_violation }
}

pub fn is_feasible(report: &ViolationReport) -> bool {
    report.per_constraint.iter().all(|&v| v == 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn penalize_examples() {
        assert_eq!(penalize(5.0, &[2.0, -1.0], &[], 10.0, Sense::Minimize), Ok(45.0));
        assert_eq!(penalize(5.0, &[-2.0, 0.0], &[0.0], 10.0, Sense::Minimize), Ok(5.0));
        let v = penalize(5.0, &[], &[0.1], 10.0, Sense::Minimize).unwrap();
        assert!((v - 5.1).abs() < 1e-12);
        assert_eq!(penalize(5.0, &[2.0], &[], 10.0, Sense::Maximize), Ok(-35.0));
    }

    #[test]
    fn penalize_rejects_non_finite() {
        assert!(penalize(f64::NAN, &[], &[], 10.0, Sense::Minimize).is_err());
        assert!(penalize(0.0, &[f64::INFINITY], &[], 10.0, Sense::Minimize).is_err());
        assert!(penalize(0.0, &[], &[f64::NAN], 10.0, Sense::Minimize).is_err());
    }

    #[test]
    fn violation_examples() {
        let r = violations(&[-3.0, 0.5], &[], 1e-4);
        assert_eq!(r.per_constraint, vec![0.0, 0.5]);
        assert_eq!(r.mean_violation, 0.25);

        let r = violations(&[], &[5e-5], 1e-4);
        assert_eq!(r.per_constraint, vec![0.0]);
        assert_eq!(r.mean_violation, 0.0);

        let r = violations(&[], &[], 1e-4);
        assert!(r.per_constraint.is_empty());
        assert_eq!(r.mean_violation, 0.0);
        assert!(is_feasible(&r));
    }

    #[test]
    fn feasibility_examples() {
        let report = |v: Vec<f64>| ViolationReport { mean_violation: 0.0, per_constraint: v };
        assert!(is_feasible(&report(vec![0.0, 0.0])));
        assert!(!is_feasible(&report(vec![0.0, 1e-12])));
        assert!(is_feasible(&report(vec![])));
    }

    fn constraint_values() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(prop_oneof![-1e3..1e3f64, Just(0.0)], 0..6)
    }

    proptest! {
        #[test]
        fn penalty_sign_and_consistency(
            f in -1e3..1e3f64,
            g in constraint_values(),
            h in constraint_values(),
            w in 0.1..100.0f64,
        ) {
            let feasible = is_feasible(&violations(&g, &h, 0.0));
            let min = penalize(f, &g, &h, w, Sense::Minimize).unwrap();
            let max = penalize(f, &g, &h, w, Sense::Maximize).unwrap();
            prop_assert!(min >= f);
            prop_assert!(max <= f);
            prop_assert_eq!(feasible, min == f);
            prop_assert_eq!(feasible, max == f);
        }

        #[test]
        fn doubling_weight_increases_penalty(
            f in -1e3..1e3f64,
            g in 1e-3..1e3f64,
            w in 0.1..100.0f64,
        ) {
            let once = penalize(f, &[g], &[], w, Sense::Minimize).unwrap();
            let twice = penalize(f, &[g], &[], 2.0 * w, Sense::Minimize).unwrap();
            prop_assert!(twice > once);
        }
    }
}
