//! Problem definitions: bounds, sense, objective and constraints.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// A scalar function of the decision vector.
pub type ScalarFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Wraps a closure or function pointer as a [`ScalarFn`].
pub fn scalar(f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> ScalarFn {
    Arc::new(f)
}

/// Per-variable box bounds with `lower[j] < upper[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, Error> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidBounds(alloc::format!(
                "{} lower values but {} upper values",
                lower.len(),
                upper.len()
            )));
        }
        if lower.is_empty() {
            return Err(Error::InvalidBounds("no variables".into()));
        }
        for (j, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidBounds(alloc::format!(
                    "variable {j}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval for every one of `dim` variables.
    pub fn uniform(dim: usize, lower: f64, upper: f64) -> Result<Self, Error> {
        Self::new(alloc::vec![lower; dim], alloc::vec![upper; dim])
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.len()
            && x.iter().zip(self.lower.iter().zip(&self.upper)).all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Projects `v` onto the box in place.
    pub fn clamp_in_place(&self, v: &mut [f64]) {
        for ((x, lo), hi) in v.iter_mut().zip(&self.lower).zip(&self.upper) {
            *x = x.max(*lo).min(*hi);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Sense {
    #[default]
    Minimize,
    Maximize,
}

impl Sense {
    /// Maps a value to minimization form.
    #[inline]
    pub fn to_cost(self, value: f64) -> f64 {
        match self {
            Sense::Minimize => value,
            Sense::Maximize => -value,
        }
    }

    /// `true` when `a` is strictly better than `b`.
    #[inline]
    pub fn is_better(self, a: f64, b: f64) -> bool {
        self.to_cost(a) < self.to_cost(b)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sense::Minimize => "minimize",
            Sense::Maximize => "maximize",
        }
    }
}

/// Inequalities `g_i(x) <= 0` and equalities `h_j(x) = 0`.
#[derive(Clone, Default)]
pub struct ConstraintSet {
    pub inequalities: Vec<ScalarFn>,
    pub equalities: Vec<ScalarFn>,
}

impl ConstraintSet {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn inequalities(gs: Vec<ScalarFn>) -> Self {
        Self { inequalities: gs, equalities: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.inequalities.len() + self.equalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Debug for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstraintSet")
            .field("inequalities", &self.inequalities.len())
            .field("equalities", &self.equalities.len())
            .finish()
    }
}

/// Which evaluation budget rule applies to a problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Unconstrained,
    Constrained,
}

/// An immutable optimization problem.
#[derive(Clone)]
pub struct ProblemSpec {
    pub name: String,
    pub bounds: Bounds,
    pub sense: Sense,
    pub objective: ScalarFn,
    pub constraints: ConstraintSet,
    pub known_best: Option<f64>,
    /// A point whose evaluation reproduces `known_best` and is feasible.
    pub witness: Option<Vec<f64>>,
    /// Where the formulation comes from.
    pub source_note: String,
    pub kind: ProblemKind,
}

/// Raw objective and constraint values at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub objective: f64,
    pub inequalities: Vec<f64>,
    pub equalities: Vec<f64>,
}

impl ProblemSpec {
    pub fn new(name: impl Into<String>, bounds: Bounds, objective: ScalarFn) -> Self {
        Self {
            name: name.into(),
            bounds,
            sense: Sense::Minimize,
            objective,
            constraints: ConstraintSet::none(),
            known_best: None,
            witness: None,
            source_note: String::new(),
            kind: ProblemKind::Unconstrained,
        }
    }

    pub fn with_constraints(mut self, constraints: ConstraintSet) -> Self {
        self.kind = if constraints.is_empty() { ProblemKind::Unconstrained } else { ProblemKind::Constrained };
        self.constraints = constraints;
        self
    }

    pub fn with_sense(mut self, sense: Sense) -> Self {
        self.sense = sense;
        self
    }

    pub fn with_known_best(mut self, value: f64) -> Self {
        self.known_best = Some(value);
        self
    }

    pub fn with_witness(mut self, x: Vec<f64>) -> Self {
        self.witness = Some(x);
        self
    }

    pub fn with_source(mut self, note: impl Into<String>) -> Self {
        self.source_note = note.into();
        self
    }

    pub fn with_kind(mut self, kind: ProblemKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    /// Evaluates objective and constraints at `x`. Out-of-bounds points are
    /// evaluated as given.
    pub fn evaluate(&self, x: &[f64]) -> Result<Evaluation, Error> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: x.len() });
        }
        Ok(Evaluation {
            objective: (self.objective)(x),
            inequalities: self.constraints.inequalities.iter().map(|g| g(x)).collect(),
            equalities: self.constraints.equalities.iter().map(|h| h(x)).collect(),
        })
    }
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("sense", &self.sense)
            .field("constraints", &self.constraints)
            .field("known_best", &self.known_best)
            .finish_non_exhaustive()
    }
}
