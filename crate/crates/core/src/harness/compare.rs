use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::ExperimentSummary;
use crate::{Error, Sense};

/// Default relative tolerance under which two values count as equal.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// A summary column two algorithms are compared on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Criterion {
    Best,
    Median,
    Mean,
    Worst,
    StdDev,
    Fr,
    Mv,
    Sr,
    Mfe,
}

impl Criterion {
    pub const ALL: [Criterion; 9] = [
        Criterion::Best,
        Criterion::Median,
        Criterion::Mean,
        Criterion::Worst,
        Criterion::StdDev,
        Criterion::Fr,
        Criterion::Mv,
        Criterion::Sr,
        Criterion::Mfe,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Criterion::Best => "Best",
            Criterion::Median => "Median",
            Criterion::Mean => "Mean",
            Criterion::Worst => "Worst",
            Criterion::StdDev => "Std. Dev.",
            Criterion::Fr => "FR",
            Criterion::Mv => "MV",
            Criterion::Sr => "SR",
            Criterion::Mfe => "MFE",
        }
    }

    /// Case-insensitive parse of a label or its short form (`std`).
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim().to_ascii_lowercase();
        Criterion::ALL.into_iter().find(|c| c.label().to_ascii_lowercase() == s).or(match s.as_str() {
            "std" | "stddev" | "std_dev" => Some(Criterion::StdDev),
            _ => None,
        })
    }

    fn value(self, s: &ExperimentSummary) -> Option<f64> {
        match self {
            Criterion::Best => s.best,
            Criterion::Median => s.median,
            Criterion::Mean => s.mean,
            Criterion::Worst => s.worst,
            Criterion::StdDev => s.std_dev,
            Criterion::Fr => Some(s.fr),
            Criterion::Mv => Some(s.mv),
            Criterion::Sr => Some(s.sr),
            Criterion::Mfe => Some(s.mfe),
        }
    }

    /// Whether `a` beats `b` on this criterion, given the problem's sense.
    fn prefers(self, a: f64, b: f64, sense: Sense) -> bool {
        match self {
            Criterion::Best | Criterion::Median | Criterion::Mean | Criterion::Worst => sense.is_better(a, b),
            Criterion::StdDev | Criterion::Mv | Criterion::Mfe => a < b,
            Criterion::Fr | Criterion::Sr => a > b,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    Better,
    Similar,
    Inferior,
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn similar(a: f64, b: f64, tolerance: f64) -> bool {
    a == b || libm::fabs(a - b) <= tolerance * libm::fmax(1.0, libm::fmax(libm::fabs(a), libm::fabs(b)))
}

/// Classifies `a` against `b`. A missing value (no feasible run) loses to a
/// present one; two missing values are equal.
pub fn classify(criterion: Criterion, a: Option<f64>, b: Option<f64>, sense: Sense, tolerance: f64) -> Outcome {
    match (a, b) {
        (None, None) => Outcome::Similar,
        (Some(_), None) => Outcome::Better,
        (None, Some(_)) => Outcome::Inferior,
        (Some(a), Some(b)) if similar(a, b, tolerance) => Outcome::Similar,
        (Some(a), Some(b)) if criterion.prefers(a, b, sense) => Outcome::Better,
        _ => Outcome::Inferior,
    }
}

/// Better / similar-or-equal / inferior counts for one criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tally {
    pub better: usize,
    pub similar: usize,
    pub inferior: usize,
}

impl Tally {
    pub fn total(&self) -> usize {
        self.better + self.similar + self.inferior
    }

    /// `100 (better + similar) / total`; zero when nothing was compared.
    pub fn success_percent(&self) -> f64 {
        match self.total() {
            0 => 0.0,
            n => 100.0 * (self.better + self.similar) as f64 / n as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonMatrix {
    pub problems: Vec<String>,
    pub rows: Vec<(Criterion, Tally)>,
}

impl ComparisonMatrix {
    pub fn tally(&self, criterion: Criterion) -> Option<Tally> {
        self.rows.iter().find(|(c, _)| *c == criterion).map(|&(_, t)| t)
    }
}

/// Compares algorithm A's summaries against B's, problem by problem.
///
/// Both lists must cover the same problems, each exactly once; order does
/// not matter.
pub fn compare(
    a: &[ExperimentSummary],
    b: &[ExperimentSummary],
    criteria: &[Criterion],
    tolerance: f64,
) -> Result<ComparisonMatrix, Error> {
    let mut problems: Vec<String> = a.iter().map(|s| s.problem.clone()).collect();
    let mut others: Vec<String> = b.iter().map(|s| s.problem.clone()).collect();
    problems.sort();
    others.sort();
    let duplicated = problems.windows(2).any(|w| w[0] == w[1]);
    if problems != others || duplicated {
        let only_a: Vec<&str> = problems.iter().filter(|p| !others.contains(p)).map(String::as_str).collect();
        let only_b: Vec<&str> = others.iter().filter(|p| !problems.contains(p)).map(String::as_str).collect();
        return Err(Error::MismatchedProblems(alloc::format!(
            "only in A: [{}]; only in B: [{}]{}",
            only_a.join(", "),
            only_b.join(", "),
            if duplicated { "; duplicate problems" } else { "" }
        )));
    }
    let rows = criteria
        .iter()
        .map(|&criterion| {
            let mut tally = Tally::default();
            for sa in a {
                let sb = b.iter().find(|s| s.problem == sa.problem).expect("checked above");
                match classify(criterion, criterion.value(sa), criterion.value(sb), sa.sense, tolerance) {
                    Outcome::Better => tally.better += 1,
                    Outcome::Similar => tally.similar += 1,
                    Outcome::Inferior => tally.inferior += 1,
                }
            }
            (criterion, tally)
        })
        .collect();
    Ok(ComparisonMatrix { problems: a.iter().map(|s| s.problem.clone()).collect(), rows })
}
