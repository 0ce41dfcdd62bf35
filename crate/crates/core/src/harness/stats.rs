use alloc::vec::Vec;

use crate::{Error, RunResult, Sense};

/// How the spread of a sample is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Deviation {
    /// Divide by `N`.
    #[default]
    Population,
    /// Divide by `N - 1` (zero for a single value).
    Sample,
}

/// Order statistics, mean and spread of a set of objective values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Statistics {
    pub best: f64,
    pub median: f64,
    pub mean: f64,
    pub worst: f64,
    pub std_dev: f64,
}

/// Summarizes `values` with the population standard deviation. `best` and
/// `worst` follow `sense`.
pub fn summarize(values: &[f64], sense: Sense) -> Result<Statistics, Error> {
    summarize_with(values, sense, Deviation::Population)
}

pub fn summarize_with(values: &[f64], sense: Sense, deviation: Deviation) -> Result<Statistics, Error> {
    if values.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let median = if n % 2 == 1 { sorted[n / 2] } else { (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0 };
    let mean = sorted.iter().sum::<f64>() / n as f64;
    let ss: f64 = sorted.iter().map(|v| (v - mean) * (v - mean)).sum();
    let std_dev = match deviation {
        Deviation::Population => libm::sqrt(ss / n as f64),
        Deviation::Sample if n > 1 => libm::sqrt(ss / (n - 1) as f64),
        Deviation::Sample => 0.0,
    };
    let (lo, hi) = (sorted[0], sorted[n - 1]);
    let (best, worst) = match sense {
        Sense::Minimize => (lo, hi),
        Sense::Maximize => (hi, lo),
    };
    Ok(Statistics { best, median, mean, worst, std_dev })
}

/// Mean evaluations to success, charging `budget` to runs that never
/// succeeded. Zero for no runs.
pub fn mfe(results: &[RunResult], budget: u64) -> f64 {
    if results.is_empty() {
        return 0.0;
    }
    let total: f64 = results.iter().map(|r| r.fe_to_success.unwrap_or(budget) as f64).sum();
    total / results.len() as f64
}
