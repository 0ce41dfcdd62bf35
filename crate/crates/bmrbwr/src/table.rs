//! Plain-text result tables.

use std::fmt::Write;

use bmrbwr_core::harness::{ComparisonMatrix, ExperimentSummary, Tally};

type Cell = fn(&Tally) -> String;

fn real(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| format!("{v:.6e}"))
}

pub fn summary_header() -> String {
    format!(
        "{:<28} {:<4} {:>13} {:>13} {:>13} {:>13} {:>13} {:>6} {:>12} {:>6} {:>10}",
        "Problem", "Alg", "Best", "Median", "Mean", "Worst", "Std. Dev.", "FR", "MV", "SR", "MFE"
    )
}

/// One row with the objective statistics, FR, MV, SR and MFE.
pub fn summary_row(s: &ExperimentSummary) -> String {
    format!(
        "{:<28} {:<4} {:>13} {:>13} {:>13} {:>13} {:>13} {:>6.1} {:>12.4e} {:>6.1} {:>10.0}",
        s.problem,
        s.algorithm.to_string(),
        real(s.best),
        real(s.median),
        real(s.mean),
        real(s.worst),
        real(s.std_dev),
        s.fr,
        s.mv,
        s.sr,
        s.mfe
    )
}

/// Better / similar-or-equal / inferior counts and success percentage per
/// criterion, one column per criterion.
pub fn comparison_block(title: &str, m: &ComparisonMatrix) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<18}", "Criterion");
    for (c, _) in &m.rows {
        let _ = write!(out, " {:>10}", c.label());
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{title}");
    let lines: [(&str, Cell); 4] = [
        ("Better", |t| t.better.to_string()),
        ("Similar or equal", |t| t.similar.to_string()),
        ("Inferior", |t| t.inferior.to_string()),
        ("Success %", |t| format!("{:.1}", t.success_percent())),
    ];
    for (label, cell) in lines {
        let _ = write!(out, "{label:<18}");
        for (_, t) in &m.rows {
            let _ = write!(out, " {:>10}", cell(t));
        }
        let _ = writeln!(out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bmrbwr_core::harness::{compare, Criterion};
    use bmrbwr_core::{Algorithm, Sense};

    fn s() -> ExperimentSummary {
        ExperimentSummary {
            problem: "gear-train".into(),
            algorithm: Algorithm::Bmr,
            sense: Sense::Minimize,
            n_runs: 25,
            best: Some(2.7e-12),
            median: None,
            mean: Some(1.0),
            worst: Some(2.0),
            std_dev: Some(0.5),
            fr: 100.0,
            mv: 0.0,
            sr: 0.0,
            mfe: 100000.0,
        }
    }

    #[test]
    fn row_has_every_column() {
        let row = summary_row(&s());
        assert!(row.starts_with("gear-train"));
        assert!(row.contains("BMR") && row.contains("2.700000e-12") && row.contains(" - "));
        assert_eq!(row.split_whitespace().count(), summary_header().split_whitespace().count() - 1);
    }

    #[test]
    fn block_layout() {
        let m = compare(&[s()], &[s()], &[Criterion::Best, Criterion::Mfe], 1e-6).unwrap();
        let text = comparison_block("BWR vs. BMR", &m);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert!(lines[0].contains("Best") && lines[0].contains("MFE"));
        assert_eq!(lines[1], "BWR vs. BMR");
        assert!(lines[3].starts_with("Similar or equal") && lines[3].trim_end().ends_with('1'));
        assert!(lines[5].contains("100.0"));
    }
}
