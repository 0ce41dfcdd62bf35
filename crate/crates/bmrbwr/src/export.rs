//! Convergence traces as CSV and experiment summaries as JSON.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use bmrbwr_core::harness::ExperimentSummary;
use bmrbwr_core::{IterationRecord, RunConfig, RunResult};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 5] = ["run_id", "iteration", "fe_count", "best_penalized", "mean_penalized"];

/// One row of a convergence file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub run_id: usize,
    pub record: IterationRecord,
}

/// Renders with 17 significant digits, enough to round-trip any `f64`.
pub fn full_precision(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

/// Writes the traces of `runs`, numbering them from zero.
pub fn write_convergence(path: &Path, runs: &[RunResult]) -> Result<()> {
    let rows =
        runs.iter().enumerate().flat_map(|(run_id, r)| r.trace.iter().map(move |&record| TraceRow { run_id, record }));
    write_rows(path, rows)
}

pub fn write_rows(path: &Path, rows: impl IntoIterator<Item = TraceRow>) -> Result<()> {
    let csv_err = |source| Error::Csv { path: path.into(), source };
    let file = File::create(path).map_err(Error::io(path))?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for row in rows {
        let r = row.record;
        w.write_record([
            row.run_id.to_string(),
            r.iteration.to_string(),
            r.fe_count.to_string(),
            full_precision(r.best_penalized),
            full_precision(r.mean_penalized),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(Error::io(path))
}

pub fn read_convergence(path: &Path) -> Result<Vec<TraceRow>> {
    let csv_err = |source| Error::Csv { path: path.into(), source };
    let mut r = csv::Reader::from_path(path).map_err(csv_err)?;
    let header = r.headers().map_err(csv_err)?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::format(path, format!("expected header {}", CSV_HEADER.join(","))));
    }
    let mut rows = Vec::new();
    for (line, record) in r.records().enumerate() {
        let record = record.map_err(csv_err)?;
        let bad = |field: &str| Error::format(path, format!("row {}: invalid {field}", line + 2));
        let int = |i: usize| record[i].trim().parse::<u64>().map_err(|_| bad(CSV_HEADER[i]));
        let real = |i: usize| record[i].trim().parse::<f64>().map_err(|_| bad(CSV_HEADER[i]));
        rows.push(TraceRow {
            run_id: int(0)? as usize,
            record: IterationRecord {
                iteration: int(1)?,
                fe_count: int(2)?,
                best_penalized: real(3)?,
                mean_penalized: real(4)?,
            },
        });
    }
    if rows.is_empty() {
        return Err(Error::format(path, "no data rows"));
    }
    Ok(rows)
}

/// A summary with the settings that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    #[serde(flatten)]
    pub summary: ExperimentSummary,
    pub base_seed: u64,
    pub config: RunConfig,
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).map_err(Error::io(path))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value).map_err(|source| Error::Json { path: path.into(), source })?;
    w.write_all(b"\n").and_then(|_| w.flush()).map_err(Error::io(path))
}

/// Reads a file holding either one summary record or an array of them.
pub fn read_summaries(path: &Path) -> Result<Vec<SummaryRecord>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        One(Box<SummaryRecord>),
        Many(Vec<SummaryRecord>),
    }
    let text = std::fs::read_to_string(path).map_err(Error::io(path))?;
    match serde_json::from_str(&text).map_err(|source| Error::Json { path: path.into(), source })? {
        OneOrMany::One(r) => Ok(vec![*r]),
        OneOrMany::Many(v) => Ok(v),
    }
}
