//! The `bmrbwr` command line.

use std::io::Write;
use std::path::{Path, PathBuf};

use bmrbwr_core::harness::{compare, Criterion, DEFAULT_TOLERANCE};
use bmrbwr_core::{catalog, Algorithm, BranchScope, ProblemSpec};
use clap::{Args, Parser, Subcommand};

use crate::config::Settings;
use crate::error::{Error, Result};
use crate::experiment::{default_threads, run_many};
use crate::export::{self, SummaryRecord};
use crate::plot::{self, Series};
use crate::{definition, table};

#[derive(Debug, Parser)]
#[command(name = "bmrbwr", version, about = "BMR and BWR population optimizers and benchmark harness")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one problem and write its summary and convergence trace.
    Run(RunArgs),
    /// Run every problem of a suite.
    Suite(SuiteArgs),
    /// Compare two summary files problem by problem.
    Compare(CompareArgs),
    /// Plot convergence files as SVG, one series per file.
    Plot(PlotArgs),
    /// List built-in problems and suites.
    List(ListArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Algorithms, comma separated (bmr, bwr).
    #[arg(long, value_delimiter = ',')]
    pub algo: Vec<String>,
    /// Independent runs per problem and algorithm.
    #[arg(long)]
    pub runs: Option<usize>,
    /// Base seed; run i uses seed + i.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Population size.
    #[arg(long)]
    pub pop: Option<usize>,
    /// Function evaluation budget per run.
    #[arg(long, alias = "budget")]
    pub fe: Option<u64>,
    /// Static penalty weight.
    #[arg(long)]
    pub weight: Option<f64>,
    /// Equality tolerance of the violation metrics.
    #[arg(long)]
    pub eq_tol: Option<f64>,
    /// Distance to the known optimum that counts as success.
    #[arg(long)]
    pub success_tol: Option<f64>,
    /// Granularity of the exploit-or-reinitialize draw (candidate, variable).
    #[arg(long)]
    pub branch_scope: Option<String>,
    /// JSON file with default settings; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, env = "BMRBWR_OUT", default_value = "bmrbwr-out")]
    pub out: PathBuf,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["problem", "definition"])))]
pub struct RunArgs {
    /// Catalog problem name, e.g. sphere-30 or welded-beam.
    #[arg(long)]
    pub problem: Option<String>,
    /// TOML problem definition file.
    #[arg(long)]
    pub definition: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// unconstrained-25 or engineering-12.
    pub name: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Summaries of algorithm A.
    pub a: PathBuf,
    /// Summaries of algorithm B.
    pub b: PathBuf,
    /// Criteria, comma separated (best, median, mean, worst, std, fr, mv, sr, mfe).
    #[arg(long, value_delimiter = ',')]
    pub criteria: Vec<String>,
    /// Relative tolerance for "similar or equal".
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Convergence CSV files.
    #[arg(required = true)]
    pub csv: Vec<PathBuf>,
    /// Series labels, one per file (defaults to the file stems).
    #[arg(long, value_delimiter = ',')]
    pub label: Vec<String>,
    #[arg(long, default_value = "Convergence")]
    pub title: String,
    /// Output directory.
    #[arg(long, env = "BMRBWR_OUT", default_value = "bmrbwr-out")]
    pub out: PathBuf,
    /// File name inside the output directory.
    #[arg(long, default_value = "convergence.svg")]
    pub output: String,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    /// Only this suite.
    #[arg(long)]
    pub suite: Option<String>,
}

/// Parses `args` (including the program name) and executes the command,
/// writing tables to `stdout`.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Run(a) => cmd_run(a, out),
        Command::Suite(a) => cmd_suite(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Plot(a) => cmd_plot(a, out),
        Command::List(a) => cmd_list(a, out),
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(Error::io("<stdout>"))
}

impl Common {
    fn settings(&self) -> Result<Settings> {
        let branch_scope = match &self.branch_scope {
            None => None,
            Some(s) => Some(BranchScope::parse(s).ok_or_else(|| Error::Usage(format!("unknown branch scope {s:?}")))?),
        };
        let cli = Settings {
            population_size: self.pop,
            max_function_evaluations: self.fe,
            algorithm: None,
            penalty_weight: self.weight,
            equality_tolerance: self.eq_tol,
            seed: self.seed,
            success_tolerance: self.success_tol,
            branch_scope,
            runs: self.runs,
        };
        let file = match &self.config {
            Some(path) => Settings::load(path)?,
            None => Settings::default(),
        };
        Ok(cli.or(file))
    }

    fn algorithms(&self, settings: &Settings) -> Result<Vec<Algorithm>> {
        if self.algo.is_empty() {
            return Ok(settings.algorithm.map_or_else(|| Algorithm::ALL.to_vec(), |a| vec![a]));
        }
        let mut algos = Vec::new();
        for name in &self.algo {
            let a = Algorithm::parse(name).ok_or_else(|| Error::Usage(format!("unknown algorithm {name:?}")))?;
            if !algos.contains(&a) {
                algos.push(a);
            }
        }
        Ok(algos)
    }
}

fn file_stem(problem: &str, algorithm: Algorithm) -> String {
    format!("{problem}-{}", algorithm.as_str())
}

/// Runs every (problem, algorithm) pair, writes per-pair files and prints
/// rows in catalog order. Returns the records grouped by algorithm.
fn run_and_report(
    problems: &[ProblemSpec],
    common: &Common,
    out: &mut dyn Write,
) -> Result<Vec<(Algorithm, Vec<SummaryRecord>)>> {
    let settings = common.settings()?;
    let algorithms = common.algorithms(&settings)?;
    let mut jobs = Vec::new();
    for &algorithm in &algorithms {
        for p in problems {
            jobs.push((p, settings.run_config(algorithm, p)?));
        }
    }
    std::fs::create_dir_all(&common.out).map_err(Error::io(&common.out))?;
    let threads = common.threads.unwrap_or_else(default_threads);
    let experiments = run_many(&jobs, settings.runs(), settings.base_seed(), threads)?;

    write_out(out, &format!("{}\n", table::summary_header()))?;
    let mut grouped: Vec<(Algorithm, Vec<SummaryRecord>)> = algorithms.iter().map(|&a| (a, Vec::new())).collect();
    for ((problem, config), e) in jobs.iter().zip(experiments) {
        write_out(out, &format!("{}\n", table::summary_row(&e.summary)))?;
        let stem = file_stem(&problem.name, config.algorithm);
        export::write_convergence(&common.out.join(format!("{stem}.csv")), &e.runs)?;
        let record = SummaryRecord { summary: e.summary, base_seed: settings.base_seed(), config: config.clone() };
        export::write_json(&common.out.join(format!("{stem}.json")), &record)?;
        grouped.iter_mut().find(|(a, _)| *a == config.algorithm).expect("job algorithm").1.push(record);
    }
    Ok(grouped)
}

fn cmd_run(a: RunArgs, out: &mut dyn Write) -> Result<()> {
    let problem = match (&a.problem, &a.definition) {
        (_, Some(path)) => definition::load(path)?,
        (Some(name), None) => catalog::lookup(name)?,
        (None, None) => return Err(Error::Usage("either --problem or --definition is required".into())),
    };
    run_and_report(std::slice::from_ref(&problem), &a.common, out)?;
    Ok(())
}

fn cmd_suite(a: SuiteArgs, out: &mut dyn Write) -> Result<()> {
    let problems = catalog::suite(&a.name)?;
    for (algorithm, records) in run_and_report(&problems, &a.common, out)? {
        export::write_json(&a.common.out.join(format!("{}-{}.json", a.name, algorithm.as_str())), &records)?;
    }
    Ok(())
}

fn algorithm_label(records: &[SummaryRecord], fallback: &str) -> String {
    match records.first() {
        Some(first) if records.iter().all(|r| r.summary.algorithm == first.summary.algorithm) => {
            first.summary.algorithm.to_string()
        }
        _ => fallback.to_string(),
    }
}

fn cmd_compare(a: CompareArgs, out: &mut dyn Write) -> Result<()> {
    let ra = export::read_summaries(&a.a)?;
    let rb = export::read_summaries(&a.b)?;
    let criteria = if a.criteria.is_empty() {
        Criterion::ALL.to_vec()
    } else {
        a.criteria
            .iter()
            .map(|c| Criterion::parse(c).ok_or_else(|| Error::Usage(format!("unknown criterion {c:?}"))))
            .collect::<Result<_>>()?
    };
    if !(a.tolerance.is_finite() && a.tolerance >= 0.0) {
        return Err(Error::Usage(format!("tolerance must be non-negative, got {}", a.tolerance)));
    }
    let sa: Vec<_> = ra.iter().map(|r| r.summary.clone()).collect();
    let sb: Vec<_> = rb.iter().map(|r| r.summary.clone()).collect();
    let matrix = compare(&sa, &sb, &criteria, a.tolerance)?;
    let title = format!("{} vs. {}", algorithm_label(&ra, "A"), algorithm_label(&rb, "B"));
    write_out(out, &table::comparison_block(&title, &matrix))
}

fn cmd_plot(a: PlotArgs, out: &mut dyn Write) -> Result<()> {
    if !a.label.is_empty() && a.label.len() != a.csv.len() {
        return Err(Error::Usage(format!("{} labels for {} files", a.label.len(), a.csv.len())));
    }
    let mut series = Vec::new();
    for (i, path) in a.csv.iter().enumerate() {
        let rows = export::read_convergence(path)?;
        let label = a.label.get(i).cloned().unwrap_or_else(|| stem(path));
        series.push(Series::mean_best(label, &rows));
    }
    std::fs::create_dir_all(&a.out).map_err(Error::io(&a.out))?;
    let target = a.out.join(&a.output);
    std::fs::write(&target, plot::render(&a.title, &series)).map_err(Error::io(&target))?;
    write_out(out, &format!("{}\n", target.display()))
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn cmd_list(a: ListArgs, out: &mut dyn Write) -> Result<()> {
    let suites: Vec<&str> = match &a.suite {
        Some(s) if catalog::SUITES.contains(&s.as_str()) => vec![s.as_str()],
        Some(s) => return Err(bmrbwr_core::Error::UnknownSuite(s.clone()).into()),
        None => catalog::SUITES.to_vec(),
    };
    let mut text = String::new();
    for name in suites {
        text.push_str(&format!("{name}\n"));
        for p in catalog::suite(name)? {
            let best = p.known_best.map_or_else(|| "-".to_string(), |v| v.to_string());
            text.push_str(&format!(
                "  {:<28} D={:<3} g={:<3} best={:<14} {}\n",
                p.name,
                p.dimension(),
                p.constraints.len(),
                best,
                p.source_note
            ));
        }
    }
    if a.suite.is_none() {
        text.push_str("reserved (load from a definition file)\n");
        for r in catalog::RESERVED {
            text.push_str(&format!("  {r}\n"));
        }
    }
    write_out(out, &text)
}
