//! Multi-threaded experiment execution.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use bmrbwr_core::harness::{single_run, summarize_runs, Deviation, Experiment};
use bmrbwr_core::{Error, ProblemSpec, RunConfig, RunResult};

/// Threads to use when none are requested.
pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Same contract as [`bmrbwr_core::harness::run_experiment`], spreading the
/// runs over `threads` worker threads. Results do not depend on the number
/// of threads; on failure the error of the lowest failing run is returned.
pub fn run_experiment(
    problem: &ProblemSpec,
    config: &RunConfig,
    n_runs: usize,
    base_seed: u64,
    threads: usize,
) -> Result<Experiment, Error> {
    if n_runs == 0 {
        return Err(Error::InvalidConfig("n_runs must be at least 1".into()));
    }
    config.validate()?;
    let runs = run_indexed(n_runs, threads, |i| single_run(problem, config, base_seed, i))?;
    let summary = summarize_runs(problem, config, &runs, Deviation::Population)?;
    Ok(Experiment { summary, runs })
}

/// Evaluates `job(0..n)` on up to `threads` threads and returns the results
/// in index order.
pub fn run_indexed<T, F>(n: usize, threads: usize, job: F) -> Result<Vec<T>, Error>
where
    T: Send,
    F: Fn(usize) -> Result<T, Error> + Sync,
{
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 {
        return (0..n).map(&job).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<T, Error>>>> = Mutex::new((0..n).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let r = job(i);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("worker panicked").into_iter().map(|r| r.expect("every index is processed")).collect()
}

/// Runs of several experiments, flattened so all threads stay busy across
/// experiment boundaries.
pub fn run_many(
    jobs: &[(&ProblemSpec, RunConfig)],
    n_runs: usize,
    base_seed: u64,
    threads: usize,
) -> Result<Vec<Experiment>, Error> {
    if n_runs == 0 {
        return Err(Error::InvalidConfig("n_runs must be at least 1".into()));
    }
    for (_, c) in jobs {
        c.validate()?;
    }
    let flat: Vec<RunResult> = run_indexed(jobs.len() * n_runs, threads, |i| {
        let (problem, config) = &jobs[i / n_runs];
        single_run(problem, config, base_seed, i % n_runs)
    })?;
    let mut flat = flat.into_iter();
    jobs.iter()
        .map(|(problem, config)| {
            let runs: Vec<RunResult> = flat.by_ref().take(n_runs).collect();
            let summary = summarize_runs(problem, config, &runs, Deviation::Population)?;
            Ok(Experiment { summary, runs })
        })
        .collect()
}
