//! Best-Mean-Random (BMR) and Best-Worst-Random (BWR) population optimizers.
//!
//! Both algorithms evolve a fixed-size population of candidate solutions
//! inside box bounds. Every iteration each member proposes one trial vector:
//! with probability one half it moves towards the best member (guided by the
//! population mean for BMR, or away from the worst member for BWR, plus a
//! randomly chosen partner), otherwise it is redrawn uniformly inside its
//! bounds. The coin is tossed once per member by default or once per
//! variable with [`BranchScope::Variable`]. The trial replaces the member
//! only if its penalized fitness is strictly better.
//!
//! Constraints are folded into the fitness with a static quadratic penalty
//! (see [`penalty`]). The crate is `no_std` and only needs `alloc`; file
//! formats, the command line front end and threaded experiment execution live
//! in the companion `bmrbwr` crate.
//!
//! ```
//! use bmrbwr_core::{catalog, optimizer::{run, Algorithm, RunConfig}, rng::SeededStream};
//!
//! let problem = catalog::lookup("sphere-5").unwrap();
//! let config = RunConfig::new(Algorithm::Bwr, 20_000).with_seed(7);
//! let mut rng = SeededStream::new(config.seed);
//! let result = run(&problem, &config, &mut rng).unwrap();
//! assert!(result.best.objective < 1e-6);
//! ```

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
mod error;
pub mod harness;
pub mod optimizer;
pub mod penalty;
pub mod problem;
pub mod rng;

pub use error::Error;
pub use optimizer::{Algorithm, BranchScope, Candidate, IterationRecord, Population, RunConfig, RunResult};
pub use problem::{Bounds, ProblemSpec, Sense};
pub use rng::{RandomStream, ScriptedStream, SeededStream};
