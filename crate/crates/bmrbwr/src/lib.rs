//! File formats, multi-threaded experiments and the command line front end
//! for [`bmrbwr_core`].
//!
//! - [`export`]: convergence traces as CSV, summaries as JSON.
//! - [`definition`]: problems defined in TOML with [`expr`] expressions.
//! - [`config`]: run settings from flags, a JSON file and defaults.
//! - [`plot`]: SVG convergence plots.
//! - [`cli`]: the `bmrbwr` binary.

pub mod cli;
pub mod config;
pub mod definition;
mod error;
pub mod experiment;
pub mod export;
pub mod expr;
pub mod plot;
pub mod table;

pub use error::{Error, Result};
