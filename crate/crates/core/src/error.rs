use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by the optimizer, the catalog and the statistics routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scripted random stream ran out of values.
    StreamExhausted {
        consumed: usize,
    },
    /// A position vector does not match the problem dimension.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Objective or constraint evaluation produced NaN or an infinity.
    NonFinite {
        what: &'static str,
    },
    InvalidBounds(String),
    InvalidConfig(String),
    UnknownProblem {
        name: String,
        available: Vec<String>,
    },
    /// The name is reserved in the catalog but ships no formulation.
    ReservedProblem(String),
    UnknownSuite(String),
    EmptySample,
    MismatchedProblems(String),
    /// A failure inside one run of an experiment.
    Run {
        index: usize,
        source: Box<Error>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::StreamExhausted { consumed } => {
                write!(f, "scripted random stream exhausted after {consumed} draws")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} variables, found {found}")
            }
            Error::NonFinite { what } => write!(f, "non-finite {what} value"),
            Error::InvalidBounds(msg) => write!(f, "invalid bounds: {msg}"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::UnknownProblem { name, available } => {
                write!(f, "unknown problem `{name}`; available: {}", available.join(", "))
            }
            Error::ReservedProblem(name) => {
                write!(f, "problem `{name}` is reserved but has no built-in formulation")
            }
            Error::UnknownSuite(name) => write!(f, "unknown suite `{name}`"),
            Error::EmptySample => f.write_str("cannot summarize an empty sample"),
            Error::MismatchedProblems(msg) => write!(f, "mismatched problem sets: {msg}"),
            Error::Run { index, source } => write!(f, "run {index}: {source}"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Run { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}
