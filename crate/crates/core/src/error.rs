//! Error taxonomy shared by every analysis entry point.
//!
//! The three variants deliberately mirror the three non-zero process exit
//! codes of the command-line tool: `Unsupported` marks analyses the engine
//! refuses to attempt (for example a prime field too small for the dual
//! algebra at hand), `Invalid` marks malformed or precondition-violating
//! input, and `Internal` marks a disagreement between two independent
//! computations of the same object — which is always a bug, never a property
//! of the input.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The input is well-formed but outside what the engine will analyze.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Malformed input or a violated operation precondition.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Two independent routes to the same value disagreed; indicates an
    /// arithmetic bug and must abort the run.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
