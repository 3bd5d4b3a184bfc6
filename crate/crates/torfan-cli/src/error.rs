//! The single error type of the command-line front end, with the exit-code
//! policy: code 1 for anything wrong with the input (unreadable file, parse
//! error, invalid fan, bad flag value), code 2 for a valid fan that falls
//! outside the hypotheses of the obstruction formulas.

use thiserror::Error;
use torfan::exact_linalg::GroupParseError;
use torfan::fan_core::FanError;
use torfan::ktheory::KTheoryError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {reason}")]
    Parse { line: usize, column: usize, reason: String },
    #[error("ray {ray} has {found} coordinates, expected {expected}")]
    BadRayLength { ray: usize, expected: usize, found: usize },
    #[error("cone {cone} refers to ray index {index}, but there are only {ray_count} rays")]
    IndexOutOfRange { cone: usize, index: usize, ray_count: usize },
    #[error("invalid fan: {0}")]
    Fan(#[from] FanError),
    #[error(transparent)]
    Group(#[from] GroupParseError),
    #[error("invalid cone '{text}': {reason}")]
    ConeSyntax { text: String, reason: String },
    #[error("the cone is not a cone of the fan")]
    ConeNotInFan,
    #[error("blow-up deltas need a cone of dimension at least 2")]
    DimensionTooSmall,
    #[error("hypotheses not met: {reason}")]
    HypothesesNotMet { reason: String },
}

impl CliError {
    /// Process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::HypothesesNotMet { .. } => 2,
            _ => 1,
        }
    }
}

impl From<KTheoryError> for CliError {
    fn from(e: KTheoryError) -> Self {
        match e {
            KTheoryError::HypothesesNotMet { reason } => CliError::HypothesesNotMet { reason },
            KTheoryError::ConeNotInFan => CliError::ConeNotInFan,
            KTheoryError::DimensionTooSmall => CliError::DimensionTooSmall,
        }
    }
}
