use thiserror::Error;

use crate::optimizer::TwoModeOptimum;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// The weight vector has a component outside the Fisher matrix support.
    #[error("parameter not estimable: weight vector leaves the information support (residual {residual:.3e})")]
    NotEstimable { residual: f64 },

    /// Every restart ended with a simplex wider than the tolerance.
    #[error("optimizer did not converge; best value so far {:.6e}", best.qcrb)]
    NotConverged { best: Box<TwoModeOptimum> },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::UnsupportedInput(_) | Error::Config(_) => 2,
            Error::NotEstimable { .. } | Error::NumericalFailure(_) | Error::NotConverged { .. } => 3,
            Error::Io(_) => 2,
        }
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn unsupported(msg: impl Into<String>) -> Error {
    Error::UnsupportedInput(msg.into())
}

pub(crate) fn numerical(msg: impl Into<String>) -> Error {
    Error::NumericalFailure(msg.into())
}
