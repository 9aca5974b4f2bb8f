// SPDX-License-Identifier: MIT OR Apache-2.0
//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the library. The CLI maps [`Error::exit_code`] onto the
/// process exit status.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported characteristic {0}: primes 2, 3, 5 and 7 are outside the supported range")]
    UnsupportedCharacteristic(u64),
    #[error("unstable input: the Dixmier-Ohno vector is identically zero")]
    Unstable,
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("calibration error: {0}")]
    Calibration(String),
    #[error("sampling error: {0}")]
    Sampling(String),
    #[error("reconstruction error: {0}")]
    Reconstruction(String),
    #[error("unclassified singularity: {0}")]
    Unclassified(String),
    #[error("indeterminate result: {0}")]
    Indeterminate(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit status: 1 for bad input, 2 for internal or calibration failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_)
            | Error::UnsupportedCharacteristic(_)
            | Error::Unstable
            | Error::SingularCurve(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
