//! Command errors and the exit-code contract.

use thiserror::Error;

use commensura_core::abelian::AbelianError;
use commensura_core::corr::CorrError;
use commensura_core::finring::FiniteRingError;
use commensura_core::oracle::OracleError;
use commensura_core::order::OrderError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed files or options (exit 1).
    #[error("input error: {0}")]
    Input(String),
    /// Well-formed input violating a precondition (exit 2).
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A computation would exceed its cap (exit 3).
    #[error("cap exceeded: {0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Precondition(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<AbelianError> for CliError {
    fn from(e: AbelianError) -> Self {
        match e {
            AbelianError::RankMismatch { .. } | AbelianError::NotFinite(_) => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        match e {
            OrderError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            OrderError::InvalidGroup(_) | OrderError::InvalidOrder(_) | OrderError::InvalidModule(_) => {
                CliError::Input(e.to_string())
            }
            OrderError::Abelian(inner) => inner.into(),
            OrderError::Linalg(_) => CliError::Input(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<FiniteRingError> for CliError {
    fn from(e: FiniteRingError) -> Self {
        match e {
            FiniteRingError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            FiniteRingError::NotPrimePower(_) => CliError::Precondition(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            OracleError::NotFinite => CliError::Precondition(e.to_string()),
            OracleError::Mismatch(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<CorrError> for CliError {
    fn from(e: CorrError) -> Self {
        CliError::Precondition(e.to_string())
    }
}
