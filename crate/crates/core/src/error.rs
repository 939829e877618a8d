use thiserror::Error;

use crate::bisimplicial::Bidegree;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(Bidegree, Bidegree),

    #[error("invalid shape parameters: {0}")]
    InvalidShape(String),

    #[error("enumeration budget of {budget} candidate assignments exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("structure violation: {0}")]
    InvalidStructure(String),

    #[error("not composable: {0}")]
    NotComposable(String),

    #[error("operation requires a locally posetal 2-category")]
    NotLocallyPosetal,

    #[error("unknown identifier: {0}")]
    UnknownId(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
