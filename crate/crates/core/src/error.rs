use thiserror::Error;

/// Errors surfaced by state construction and measure evaluation.
#[derive(Debug, Error)]
pub enum QcorrError {
    #[error("label collision: `{0}` appears on both factors")]
    LabelCollision(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid block specification: {0}")]
    InvalidBlock(String),

    #[error("block {block:?} has rank {rank}, exceeding the logic-qubit capacity of 2")]
    RankOverflow { block: Vec<usize>, rank: usize },

    #[error("unknown state family `{0}`")]
    UnknownFamily(String),

    #[error("parameter out of range: {0}")]
    ParamRange(String),

    #[error("unknown indicator `{0}`")]
    UnknownIndicator(String),

    #[error("route not applicable: {0}")]
    InvalidRoute(String),

    #[error("not an X-form density matrix: {0}")]
    NotXState(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, QcorrError>;
