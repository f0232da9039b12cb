//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inverse of zero")]
    InverseOfZero,

    #[error("point lies outside I_q = [0, 1/(q-1)]")]
    OutOfRange,

    #[error("base outside the validity interval: {0}")]
    BaseOutOfRange(String),

    #[error("point lies outside the switch region S_q")]
    NotInSwitch,

    #[error("state graph is incomplete: {0}")]
    IncompleteGraph(String),

    #[error("step budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
