use thiserror::Error;

/// Errors produced while building groups or computing character tables.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order cap exceeded: order reaches at least {order}, cap is {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("subgroup is not normal in the parent group")]
    NotNormal,

    #[error("invalid group expression: {0}")]
    SpecParse(String),

    #[error("character table computation failed: {0}")]
    Numeric(String),

    /// An internal cross-check failed. This signals an engine bug (or a
    /// falsified identity), never bad user input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
