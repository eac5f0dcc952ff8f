//! Error type shared across the crate.

use crate::cartan::Label;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("unknown type `{0}`")]
    UnknownType(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("matrix is not symmetrizable at pair ({a}, {b}): A[{a}][{b}] and A[{b}][{a}] cannot be rescaled consistently")]
    NotSymmetrizable { a: Label, b: Label },

    #[error("unknown node label {0}")]
    UnknownLabel(Label),

    #[error("operation requires finite type, got {0}")]
    NotFiniteType(String),

    #[error("weight is not dominant: <h_{label}, w> = {value}")]
    NotDominant { label: Label, value: i64 },

    #[error("unsupported folding `{key}`; supported: {supported}")]
    UnknownFolding { key: String, supported: String },

    #[error("element is not in the virtual image: {0}")]
    NotInVirtualImage(String),

    #[error("Cartan datum mismatch: {0}")]
    DatumMismatch(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("node budget {0} exceeded")]
    BudgetExceeded(usize),

    #[error("gamma table inconsistency: {0}")]
    GammaInconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
