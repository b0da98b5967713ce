use thiserror::Error;

/// Errors produced by the nilorb library.
#[derive(Debug, Error)]
pub enum Error {
    /// A sequence of parts that is not a valid partition (negative entries,
    /// not sorted after normalization is impossible, etc.).
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// A partition does not lie in the parity class required by an algebra
    /// or operation.
    #[error("partition {partition} is not in {class} of {n}")]
    ClassMismatch {
        partition: String,
        class: String,
        n: u32,
    },

    /// Two objects that must refer to the same integer n (or the same
    /// algebra) disagree.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// An algebra parameter outside the supported range, or a malformed
    /// algebra name.
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    /// An orbit label that does not exist in the relevant table, with
    /// near-miss suggestions when available.
    #[error("unknown orbit label {label:?}{}", suggestion_text(.suggestions))]
    UnknownLabel {
        label: String,
        suggestions: Vec<String>,
    },

    /// A well-formed request whose answer is undefined (zero orbit where a
    /// nonzero one is required, empty Levi, etc.).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed textual input (partition text, orbit text, polynomial
    /// expression, CSV record, witness string).
    #[error("parse error: {0}")]
    Parse(String),
}

fn suggestion_text(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!(" (did you mean one of: {}?)", suggestions.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
