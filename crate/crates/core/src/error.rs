use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("party count {n} is below the minimum of {min}")]
    TooFewParties { n: usize, min: usize },

    #[error("party count {n} exceeds the limit of {max} for this operation")]
    TooManyParties { n: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("parameter `{name}` = {value} out of range: {reason}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("degenerate operator: {0}")]
    Degenerate(&'static str),

    #[error("operation requires a pure state")]
    RequiresPure,

    #[error("squeezing parameter undefined: contrast below {0:e}")]
    UndefinedSqueezing(f64),

    #[error("enumeration needs {classes} classes, budget is {budget}")]
    EnumerationBudget { classes: u128, budget: u128 },

    #[error("invalid bipartition: {0}")]
    InvalidCut(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
