use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation precondition was violated.
    #[error("invalid {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A computation produced a non-finite value.
    #[error("non-finite {quantity} (offending parameter {parameter} = {value})")]
    NonFinite {
        quantity: &'static str,
        parameter: &'static str,
        value: f64,
    },

    /// A finite-difference stencil crossed a kink, adoption threshold, or
    /// gap crossing; the caller must shrink the step or move the point.
    #[error("finite-difference stencil [{lo}, {hi}] straddles breakpoint at {breakpoint}")]
    StencilStraddlesBreakpoint { lo: f64, hi: f64, breakpoint: f64 },

    /// Pearson correlation is undefined (zero variance, too few points).
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(String),

    /// A mapped input column is absent from the file header.
    #[error("missing mapped column `{0}`")]
    MissingColumn(String),

    /// A data row could not be ingested.
    #[error("load error at row {row}: {reason}")]
    Load { row: u64, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
