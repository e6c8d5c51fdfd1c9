use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid gem half-order {0}: must be at least 1")]
    InvalidOrder(u32),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("format error{}: {msg}", if *line > 0 { format!(" at line {line}") } else { String::new() })]
    Format { line: usize, msg: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("orientation error: {0}")]
    Orientation(String),
    #[error("no convergence after {iters} iterations (residual {residual:e})")]
    Convergence { iters: usize, residual: f64 },
    #[error("placement error: {0}")]
    Placement(String),
    #[error("degenerate simplex: {0}")]
    Degeneracy(String),
    #[error("embedding failure: {0}")]
    Embedding(String),
    #[error("index out of bounds: {0}")]
    Bounds(String),
    #[error("no generic projection direction found after {attempts} attempts")]
    Projection { attempts: usize },
    #[error("curves too close: {0}")]
    Proximity(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("topology error: {0}")]
    Topology(String),
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format { line, msg: msg.into() }
    }

    /// True for errors caused by malformed or invalid input (as opposed to
    /// numerical or geometric failures).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidOrder(_)
                | Error::Structural(_)
                | Error::Format { .. }
                | Error::Validation(_)
                | Error::Orientation(_)
                | Error::Argument(_)
                | Error::Precondition(_)
                | Error::Bounds(_)
                | Error::Topology(_)
                | Error::Io(_)
                | Error::Json(_)
        )
    }
}
