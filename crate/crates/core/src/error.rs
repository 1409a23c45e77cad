use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("group too large: closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error(
        "graph too large: {vertices} vertices exceeds the explicit-graph cap of {cap}; \
         use the fixer-neighbourhood route instead"
    )]
    GraphTooLarge { vertices: usize, cap: usize },

    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::GroupTooLarge { .. } => "group-too-large",
            Error::GraphTooLarge { .. } => "graph-too-large",
            Error::DivisionByZero(_) => "division-by-zero",
            Error::Hypothesis(_) => "hypothesis",
            Error::CrossCheck(_) => "cross-check",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
