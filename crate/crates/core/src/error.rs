use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree sequence must contain at least one entry")]
    EmptySequence,

    #[error("could not parse degree sequence: {0}")]
    Parse(String),

    #[error("entry {value} at position {index} exceeds the maximum degree {max}")]
    ExceedsMax { index: usize, value: i64, max: i64 },

    #[error("entry at position {index} would become negative")]
    NegativeDegree { index: usize },

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid perturbation: {0}")]
    InvalidPerturbation(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("predicate {0} requires the degree sum")]
    MissingSigma(&'static str),

    #[error("degree sequence is not graphic")]
    NotGraphic,

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("graph has fewer than two edges")]
    NoEdges,

    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
