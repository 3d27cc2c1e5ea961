use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("evaluation at a pole: u = {0}")]
    Pole(String),
    #[error("cannot expand {0}: pole at the expansion point")]
    SeriesPole(&'static str),
    #[error("series with different expansion points cannot be combined")]
    MixedExpansion,
    #[error("the zero polynomial has no squarefree decomposition")]
    ZeroPolynomial,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("not semistandard: {0}")]
    NotSemistandard(String),
    #[error("vanishing denominator with admissible target: {0}")]
    VanishingDenominator(String),
    #[error("ratio of l-weights is not a simple l-root: {0}")]
    NotSimpleRoot(String),
    #[error("invalid module spec: {0}")]
    InvalidSpec(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("brute-force and closed-form verdicts disagree: {0}")]
    Disagreement(String),
    #[error("{0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
