use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zeta_even requires an even argument >= 2, got {0}")]
    ZetaArgument(u32),
    #[error("value out of double-precision range")]
    OutOfRange,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("unknown series kind {0:?}")]
    UnknownSeriesKind(String),
    #[error("unknown sequence kind {0:?}")]
    UnknownSeqKind(String),
    #[error("series coefficient index {index} is beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("series division requires a nonzero constant leading coefficient")]
    NonInvertibleSeries,
    #[error("series exponential and composition require a zero constant term")]
    NonZeroConstantTerm,
    #[error("exact division failed: {0}")]
    Divisibility(String),
    #[error("reduction produced a non-real coefficient or nonzero constant: {0}")]
    ImaginaryResidue(String),
    #[error("gamma pole at sample point x = {0}")]
    GammaPole(f64),
    #[error("non-finite integrand value {value} at t = {t}")]
    NonFiniteSample { t: f64, value: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
