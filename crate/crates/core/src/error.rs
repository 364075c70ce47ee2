use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("multiplicity {0} is smaller than 2")]
    MultiplicityTooSmall(i64),

    #[error("at least {min} multiplicities are required, got {got}")]
    TooFewFibers { min: usize, got: usize },

    #[error("multiplicities {0} and {1} are not coprime")]
    NotCoprime(i64, i64),

    #[error("this operation needs exactly three fibers, got {0}")]
    NotThreeFibers(usize),

    #[error("splice index j={j} is outside 2..={max}")]
    SpliceIndex { j: usize, max: usize },

    #[error("rotation vector violates {0}")]
    InvalidRotationVector(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("no involution-conjugating element found (residual {0:e})")]
    RhoNotFound(f64),

    #[error("representation is reducible")]
    Reducible,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid continued fraction input {0}/{1}")]
    InvalidFraction(i64, i64),

    #[error("malformed PD code: {0}")]
    MalformedPd(String),

    #[error("diagram has {0} components, a knot is required")]
    NotAKnot(usize),

    #[error("crossing budget exceeded: {got} > {max}")]
    CrossingBudget { got: usize, max: usize },

    #[error("Seifert matrix extraction failed: {0}")]
    SeifertExtraction(String),

    #[error("Laurent polynomial vanishes at t = -1")]
    VanishesAtMinusOne,

    #[error("Floer rank formula fails for lambda={lambda}, sign={sign}: {reason}")]
    TheoremViolation { lambda: i64, sign: i64, reason: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
