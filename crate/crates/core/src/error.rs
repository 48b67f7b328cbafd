use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index error: {0}")]
    Index(String),
    #[error("degree error: polynomial of degree {degree} cannot be reversed at length {n}")]
    Degree { degree: usize, n: usize },
    #[error("not expandable: denominator has no invertible constant term")]
    NotExpandable,
    #[error("range error: need moments up to index {needed}, have {available}")]
    Range { needed: usize, available: usize },
    #[error("degenerate coefficient specification: {0}")]
    DegenerateSpec(String),
    #[error("singular Hankel matrix of size {0}")]
    SingularHankel(usize),
    #[error("unsupported here: {0}")]
    Unsupported(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not in image: {0}")]
    NotInImage(String),
    #[error("bijection violation: {0}")]
    BijectionViolation(String),
    #[error("accuracy error: estimated error {estimate:e} exceeds target {target:e}")]
    Accuracy { estimate: f64, target: f64 },
    #[error("numeric error: {0}")]
    Numeric(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration of {requested} steps exceeds the cap of {cap}")]
    EnumerationCap { requested: usize, cap: usize },
    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
    #[error("exact division failed: {0}")]
    NotDivisible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
