use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("total degree {degree} exceeds homogenizing exponent {n}")]
    DegreeExceedsHomogenizer { degree: u32, n: u32 },
    #[error("matrix is not totally unimodular: {0}")]
    NotTotallyUnimodular(String),
    #[error("matrix has {rows}x{cols} shape beyond the exhaustive unimodularity limit {limit}; pass assume-tu")]
    TuUnverified { rows: usize, cols: usize, limit: usize },
    #[error("ground set has {size} elements, the limit is {limit}")]
    GroundTooLarge { size: usize, limit: usize },
    #[error("not a basis: {0}")]
    NotABasis(String),
    #[error("work budget exceeded: {required} basis assignments required, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("degree safety check failed at q = {q}")]
    DegreeSafetyCheckFailed { q: u64 },
    #[error("result is not a polynomial: {0}")]
    NonPolynomialResult(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
