use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic index {0} is not one of 1, 2, 3, 4, 6")]
    UnsupportedCyclotomic(u32),

    #[error("resultant requires monic nonconstant polynomials")]
    NotMonic,

    #[error("weight {0:?} is not weakly decreasing")]
    NotDominant(Vec<i64>),

    #[error("weight has length {got}, expected rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },

    #[error("{0} is not a prime p >= 5")]
    InvalidPrime(u64),

    #[error("input outside the range of validity: {0}")]
    OutOfRange(String),

    #[error("computation exceeds the enumeration guard: {0}")]
    ResourceLimit(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Consistency(_) => 3,
            _ => 2,
        }
    }
}
