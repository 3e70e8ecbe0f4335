use num_bigint::BigUint;

/// Errors produced anywhere in the library.
///
/// Every variant maps onto one of the CLI exit codes via [`Error::exit_code`].
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group of order {order} is too large for exhaustive mode (cap {cap})")]
    TooLarge { order: BigUint, cap: usize },
    #[error("more than {0} distinct subgroups; subgroup cap exceeded")]
    SubgroupCap(usize),
    #[error("degree {degree} exceeds the degree cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("group action is not transitive")]
    Intransitive,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("witness {witness} for ({p}, {n}) contradicts a known result: {fact}")]
    ContradictsKnownFact {
        p: u64,
        n: u64,
        witness: String,
        fact: String,
    },
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Corpus { .. } | Error::InvalidSpec(_) => 2,
            Error::TooLarge { .. } | Error::SubgroupCap(_) | Error::DegreeCap { .. } => 3,
            Error::ContradictsKnownFact { .. } | Error::Inconsistent(_) => 1,
            _ => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
