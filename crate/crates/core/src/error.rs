use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} is undefined for n = 0")]
    ZeroArgument { what: &'static str },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid color restriction: need 1 <= j <= k, got k = {k}, j = {j}")]
    InvalidColors { k: u32, j: u32 },

    #[error("brute-force enumeration refused: n = {n} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },

    #[error("series order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: usize, limit: usize },

    #[error("constant term is not invertible in the coefficient ring")]
    NonInvertibleConstant,

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("product forms disagree for C_({k},{j}) at q^{index}")]
    FormMismatch { k: u32, j: u32, index: usize },

    #[error("parse error in `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("unknown id `{0}`")]
    UnknownId(String),

    #[error("invalid bijection input: {0}")]
    Bijection(String),

    #[error("independent computations of {what} disagree at index {index}")]
    OracleMismatch { what: String, index: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
