use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus {g} is out of range (need g >= {min})")]
    InvalidGenus { g: usize, min: usize },

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("polynomial is not symmetric in the roots")]
    NotSymmetric,

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },

    #[error("top-degree Chern class reduces to zero; quotient ring is broken")]
    DegenerateNormalization,

    #[error("empty polarization type")]
    EmptyType,

    #[error("polarization entry d_{index} = {value} is not positive")]
    NonPositiveEntry { index: usize, value: i64 },

    #[error("{left} does not divide {right} (pair d_{index}, d_{next})", next = index + 1)]
    Divisibility { index: usize, left: u64, right: u64 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not in the locus Z")]
    NotInZ,

    #[error("edge index {0} out of range")]
    NoSuchEdge(usize),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("{what} = {value} is above the limit {max}")]
    OutOfBounds { what: String, value: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
