use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("twist vector must contain at least one entry")]
    EmptyTwistVector,
    #[error("twist n{index} is zero; every twist needs at least one crossing")]
    ZeroTwist { index: usize },
    #[error("twist n{index} = {value} is not positive; the checkerboard construction needs an alternating diagram")]
    NonPositiveTwist { index: usize, value: i64 },
    #[error("no value supplied for variable n{index}")]
    MissingValue { index: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("modulus {0} is invalid; it must be at least 2")]
    BadModulus(u64),
    #[error("brute-force search exceeded the work bound of {cap} assignments")]
    WorkBoundExceeded { cap: u64 },
    #[error("integer overflow in the chosen scalar type")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
