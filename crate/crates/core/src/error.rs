use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime below 2^62")]
    InvalidModulus(u64),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("shift has length {got}, expected {expected}")]
    ShiftLength { expected: usize, got: usize },
    #[error("order tuple has length {got}, expected {expected}")]
    OrderLength { expected: usize, got: usize },
    #[error("column {col} has degree {deg}, not below its order {order}")]
    OrderViolation { col: usize, deg: usize, order: usize },
    #[error("offset {offset} exceeds order {order} in column {col}")]
    OffsetTooLarge { col: usize, offset: usize, order: usize },
    #[error("row {0} is zero")]
    ZeroRow(usize),
    #[error("matrix is not in shifted weak Popov form")]
    NotWeakPopov,
    #[error("constant matrix is singular")]
    Singular,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("order tuple is not sorted in nonincreasing order")]
    Unsorted,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
