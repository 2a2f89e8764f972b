use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: String, found: String },

    #[error("operad mismatch: expected {expected}, found {found}")]
    OperadMismatch { expected: String, found: String },

    #[error("value {value} out of range 1..={bound}")]
    OutOfRange { value: usize, bound: usize },

    #[error("not a bijection")]
    NotBijective,

    #[error("color mismatch: {0}")]
    ColorMismatch(String),

    #[error("malformed data: {0}")]
    Malformed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
