use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus polynomial {0:?} is not irreducible")]
    NotIrreducible(Vec<u32>),
    #[error("modulus polynomial {0:?} is irreducible but its root is not primitive")]
    NotPrimitive(Vec<u32>),
    #[error("invalid modulus polynomial: {0}")]
    BadModulus(String),
    #[error("field of order {0} is larger than supported (q <= 256)")]
    FieldTooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field order {0} is not an even power of a prime")]
    NotSquareOrder(usize),
    #[error("cyclotomic orders {left} and {right} do not match")]
    IncompatibleCyclotomicOrder { left: u32, right: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coordinate {index} out of range 1..={length}")]
    IndexOutOfRange { index: usize, length: usize },
    #[error("code has {0} codewords, above the enumeration cap of 2^20")]
    EnumerationCap(u128),
    #[error("polynomials over different variable alphabets")]
    AlphabetMismatch,
    #[error("no substitution rule for variable {0}")]
    MissingRule(String),
    #[error("variable {from} cannot be merged into {to}: kinds differ")]
    KindMismatch { from: String, to: String },
    #[error("invalid split specification: {0}")]
    InvalidSplit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("molien coefficient at u^{i} v^{j} is not an integer: {value}")]
    NonIntegerCoefficient { i: usize, j: usize, value: String },
    #[error("design cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown code `{0}`")]
    UnknownCode(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
