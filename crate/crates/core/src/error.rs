use thiserror::Error;

/// Errors raised by the core library.
///
/// Every variant is an input or resource problem. A failed identity is never
/// an error: verification routines report it through their `equal` / `pass`
/// flags instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} is outside the supported range 2..=2^20")]
    FieldTooLarge(u64),
    #[error("no built-in modulus for q = {0}; supply one")]
    MissingModulus(u64),
    #[error("modulus {0:?} is not a valid degree-{1} polynomial over F_{2}")]
    BadModulus(Vec<u32>, u32, u32),
    #[error("modulus {0:?} is reducible over F_{1}")]
    ReducibleModulus(Vec<u32>, u32),
    #[error("label {0} is not an element of F_{1}")]
    NotInField(u64, u32),
    #[error("zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("cyclotomic operands have different orders ({0} vs {1})")]
    MixedCyclotomicOrder(u32, u32),
    #[error("row {row} has length {len}, expected {n}")]
    RaggedRows { row: usize, len: usize, n: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("coefficient {index} is not divisible by {divisor}: input is not a weight enumerator of a linear code")]
    NonIntegerTransform { index: usize, divisor: String },
    #[error("parameter {name} = {value} is outside {range}")]
    OutOfRange { name: &'static str, value: String, range: &'static str },
    #[error("operation requires a binary code, got q = {0}")]
    NotBinary(u32),
    #[error("lattice is already a dual lattice")]
    AlreadyDual,
    #[error("supports of the two distributions differ")]
    SupportMismatch,
    #[error("tolerance {0} cannot be reached within the enumeration budget")]
    ToleranceUnreachable(String),
    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),
    #[error("code length {0} exceeds the supported maximum of 63 for lattice operations")]
    LengthTooLarge(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
