use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// The variants are grouped so that callers (the CLI in particular) can map
/// them onto a small exit-code taxonomy; see [`Error::class`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: u64, cap: u64 },

    #[error("value does not lie in Q(zeta_{target}): coefficient {witness} of the residual is nonzero")]
    Descent { target: u32, witness: usize },

    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("data error: {0}")]
    Data(String),

    #[error("N^{a}_{{{c},{d}}} = {value} is not a non-negative integer; input is not modular data")]
    ModularityViolation {
        a: usize,
        c: usize,
        d: usize,
        value: String,
    },

    #[error("integrality error: {0}")]
    Integrality(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownFixture(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

/// Coarse grouping of [`Error`] variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Input was read and understood but fails the defining relations.
    Validation,
    /// Malformed input or arguments.
    Usage,
    /// A computed quantity that must be a non-negative integer (or a root of
    /// unity) was not.
    Consistency,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Validation(_) | Error::Construction(_) => ErrorClass::Validation,
            Error::Domain(_)
            | Error::Syntax { .. }
            | Error::Dimension(_)
            | Error::UnknownFixture(_)
            | Error::Io(_)
            | Error::OrderCap { .. }
            | Error::Unsupported(_) => ErrorClass::Usage,
            Error::DivisionByZero
            | Error::Descent { .. }
            | Error::Data(_)
            | Error::ModularityViolation { .. }
            | Error::Integrality(_)
            | Error::Internal(_) => ErrorClass::Consistency,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
