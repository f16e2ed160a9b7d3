use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument that must be a positive integer was zero or negative.
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: i128 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p-adic valuation of zero is infinite")]
    ZeroValuation,

    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },

    #[error("coefficient list has length {coefficients} but constraint list has length {constraints}")]
    LengthMismatch { coefficients: usize, constraints: usize },

    #[error("signals have mismatched periods {left} and {right}")]
    PeriodMismatch { left: u64, right: u64 },

    #[error("a periodic signal needs at least one value")]
    EmptySignal,

    #[error("divisor values do not cover exactly the divisors of {0}")]
    BadDivisorMap(u64),

    #[error("signal is not even modulo {0}")]
    NotEven(u64),

    #[error("at least one operand is required")]
    NoOperands,

    #[error("enumeration needs {required} tuples, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no counting method named `{0}`")]
    UnknownMethod(String),

    #[error("method `{method}` does not apply to this instance")]
    Unsupported { method: &'static str },

    #[error("a method named `{0}` is already registered")]
    DuplicateMethod(String),

    /// A division that the underlying identity guarantees to be exact was not.
    #[error("non-integral result in {context}: {value}")]
    NonIntegral { context: &'static str, value: String },

    /// A count came out negative.
    #[error("negative count in {context}: {value}")]
    Negative { context: &'static str, value: String },

    /// Two routes that must agree produced different values.
    #[error("{context}: routes disagree ({left} vs {right})")]
    Disagreement {
        context: &'static str,
        left: String,
        right: String,
    },
}

impl Error {
    /// True for the errors raised when an exactness or agreement check fails.
    pub fn is_integrity_failure(&self) -> bool {
        matches!(
            self,
            Error::NonIntegral { .. } | Error::Negative { .. } | Error::Disagreement { .. }
        )
    }
}

pub(crate) fn positive(name: &'static str, value: u64) -> Result<u64> {
    if value == 0 {
        Err(Error::NonPositive { name, value: 0 })
    } else {
        Ok(value)
    }
}
