use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("argument must be at least 1, got {0}")]
    NonPositive(i64),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("polynomial is not exactly divisible")]
    NotExactlyDivisible,

    #[error("divisor must have leading coefficient +1 or -1")]
    NonUnitLeading,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("modulus must be monic with degree >= 1")]
    InvalidModulus,

    #[error("non-finite coefficient")]
    NonFinite,

    #[error("signal is empty")]
    EmptySignal,

    #[error("filter expects {expected} samples, got {got}")]
    SampleCount { expected: usize, got: usize },

    #[error("filter design residual {0:e} exceeds tolerance")]
    DesignResidual(f64),

    #[error("filter state does not belong to this filter spec")]
    SpecMismatch,

    #[error("unknown algorithm tag `{0}`")]
    UnknownAlgorithm(String),

    #[error("unknown DTMF digit `{0}`")]
    UnknownDigit(char),

    #[error("block length {got} does not match configured block size {expected}")]
    BlockLength { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
