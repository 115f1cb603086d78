use thiserror::Error;

/// Errors raised by the field, series, operator and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("zero is not a valid base here")]
    ZeroBase,
    #[error("evaluation point {0} is a pole")]
    PoleAtEvaluationPoint(String),
    #[error("composition needs a zero constant term in the inner series (got {0})")]
    NonzeroInnerConstantTerm(String),
    #[error("series is not invertible (needs f_0 = 0 and f_1 != 0)")]
    NotInvertible,
    #[error("series is not divisible by x^{n}: coefficient {index} is nonzero")]
    NotDivisibleByXn { n: usize, index: usize },
    #[error("cannot evaluate a Laurent polynomial with negative exponents at zero")]
    ZeroAtNegativeExponent,
    #[error("zero polynomial has no q-difference order")]
    ZeroPolynomial,
    #[error("q is a root of unity (q^{0} = 1)")]
    RootOfUnityBase(usize),
    #[error("precision {have} is too low, need at least {need}")]
    PrecisionTooLow { have: usize, need: usize },
    #[error("q-difference order mismatch: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("denominator q^{0} - q vanished")]
    RootOfUnityDivisor(usize),
    #[error("map is not tangent to the identity (needs p_0 = 0 and p_1 = 1)")]
    NotTangentToIdentity,
    #[error("interpolated iterate coefficient for degree {j} disagrees with direct composition at n = {node}")]
    InterpolationMismatch { j: usize, node: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
