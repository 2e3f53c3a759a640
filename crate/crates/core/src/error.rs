use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at {at}: denominator vanishes")]
    Pole { at: String },

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("reduction exceeded the fuel budget of {budget} steps")]
    FuelExhausted { budget: u64 },

    #[error("kappa must be nonzero for pi(a) = kappa*a + chi to be an automorphism")]
    ZeroKappa,

    #[error("the zero polynomial has no smoothness verdict")]
    ZeroPolynomial,

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),

    #[error("scalar parse error at offset {offset}: {message}")]
    ScalarParse { offset: usize, message: String },

    #[error("ansatz leg is not homogeneous of the required degree: {0}")]
    NotHomogeneous(String),

    #[error("the linear system for this ansatz is inconsistent")]
    NoSolution,

    #[error("tensor size budget exceeded ({terms} terms)")]
    SizeBudget { terms: usize },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
