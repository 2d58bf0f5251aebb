use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomials live over different fields (F_{0} vs F_{1})")]
    FieldMismatch(u32, u32),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("malformed polynomial text at byte {pos}: {reason}")]
    Parse { pos: usize, reason: String },
    #[error("coefficient {coeff} is not reduced modulo {p}")]
    CoefficientOutOfRange { coeff: u64, p: u32 },
    #[error("exponent {0} appears more than once")]
    DuplicateExponent(usize),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("zero is not allowed as a generator")]
    ZeroGenerator,
    #[error("generators have gcd {0}; the complement would be infinite")]
    NotCofinite(u64),
    #[error("semigroup too large: {0}")]
    TooLarge(String),
    #[error("polynomial is not a member of the semigroup algebra")]
    NotMember,
    #[error("polynomial is not irreducible in the semigroup algebra")]
    NotIrreducible,
    #[error("classification is only defined for q = 2 and S = <2,3>")]
    WrongContext,
    #[error("type trichotomy violated by {0}")]
    Unclassifiable(String),
    #[error("need at least {needed} polynomials, got {got}")]
    TooFewPolynomials { needed: u64, got: usize },
    #[error("argument out of range: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
