use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial `{0}` is reducible")]
    Reducible(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("the leading coefficient Δ_r of φ_x must be nonzero")]
    ZeroLeadingDelta,
    #[error("a Drinfeld module needs at least one Δ coefficient")]
    EmptyDeltas,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("precision mismatch: {0} vs {1}")]
    PrecisionMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("empty matrix chain")]
    EmptyChain,
    #[error("the given skew polynomial does not commute with φ_x")]
    NotEndomorphism,
    #[error("the zero skew polynomial has no characteristic polynomial here")]
    ZeroEndomorphism,
    #[error("the bsgs algorithm only applies to the Frobenius endomorphism τ^n")]
    BsgsRequiresFrobenius,
    #[error("precision k = {requested} is below the minimum k = {minimum} for this endomorphism")]
    PrecisionTooLow { requested: usize, minimum: usize },
    #[error("operation requires the prime field case (m = n)")]
    NotPrimeFieldCase,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
