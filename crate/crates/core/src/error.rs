use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{value} is not invertible over Z[1/S] with S = {context}")]
    NotInvertible { value: String, context: String },

    #[error("denominator of {0} must be positive and nonzero")]
    ZeroDenominator(String),

    #[error("cannot parse `{0}` as a rational number")]
    ParseScalar(String),

    #[error("integer overflow during Smith normal form")]
    Overflow,

    #[error("coefficient of q^{index} is not integral: {value}")]
    NonIntegralCoefficient { index: usize, value: String },

    #[error("coefficient of q^{index} is not divisible by {divisor}")]
    DivisionNotExact { index: usize, divisor: String },

    #[error("series precision must be at least {min}, got {got}")]
    Precision { min: usize, got: usize },

    #[error("series has no invertible leading coefficient")]
    SeriesNotInvertible,

    #[error("weight {weight}: Koszul matrix computation disagrees with monomial basis: {detail}")]
    BasisMismatch { weight: i64, detail: String },

    #[error("weights are not complementary: expected H^1 weight {expected}, got {got}")]
    WeightMismatch { expected: i64, got: i64 },

    #[error("expected a class in H^{expected}, got H^{got}")]
    DegreeMismatch { expected: u8, got: u8 },

    #[error("model {model} only carries duality witness data")]
    UnsupportedModel { model: String },

    #[error("model {model} requires the primes {required:?} to be inverted")]
    MissingPrimes { model: String, required: Vec<u64> },

    #[error("Tmf_1({m}) is not Anderson self-dual")]
    NoSelfDuality { m: u64 },

    #[error("the Adams operation psi^{n} is not defined on {model}")]
    OperationUndefined { model: String, n: i64 },

    #[error("psi_dual({n}) is undetermined in degree {degree}: {reason}")]
    DualUndetermined { n: i64, degree: i64, reason: String },

    #[error("witness is not scaled: F(D) = {got}, expected {expected} * D")]
    WitnessNotScaled { expected: String, got: String },

    #[error("element does not belong to {model} in degree {degree}")]
    ForeignElement { model: String, degree: i64 },

    #[error("torsion ledger: {0}")]
    Ledger(String),
}

pub type Result<T> = std::result::Result<T, Error>;
