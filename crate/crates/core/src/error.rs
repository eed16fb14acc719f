use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a valid squarefree field parameter (D must be squarefree, D != 0, D != 1)")]
    InvalidField(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("division by zero field element")]
    DivisionByZero,

    #[error("element has negative valuation at this place, cannot reduce")]
    NegativeValuation,

    #[error("the zero polynomial has no root set")]
    ZeroPolynomial,

    #[error("residue field of size {size} exceeds the configured bound {bound}")]
    UnsupportedPlace { size: u128, bound: u128 },

    #[error("Weierstrass model is singular (discriminant = 0)")]
    SingularModel,

    #[error("transform scale u must be nonzero")]
    ZeroScale,

    #[error("twisting parameter must be nonzero")]
    ZeroTwist,

    #[error("field is not imaginary quadratic")]
    NotImaginary,

    #[error("the classification tables have no row for p={p}, v(p)={vp}, j-class {jclass}")]
    HypothesisNotMet { p: u64, vp: u32, jclass: String },

    #[error("mu must be one of 2, 4, 6, 8, 10, 12 (got {0})")]
    InvalidMu(u32),

    #[error("instantiation requires the `{0}` invariant which was not supplied")]
    MissingInvariant(char),

    #[error("extension degree must be 6 or 12 (got {0})")]
    InvalidDegree(u32),

    #[error("cannot parse Kodaira symbol `{0}`")]
    BadKodairaSymbol(String),
}

pub type Result<T> = std::result::Result<T, Error>;
