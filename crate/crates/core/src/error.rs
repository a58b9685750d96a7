use thiserror::Error;

/// Errors reported by the surgery calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not an element of Q ∪ {{∞}}")]
    ZeroOverZero,
    #[error("∞ + ∞ is undefined")]
    AddInfinities,
    #[error("0 · ∞ is undefined")]
    MulZeroInfinity,
    #[error("a continued fraction needs at least one term")]
    EmptyContinuedFraction,
    #[error("∞ has no continued fraction expansion")]
    ExpandInfinite,
    #[error("covering slope is undefined for s = ∞")]
    CoveringSlopeInfinite,
    #[error("operation requires non-degenerate invariants (no ∞ coefficients)")]
    DegenerateFiber,
    #[error("not trivializable: requires that n or p is 0")]
    NotTrivializable,
    #[error("parameter {0} takes the excluded value {1}")]
    ExcludedParameter(&'static str, String),
    #[error("no trivializing condition holds for these parameters")]
    NoTrivializingCase,
    #[error("torus parameters must be coprime with |p|, |q| >= 2")]
    InvalidTorusParameters,
    #[error("0-twist along an annular pair is the identity, not a surgery")]
    ZeroAnnularTwist,
    #[error("Hopf pair determinant {0} is not ±1")]
    NonUnimodularPair(String),
    #[error("stair construction requires m >= 1, got m = {0}")]
    StairRange(i64),
    #[error("parameter range is empty")]
    EmptyRange,
    #[error("cannot parse {0:?} as a rational \"p/q\"")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
