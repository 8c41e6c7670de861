use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial has a repeated root in the domain")]
    NonSquarefree,
    #[error("polynomial vanishes at the domain endpoint {0}")]
    RootOnBoundary(String),
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("twist vector must have odd positive length, got {0}")]
    BadLength(usize),
    #[error("twist at strand {index} is negative ({value})")]
    NegativeTwist { index: usize, value: i64 },
    #[error("the unknot has no Seifert surface basis")]
    UnknotHasNoSurfaceBasis,

    #[error("Alexander determinant is not a polynomial in z = x - 1/x: {0}")]
    RewriteFailure(String),
    #[error("closed form requires genus {expected}, knot has genus {actual}")]
    WrongGenus { expected: usize, actual: usize },
    #[error("v3 from the Jones polynomial is not an integer: {0}")]
    NonIntegerV3(String),
    #[error("{quantity}: {route_a} route gives {value_a}, {route_b} route gives {value_b}")]
    RouteMismatch {
        quantity: String,
        route_a: String,
        value_a: String,
        route_b: String,
        value_b: String,
    },

    #[error("expected {expected} Alexander-root angles in (0, pi), found {found}")]
    WrongRootCount { expected: usize, found: usize },
    #[error("query angle coincides with an Alexander-root angle")]
    OnRoot,
    #[error("Hermitian form is too close to singular to certify its signature")]
    PrecisionExhausted,

    #[error("7a2^2 - a2 - 10a4 vanishes; the ratio criterion does not apply")]
    DegenerateDenominator,

    #[error("cannot parse knot {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("golden data mismatch: {0}")]
    GoldenMismatch(String),
}
