use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by z^{power}: coefficient of z^{index} is nonzero")]
    NotDivisible { power: usize, index: usize },

    #[error("inexact division in an integral-domain elimination step")]
    InexactDivision,

    #[error("invalid extension spec: {0}")]
    SpecInvalid(String),

    #[error("endpoint class undefined for zero z-exponent")]
    Unclassifiable,

    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error("check inapplicable: {0}")]
    Inapplicable(String),

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("polynomial vanishes at the lower interval endpoint")]
    BoundaryRoot,

    #[error("expected a one-dimensional null space, found dimension {0}")]
    NullSpaceDimension(usize),

    #[error("quadrature did not converge: {0}")]
    QuadratureNonconvergence(String),

    #[error("finite-difference grid too coarse: {0}")]
    GridTooCoarse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
