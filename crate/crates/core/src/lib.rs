//! Exact engine for multi-indexed rational extensions of the isotonic
//! (radial) oscillator and their exceptional Laguerre polynomial families.
//!
//! The pipeline is: choose type-I/II seed indices ([`ExtensionSpec`]),
//! compute the Wronskian denominator polynomial `g(z)` ([`compute_g`]),
//! certify that it has no zero on the positive half-line ([`certify`]),
//! then build the extended potential and its exceptional polynomials
//! ([`spectral`]). Everything up to the numeric checks is exact rational
//! arithmetic.
//!
//! The algebra is generic over [`Scalar`]; the aliases below fix the exact
//! and floating instantiations used throughout.

pub mod error;
pub mod exactmath;
pub mod laguerre;
pub mod lattice;
pub mod regularity;
pub mod report;
pub mod scalar;
pub mod spectral;
pub mod wronskian;

pub use error::{Error, Result};
pub use exactmath::{pochhammer, vandermonde, Poly};
pub use laguerre::{
    endpoint_class, isotonic_spectrum, laguerre, laguerre_negated_arg, make_seed, EndpointClass,
    IsotonicParams, QuasiPoly, SeedEnergy, SeedKind, SeedSpec,
};
pub use regularity::{
    certify, count_roots_open_interval, sturm_sequence, RegularityCertificate, Upper,
};
pub use scalar::Scalar;
pub use wronskian::{
    build_gamma_matrix, check_origin_recurrence, compute_g, predict_const, predict_mu_sigma_lead,
    wronskian_direct, ExtensionSpec, GReport,
};

/// Exact rational number.
pub type Rational = num_rational::BigRational;
/// Polynomial with exact rational coefficients.
pub type RatPoly = Poly<Rational>;
/// Polynomial with `f64` coefficients, for numeric evaluation.
pub type FloatPoly = Poly<f64>;

/// `num/den` as a [`Rational`]. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
