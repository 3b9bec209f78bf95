//! Generalized Laguerre polynomials, the isotonic oscillator spectrum and the
//! type-I / type-II seed functions.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::{rat, Poly, RatPoly, Rational};

/// Isotonic oscillator `V_l(x) = w^2 x^2 / 4 + l(l+1)/x^2` on `x > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotonicParams {
    l: Rational,
    omega: Rational,
}

impl IsotonicParams {
    pub fn from_l(l: Rational, omega: Rational) -> Result<Self> {
        if l.is_negative() {
            return Err(Error::SpecInvalid(format!(
                "angular momentum l = {l} is negative"
            )));
        }
        if !omega.is_positive() {
            return Err(Error::SpecInvalid(format!(
                "omega = {omega} must be positive"
            )));
        }
        Ok(Self { l, omega })
    }

    /// From `alpha = l + 1/2`.
    pub fn from_alpha(alpha: Rational, omega: Rational) -> Result<Self> {
        Self::from_l(alpha - rat(1, 2), omega)
    }

    pub fn l(&self) -> &Rational {
        &self.l
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn alpha(&self) -> Rational {
        &self.l + rat(1, 2)
    }

    /// `V_l(x)` in floating point.
    pub fn potential(&self, x: f64) -> f64 {
        let w = self.omega.to_f64();
        let l = self.l.to_f64();
        0.25 * w * w * x * x + l * (l + 1.0) / (x * x)
    }
}

/// `E_nu = w (2 nu + alpha + 1)`
pub fn isotonic_spectrum(params: &IsotonicParams, nu: u32) -> Rational {
    params.omega() * (Rational::from_i64(2 * nu as i64) + params.alpha() + Rational::one())
}

/// `L_n^{(a)}(z)` by the three-term recurrence
/// `(n+1) L_{n+1} = (2n+1+a-z) L_n - (n+a) L_{n-1}`.
pub fn laguerre<T: Scalar>(n: u32, a: &T) -> Poly<T> {
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::from_coeffs(vec![T::one() + a, -T::one()]);
    for k in 1..n {
        let kk = T::from_i64(k as i64);
        let lin = Poly::from_coeffs(vec![T::from_i64(2 * k as i64 + 1) + a, -T::one()]);
        let next = &(&lin * &cur) - &prev.scale(&(kk.clone() + a));
        let inv = T::one() / &(kk + &T::one());
        prev = cur;
        cur = next.scale(&inv);
    }
    cur
}

/// `L_n^{(a)}(-z)`
pub fn laguerre_negated_arg<T: Scalar>(n: u32, a: &T) -> Poly<T> {
    laguerre(n, a).negate_arg()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SeedKind {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeedSpec {
    pub kind: SeedKind,
    pub m: u32,
}

impl SeedSpec {
    pub fn new(kind: SeedKind, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::SpecInvalid("seed index m must be at least 1".into()));
        }
        Ok(Self { kind, m })
    }
}

/// Factorization energy of a seed, in units of `omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedEnergy(pub Rational);

impl SeedEnergy {
    pub fn value(&self, omega: &Rational) -> Rational {
        &self.0 * omega
    }
}

/// `z^a e^{s z/2} P(z)` with rational `a`, `s = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPoly {
    pub zpower: Rational,
    pub expsign: i8,
    pub poly: RatPoly,
}

impl QuasiPoly {
    pub fn new(zpower: Rational, expsign: i8, poly: RatPoly) -> Self {
        assert!(expsign == 1 || expsign == -1, "exponent sign must be ±1");
        Self {
            zpower,
            expsign,
            poly,
        }
    }

    /// `d/dz [z^a e^{sz/2} P] = z^{a-1} e^{sz/2} (a P + (s/2) z P + z P')`.
    pub fn diff(&self) -> QuasiPoly {
        let half_s = rat(self.expsign as i64, 2);
        let poly = &(&self.poly.scale(&self.zpower) + &self.poly.mul_zpow(1).scale(&half_s))
            + &self.poly.derivative().mul_zpow(1);
        QuasiPoly {
            zpower: &self.zpower - Rational::one(),
            expsign: self.expsign,
            poly,
        }
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        let a = self.zpower.to_f64();
        z.powf(a) * (0.5 * self.expsign as f64 * z).exp() * self.poly.to_f64().eval(&z)
    }
}

/// Seed function and its energy (in units of `omega`) for seed parameter `alpha_prime`.
///
/// Type I: `z^{(a'+1/2)/2} e^{z/2} L_m^{(a')}(-z)`, energy `-(a'+2m+1)`.
/// Type II: `z^{-(a'-1/2)/2} e^{-z/2} L_m^{(-a')}(z)`, energy `-(a'-2m-1)`.
pub fn make_seed(spec: SeedSpec, alpha_prime: &Rational) -> (QuasiPoly, SeedEnergy) {
    let half = rat(1, 2);
    let two_m_plus_one = Rational::from_i64(2 * spec.m as i64 + 1);
    match spec.kind {
        SeedKind::TypeI => (
            QuasiPoly::new(
                (alpha_prime + &half) / Rational::from_i64(2),
                1,
                laguerre_negated_arg(spec.m, alpha_prime),
            ),
            SeedEnergy(-(alpha_prime + two_m_plus_one)),
        ),
        SeedKind::TypeII => (
            QuasiPoly::new(
                -(alpha_prime - &half) / Rational::from_i64(2),
                -1,
                laguerre(spec.m, &-alpha_prime),
            ),
            SeedEnergy(-(alpha_prime - two_m_plus_one)),
        ),
    }
}

/// Boundary behaviour of a seed at `0+` and `+inf`, up to overall sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EndpointClass {
    /// vanishes at the origin, diverges at infinity
    I,
    /// diverges at the origin, vanishes at infinity
    II,
    /// diverges at both ends
    III,
}

/// Classifies a seed by the sign of its z-exponent and exponential factor.
///
/// A positive exponent paired with decay at infinity is a normalizable
/// eigenfunction, not a seed, and is reported as unclassifiable.
pub fn endpoint_class(q: &QuasiPoly) -> Result<EndpointClass> {
    match (q.zpower.signum_i8(), q.expsign) {
        (1, 1) => Ok(EndpointClass::I),
        (-1, -1) => Ok(EndpointClass::II),
        (-1, 1) => Ok(EndpointClass::III),
        _ => Err(Error::Unclassifiable),
    }
}

/// Value at zero of `L_n^{(a)}`: `(a+1)_n / n!`.
pub fn laguerre_at_zero(n: u32, a: &Rational) -> Rational {
    crate::pochhammer(&(a + Rational::one()), n)
        / Rational::from_integer(crate::exactmath::factorial(n))
}
