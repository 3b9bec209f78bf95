use crate::laguerre::IsotonicParams;
use crate::scalar::Scalar;
use crate::wronskian::{ExtensionSpec, GReport};
use crate::{FloatPoly, RatPoly, Rational};

/// `V2(x) = V_l(x) + V_rat(z) + C` with `z = w x^2 / 2`, where
/// `V_rat = -2w [g'/g + 2z (g''/g - (g'/g)^2)]` and `C = (k - 2q) w`.
#[derive(Clone, Debug)]
pub struct ExtendedPotential {
    pub base: IsotonicParams,
    pub g: RatPoly,
    pub shift: Rational,
    /// `V_rat = rat_numerator / rat_denominator` as rational functions of `z`.
    pub rat_numerator: RatPoly,
    pub rat_denominator: RatPoly,
    /// `g` was not certified nodeless on the positive axis; the potential has
    /// poles there.
    pub irregular: bool,
    g_f: [FloatPoly; 3],
    omega_f: f64,
}

pub fn build_potential(spec: &ExtensionSpec, report: &GReport) -> ExtendedPotential {
    let g = report.g.clone();
    let g1 = g.derivative();
    let g2 = g1.derivative();
    let omega = spec.omega().clone();
    let z = RatPoly::z();
    // g' g + 2z (g'' g - g'^2)
    let inner = &(&g1 * &g) + &(&z * &(&(&g2 * &g) - &(&g1 * &g1))).scale(&Rational::from_i64(2));
    let rat_numerator = inner.scale(&(-Rational::from_i64(2) * &omega));
    let rat_denominator = &g * &g;
    let shift = Rational::from_i64(spec.k() as i64 - 2 * spec.q() as i64) * &omega;
    ExtendedPotential {
        base: spec.params(),
        g_f: [g.to_f64(), g1.to_f64(), g2.to_f64()],
        g,
        shift,
        rat_numerator,
        rat_denominator,
        irregular: report.regular != Some(true),
        omega_f: omega.to_f64(),
    }
}

impl ExtendedPotential {
    /// Exact `V_rat(z)`.
    pub fn rational_part(&self, z: &Rational) -> Rational {
        self.rat_numerator.eval(z) / self.rat_denominator.eval(z)
    }

    /// `V_rat(z)` in floating point, from `g'/g` and `g''/g`.
    pub fn rational_part_f64(&self, z: f64) -> f64 {
        let [g, g1, g2] = &self.g_f;
        let gz = g.eval(&z);
        let r1 = g1.eval(&z) / gz;
        let r2 = g2.eval(&z) / gz;
        -2.0 * self.omega_f * (r1 + 2.0 * z * (r2 - r1 * r1))
    }

    pub fn z_of_x(&self, x: f64) -> f64 {
        0.5 * self.omega_f * x * x
    }

    /// `V2(x)`.
    pub fn eval(&self, x: f64) -> f64 {
        self.base.potential(x) + self.rational_part_f64(self.z_of_x(x)) + self.shift.to_f64()
    }

    /// Expected level `w (2 nu + alpha + 1) + C`.
    pub fn expected_level(&self, nu: u32) -> Rational {
        crate::isotonic_spectrum(&self.base, nu) + &self.shift
    }
}
