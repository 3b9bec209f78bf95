use super::eop::EopFamily;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::wronskian::ExtensionSpec;
use crate::FloatPoly;

/// Unnormalized bound state `eta_l(z) y_{mu+nu}(z) / g(z)` with
/// `eta_l = z^{(alpha+1/2)/2} e^{-z/2}` and `z = w x^2 / 2`.
#[derive(Clone, Debug)]
pub struct Wavefunction {
    pub nu: u32,
    omega: f64,
    gauge_power: f64,
    y: FloatPoly,
    g: FloatPoly,
}

impl Wavefunction {
    pub fn eval(&self, x: f64) -> f64 {
        let z = 0.5 * self.omega * x * x;
        if z == 0.0 {
            return 0.0;
        }
        (self.gauge_power * z.ln() - 0.5 * z).exp() * self.y.eval(&z) / self.g.eval(&z)
    }

    /// Sign changes over the given abscissae.
    pub fn node_count(&self, xs: &[f64]) -> usize {
        let mut last = 0.0f64;
        let mut nodes = 0;
        for &x in xs {
            let v = self.eval(x);
            if v != 0.0 {
                if last != 0.0 && v.signum() != last.signum() {
                    nodes += 1;
                }
                last = v;
            }
        }
        nodes
    }
}

pub fn wavefunction(spec: &ExtensionSpec, family: &EopFamily, nu: u32) -> Result<Wavefunction> {
    let y = family.polys.get(nu as usize).ok_or_else(|| {
        Error::Inapplicable(format!(
            "family holds levels up to {}",
            family.polys.len().saturating_sub(1)
        ))
    })?;
    let alpha = family.alpha.to_f64();
    Ok(Wavefunction {
        nu,
        omega: spec.omega().to_f64(),
        gauge_power: 0.5 * (alpha + 0.5),
        y: y.to_f64(),
        g: family.g.to_f64(),
    })
}
