//! Gauss–Legendre rules and the weighted inner product of the exceptional
//! family on the half-line.

use std::f64::consts::PI;

use super::eop::EopFamily;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::FloatPoly;

/// `n`-point Gauss–Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, then Newton on P_n
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    (p1, n * (x * p1 - p0) / (x * x - 1.0))
}

/// Composite Gauss–Legendre on `[a, b]` with `panels` equal panels.
#[derive(Clone, Debug)]
pub struct CompositeRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl CompositeRule {
    pub fn new(order: usize) -> Self {
        let (nodes, weights) = gauss_legendre(order);
        Self { nodes, weights }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
        let h = (b - a) / panels as f64;
        (0..panels)
            .map(|p| {
                let lo = a + p as f64 * h;
                let mid = lo + 0.5 * h;
                self.nodes
                    .iter()
                    .zip(&self.weights)
                    .map(|(x, w)| w * f(mid + 0.5 * h * x))
                    .sum::<f64>()
                    * 0.5
                    * h
            })
            .sum()
    }
}

/// Node count of each panel.
pub const GAUSS_ORDER: usize = 20;
const INITIAL_PANELS: usize = 10;
const MAX_PANELS: usize = 2560;
/// Agreement required between successive refinements, relative to the norm scale.
pub const CONVERGENCE_TOLERANCE: f64 = 1e-10;

/// `∫_0^∞ y_i y_j z^alpha e^{-z} / g^2 dz` together with the norms, after
/// substituting `z = t^2` (which removes the half-integer branch point of
/// `z^alpha`) and truncating where the Gaussian factor is negligible.
/// Panels are doubled until two successive estimates agree.
fn weighted_products(family: &EopFamily, i: usize, j: usize) -> Result<(f64, f64, f64)> {
    let alpha = family.alpha.to_f64();
    let g = family.g.to_f64();
    let yi: FloatPoly = family.polys[i].to_f64();
    let yj: FloatPoly = family.polys[j].to_f64();
    let excess =
        (yi.degree().unwrap_or(0) + yj.degree().unwrap_or(0)) as f64 - 2.0 * family.mu as f64;
    let z_max = 2.0 * (alpha + excess.max(0.0)) + 80.0;
    let t_max = z_max.sqrt();

    let weight = |t: f64| {
        let z = t * t;
        let gz = g.eval(&z);
        2.0 * t * (alpha * z.ln() - z).exp() / (gz * gz)
    };
    let estimate = |panels: usize, rule: &CompositeRule| {
        let ij = rule.integrate(
            |t| weight(t) * yi.eval(&(t * t)) * yj.eval(&(t * t)),
            0.0,
            t_max,
            panels,
        );
        let ii = rule.integrate(
            |t| weight(t) * yi.eval(&(t * t)).powi(2),
            0.0,
            t_max,
            panels,
        );
        let jj = rule.integrate(
            |t| weight(t) * yj.eval(&(t * t)).powi(2),
            0.0,
            t_max,
            panels,
        );
        (ij, ii, jj)
    };

    let rule = CompositeRule::new(GAUSS_ORDER);
    let mut panels = INITIAL_PANELS;
    let mut prev = estimate(panels, &rule);
    while panels < MAX_PANELS {
        panels *= 2;
        let cur = estimate(panels, &rule);
        let scale = (cur.1 * cur.2).sqrt().max(cur.0.abs());
        let converged = [(cur.0, prev.0), (cur.1, prev.1), (cur.2, prev.2)]
            .iter()
            .all(|(a, b)| (a - b).abs() <= CONVERGENCE_TOLERANCE * scale);
        if converged && scale.is_finite() && scale > 0.0 {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNonconvergence(format!(
        "inner product ({i}, {j}) unresolved with {} nodes",
        MAX_PANELS * GAUSS_ORDER
    )))
}

/// `|<y_i, y_j>| / sqrt(<y_i, y_i> <y_j, y_j>)` under the density
/// `z^alpha e^{-z} / g^2`.
pub fn orthogonality_check(family: &EopFamily, i: usize, j: usize) -> Result<f64> {
    if i >= family.polys.len() || j >= family.polys.len() {
        return Err(Error::Inapplicable(format!(
            "family holds {} polynomials, asked for ({i}, {j})",
            family.polys.len()
        )));
    }
    let (ij, ii, jj) = weighted_products(family, i, j)?;
    if ii <= 0.0 || jj <= 0.0 {
        return Err(Error::QuadratureNonconvergence("nonpositive norm".into()));
    }
    if i == j {
        return Ok(1.0);
    }
    Ok(ij.abs() / (ii * jj).sqrt())
}

/// Largest normalized off-diagonal inner product over all pairs in the family.
pub fn max_off_diagonal(family: &EopFamily) -> Result<f64> {
    let n = family.polys.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            worst = worst.max(orthogonality_check(family, i, j)?);
        }
    }
    Ok(worst)
}
