//! Finite-difference spectrum of `-d^2/dx^2 + V(x)` on a Dirichlet box.

use serde::{Deserialize, Serialize};

use super::potential::ExtendedPotential;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Uniform interior grid of a Dirichlet box `[x_min, x_max]`; the
/// wavefunction vanishes at both ends, which are not part of `values`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
    pub values: Vec<f64>,
}

/// Left wall of automatically built boxes.
pub const DEFAULT_X_MIN: f64 = 1e-6;
/// Relative change of the lowest level tolerated under step halving.
pub const GRID_TOLERANCE: f64 = 1e-3;

impl NumericGrid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min > 0.0 && x_max > x_min && x_max.is_finite()) || n_points < 3 {
            return Err(Error::SpecInvalid(format!(
                "grid needs 0 < x_min < x_max and at least 3 points, got [{x_min}, {x_max}] with {n_points}"
            )));
        }
        let h = (x_max - x_min) / (n_points + 1) as f64;
        let values = (1..=n_points).map(|i| x_min + i as f64 * h).collect();
        Ok(Self {
            x_min,
            x_max,
            n_points,
            values,
        })
    }

    /// Box wide enough for the lowest `n_levels` states of `potential`, with
    /// step about `0.01 / sqrt(w)`.
    pub fn for_potential(potential: &ExtendedPotential, n_levels: usize) -> Self {
        let omega = potential.base.omega().to_f64();
        let top = potential
            .expected_level(n_levels.saturating_sub(1) as u32)
            .to_f64();
        let x_max = 2.0 * (top.max(0.0) + 40.0 * omega).sqrt() / omega.sqrt();
        let h = 0.01 / omega.sqrt();
        let n_points = ((x_max - DEFAULT_X_MIN) / h).ceil() as usize;
        Self::new(DEFAULT_X_MIN, x_max, n_points.max(3)).expect("valid by construction")
    }

    pub fn step(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points + 1) as f64
    }

    /// Same box with the step halved.
    pub fn refined(&self) -> Self {
        Self::new(self.x_min, self.x_max, 2 * self.n_points + 1).expect("refining a valid grid")
    }
}

/// Symmetric tridiagonal matrix with constant off-diagonal.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn schrodinger(potential: &ExtendedPotential, grid: &NumericGrid) -> Self {
        let h = grid.step();
        let inv = 1.0 / (h * h);
        Self {
            diag: grid
                .values
                .iter()
                .map(|&x| 2.0 * inv + potential.eval(x))
                .collect(),
            off: -inv,
        }
    }

    /// Number of eigenvalues strictly below `lambda` (Sylvester inertia of
    /// the `LDL^T` factorization of `T - lambda`).
    fn count_below(&self, lambda: f64) -> usize {
        let b2 = self.off * self.off;
        let mut d = 1.0;
        let mut count = 0;
        for (i, &a) in self.diag.iter().enumerate() {
            d = if i == 0 {
                a - lambda
            } else {
                a - lambda - b2 / d
            };
            if d == 0.0 {
                d = -f64::EPSILON * (a.abs() + lambda.abs()).max(1.0);
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn lower_bound(&self) -> f64 {
        self.diag.iter().fold(f64::INFINITY, |m, &a| m.min(a)) - 2.0 * self.off.abs()
    }

    /// Lowest `n` eigenvalues by bisection on the inertia count.
    fn lowest(&self, n: usize) -> Vec<f64> {
        let lo0 = self.lower_bound();
        let mut hi0 = lo0.abs().max(1.0);
        while self.count_below(hi0) < n {
            hi0 = 2.0 * hi0 + 1.0;
        }
        (0..n)
            .map(|idx| {
                let (mut lo, mut hi) = (lo0, hi0);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    if self.count_below(mid) > idx {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                0.5 * (lo + hi)
            })
            .collect()
    }
}

/// Lowest `n_levels` eigenvalues on `grid`, repeated on the step-halved grid
/// as a convergence check. The refined values are returned.
pub fn numeric_spectrum(
    potential: &ExtendedPotential,
    n_levels: usize,
    grid: &NumericGrid,
) -> Result<Vec<f64>> {
    if potential.irregular {
        return Err(Error::Inapplicable(
            "potential has poles on the positive axis".into(),
        ));
    }
    if n_levels == 0 {
        return Ok(Vec::new());
    }
    if n_levels > grid.n_points {
        return Err(Error::GridTooCoarse(format!(
            "{n_levels} levels requested from {} points",
            grid.n_points
        )));
    }
    let coarse = Tridiagonal::schrodinger(potential, grid).lowest(n_levels);
    let fine = Tridiagonal::schrodinger(potential, &grid.refined()).lowest(n_levels);
    let change = (fine[0] - coarse[0]).abs() / fine[0].abs().max(f64::MIN_POSITIVE);
    if change > GRID_TOLERANCE {
        return Err(Error::GridTooCoarse(format!(
            "lowest level moved by {change:.3e} relative under step halving"
        )));
    }
    Ok(fine)
}
