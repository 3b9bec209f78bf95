use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::nullspace;
use crate::scalar::Scalar;
use crate::wronskian::{ExtensionSpec, GReport};
use crate::{RatPoly, Rational};

/// Exceptional Laguerre polynomials `y_{mu+nu}`, `nu = 0..=nu_max`, monic.
#[derive(Clone, Debug, PartialEq)]
pub struct EopFamily {
    pub alpha: Rational,
    pub g: RatPoly,
    pub mu: usize,
    pub polys: Vec<RatPoly>,
}

/// The three polynomial coefficient functions of the denominator-cleared
/// equation `A y'' + B y' + (C + nu g) y = 0`:
/// `A = z g`, `B = (alpha+1-z) g - 2 z g'`, `C = (z - alpha) g' + z g''`.
struct EopOperator {
    a: RatPoly,
    b: RatPoly,
    c: RatPoly,
    g: RatPoly,
}

impl EopOperator {
    fn new(g: &RatPoly, alpha: &Rational) -> Self {
        let z = RatPoly::z();
        let g1 = g.derivative();
        let g2 = g1.derivative();
        let two = Rational::from_i64(2);
        let lin = RatPoly::from_coeffs(vec![alpha + Rational::one(), -Rational::one()]);
        let shifted = RatPoly::from_coeffs(vec![-alpha.clone(), Rational::one()]);
        Self {
            a: &z * g,
            b: &(&lin * g) - &(&z * &g1).scale(&two),
            c: &(&shifted * &g1) + &(&z * &g2),
            g: g.clone(),
        }
    }

    fn apply(&self, y: &RatPoly, nu: u32) -> RatPoly {
        let y1 = y.derivative();
        let y2 = y1.derivative();
        let nu = Rational::from_i64(nu as i64);
        &(&(&self.a * &y2) + &(&self.b * &y1)) + &(&(&self.c + &self.g.scale(&nu)) * y)
    }

    /// Polynomial solutions of degree at most `degree`.
    fn solutions(&self, nu: u32, degree: usize) -> Vec<RatPoly> {
        let images: Vec<RatPoly> = (0..=degree)
            .map(|j| self.apply(&RatPoly::monomial(Rational::one(), j), nu))
            .collect();
        let rows = images
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .map_or(0, |d| d + 1);
        let matrix: Vec<Vec<Rational>> = (0..rows)
            .map(|r| images.iter().map(|p| p.coeff(r)).collect())
            .collect();
        nullspace(&matrix, degree + 1)
            .into_iter()
            .map(RatPoly::from_coeffs)
            .collect()
    }
}

/// Residual of the exceptional-polynomial equation with eigenvalue `-nu`,
/// multiplied through by `g`. Zero exactly when `y` solves it.
pub fn eop_residual(g: &RatPoly, alpha: &Rational, nu: u32, y: &RatPoly) -> RatPoly {
    EopOperator::new(g, alpha).apply(y, nu)
}

/// Basis of the polynomial solutions of degree `<= degree` for eigenvalue `-nu`.
pub fn eop_solution_space(g: &RatPoly, alpha: &Rational, nu: u32, degree: usize) -> Vec<RatPoly> {
    EopOperator::new(g, alpha).solutions(nu, degree)
}

/// Solves for `y_{mu+nu}` as the null space of the cleared equation over
/// polynomials of degree `<= mu + nu`, requiring it to be one-dimensional.
pub fn solve_eop(spec: &ExtensionSpec, report: &GReport, nu_max: u32) -> Result<EopFamily> {
    let mu = report.g.degree().ok_or(Error::ZeroPolynomial)?;
    let op = EopOperator::new(&report.g, spec.alpha());
    let polys = (0..=nu_max)
        .map(|nu| {
            let mut basis = op.solutions(nu, mu + nu as usize);
            if basis.len() != 1 {
                return Err(Error::NullSpaceDimension(basis.len()));
            }
            Ok(basis.pop().unwrap().monic())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EopFamily {
        alpha: spec.alpha().clone(),
        g: report.g.clone(),
        mu,
        polys,
    })
}
