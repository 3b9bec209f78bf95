use num_rational::BigRational;
use num_traits::Zero;

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Commutative ring without zero divisors, with a test for exact division.
pub trait IntegralDomain: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d` when `d` divides `self`, `None` otherwise.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl<T: Scalar> IntegralDomain for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        Poly::div_exact(self, d)
    }
}

impl IntegralDomain for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        (!Zero::is_zero(d)).then(|| self / d)
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
///
/// Every division performed is exact in an integral domain; a remainder is
/// reported as [`Error::InexactDivision`].
pub fn det_bareiss<R: IntegralDomain>(mut m: Vec<Vec<R>>) -> Result<R> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::SpecInvalid(
            "determinant of a non-square matrix".into(),
        ));
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).ok_or(Error::InexactDivision)?;
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Basis of the right null space of `rows` (each row has `ncols` entries),
/// computed by reduction to row echelon form over the field `T`.
pub fn nullspace<T: Scalar>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut a: Vec<Vec<T>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = T::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *x -= &(f.clone() * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![T::zero(); ncols];
            v[fc] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][fc].clone();
            }
            v
        })
        .collect()
}
