//! Exact real-root counting with Sturm sequences, and the regularity
//! certificate for the denominator polynomial `g`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::wronskian::GReport;
use crate::{Poly, RatPoly, Rational};

/// Upper end of a root-counting interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Upper<T> {
    Finite(T),
    Infinity,
}

/// Sturm chain of the square-free part of `p`:
/// `p_0 = p / gcd(p, p')`, `p_1 = p_0'`, `p_{i+1} = -rem(p_{i-1}, p_i)`.
pub fn sturm_sequence<T: Scalar>(p: &Poly<T>) -> Result<Vec<Poly<T>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let common = p.gcd(&p.derivative());
    let p0 = if common.degree() == Some(0) {
        p.clone()
    } else {
        p.div_exact(&common).expect("gcd divides its argument")
    };
    let p1 = p0.derivative();
    let mut chain = vec![p0];
    if p1.is_zero() {
        return Ok(chain);
    }
    chain.push(p1);
    loop {
        let n = chain.len();
        let r = -chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    Ok(chain)
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at<T: Scalar>(chain: &[Poly<T>], x: &T) -> usize {
    variations(chain.iter().map(|p| p.eval(x).signum_i8()))
}

fn variations_at_infinity<T: Scalar>(chain: &[Poly<T>]) -> usize {
    variations(
        chain
            .iter()
            .map(|p| p.leading().map_or(0, |c| c.signum_i8())),
    )
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn count_roots_open_interval<T: Scalar>(p: &Poly<T>, lo: &T, hi: &Upper<T>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.eval(lo).is_zero() {
        return Err(Error::BoundaryRoot);
    }
    let chain = sturm_sequence(p)?;
    count_with_chain(&chain, p, lo, hi)
}

fn count_with_chain<T: Scalar>(
    chain: &[Poly<T>],
    p: &Poly<T>,
    lo: &T,
    hi: &Upper<T>,
) -> Result<usize> {
    let v_lo = variations_at(chain, lo);
    match hi {
        Upper::Infinity => Ok(v_lo - variations_at_infinity(chain)),
        Upper::Finite(h) => {
            if h <= lo {
                return Ok(0);
            }
            // V(lo) - V(hi) counts roots in (lo, hi]
            let n = v_lo - variations_at(chain, h);
            Ok(if p.eval(h).is_zero() { n - 1 } else { n })
        }
    }
}

/// Certified sign and zero structure of `g` on `(0, +inf)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityCertificate {
    /// distinct roots in `(0, +inf)`
    pub root_count_positive_axis: usize,
    pub sign_at_zero: i8,
    pub sign_at_infinity: i8,
    pub regular: bool,
    pub admissible: bool,
    pub sturm_sequence_length: usize,
    /// `g(0+)` and `g(+inf)` carry the same sign.
    pub endpoint_signs_agree: bool,
    /// Degree of `gcd(g, g')`; nonzero means repeated roots somewhere.
    pub repeated_root_degree: usize,
}

/// Certificate for a bare polynomial. A root at the origin is divided out
/// before counting, and makes the polynomial irregular.
pub fn certify_poly(g: &RatPoly, admissible: bool) -> Result<RegularityCertificate> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sign_at_zero = g.constant_term().signum_i8();
    let sign_at_infinity = g.leading().map_or(0, |c| c.signum_i8());
    let reduced = g.div_exact_zpow(g.z_valuation())?;
    let chain = sturm_sequence(&reduced)?;
    let roots = count_with_chain(&chain, &reduced, &Rational::from_i64(0), &Upper::Infinity)?;
    let repeated = g.gcd(&g.derivative()).degree().unwrap_or(0);
    Ok(RegularityCertificate {
        root_count_positive_axis: roots,
        sign_at_zero,
        sign_at_infinity,
        regular: roots == 0 && sign_at_zero != 0,
        admissible,
        sturm_sequence_length: chain.len(),
        endpoint_signs_agree: sign_at_zero == sign_at_infinity,
        repeated_root_degree: repeated,
    })
}

/// Certificate for a computed `g`.
pub fn certify(report: &GReport) -> Result<RegularityCertificate> {
    certify_poly(&report.g, report.admissible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn rp(c: &[(i64, i64)]) -> RatPoly {
        RatPoly::from_coeffs(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn zero() -> Rational {
        rat(0, 1)
    }

    #[test]
    fn chains() {
        let lin = rp(&[(5, 2), (1, 1)]);
        assert_eq!(
            sturm_sequence(&lin).unwrap(),
            vec![lin.clone(), RatPoly::one()]
        );
        let sq = RatPoly::from_i64s(&[-1, 0, 1]);
        assert_eq!(
            sturm_sequence(&sq).unwrap(),
            vec![sq.clone(), RatPoly::from_i64s(&[0, 2]), RatPoly::one()]
        );
        let double = RatPoly::from_i64s(&[1, -2, 1]);
        assert_eq!(
            sturm_sequence(&double).unwrap()[0],
            RatPoly::from_i64s(&[-1, 1])
        );
        assert_eq!(sturm_sequence(&RatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn counts() {
        let inf = Upper::Infinity;
        assert_eq!(
            count_roots_open_interval(&rp(&[(5, 2), (1, 1)]), &zero(), &inf),
            Ok(0)
        );
        assert_eq!(
            count_roots_open_interval(&RatPoly::from_i64s(&[-1, 1]), &zero(), &inf),
            Ok(1)
        );
        let quad = rp(&[(-1, 8), (-1, 2), (1, 2)]);
        assert_eq!(count_roots_open_interval(&quad, &zero(), &inf), Ok(1));
        assert_eq!(count_roots_open_interval(&quad, &rat(-10, 1), &inf), Ok(2));
        assert_eq!(
            count_roots_open_interval(&RatPoly::from_i64s(&[0, 1]), &zero(), &inf),
            Err(Error::BoundaryRoot)
        );
    }

    #[test]
    fn finite_upper_end_is_open() {
        // roots at 1, 2, 3
        let p = &(&RatPoly::from_i64s(&[-1, 1]) * &RatPoly::from_i64s(&[-2, 1]))
            * &RatPoly::from_i64s(&[-3, 1]);
        assert_eq!(
            count_roots_open_interval(&p, &zero(), &Upper::Finite(rat(3, 1))),
            Ok(2)
        );
        assert_eq!(
            count_roots_open_interval(&p, &zero(), &Upper::Finite(rat(7, 2))),
            Ok(3)
        );
        assert_eq!(
            count_roots_open_interval(&p, &rat(3, 2), &Upper::Finite(rat(5, 2))),
            Ok(1)
        );
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p = &RatPoly::from_i64s(&[-1, 1]).pow(3) * &RatPoly::from_i64s(&[4, 1]);
        assert_eq!(
            count_roots_open_interval(&p, &zero(), &Upper::Infinity),
            Ok(1)
        );
        let cert = certify_poly(&p, false).unwrap();
        assert_eq!(cert.repeated_root_degree, 2);
        assert!(!cert.regular);
    }

    #[test]
    fn certificates() {
        let g = RatPoly::from_coeffs(vec![rat(105, 8), rat(27, 2), rat(21, 2), rat(1, 1)]);
        let c = certify_poly(&g, true).unwrap();
        assert!(c.regular);
        assert_eq!((c.sign_at_zero, c.sign_at_infinity), (1, 1));

        let one = certify_poly(&RatPoly::one(), true).unwrap();
        assert!(one.regular);
        assert_eq!(one.sturm_sequence_length, 1);

        // z (z - 1): the origin root is divided out, the other is counted
        let c = certify_poly(&RatPoly::from_i64s(&[0, -1, 1]), false).unwrap();
        assert_eq!(c.sign_at_zero, 0);
        assert_eq!(c.root_count_positive_axis, 1);
        assert!(!c.regular);
    }

    #[test]
    fn float_instantiation_counts_well_separated_roots() {
        let p = Poly::<f64>::from_coeffs(vec![-2.0, 0.0, 1.0]);
        assert_eq!(count_roots_open_interval(&p, &0.0, &Upper::Infinity), Ok(1));
    }
}
