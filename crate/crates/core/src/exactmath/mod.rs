//! Exact arithmetic substrate: rationals, dense polynomials, rising factorials,
//! Vandermonde products and exact linear algebra.

mod linalg;
mod poly;

pub use linalg::{det_bareiss, nullspace, IntegralDomain};
pub use poly::Poly;

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::Scalar;

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer<T: Scalar>(a: &T, n: u32) -> T {
    let mut acc = T::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * &term;
        term += &T::one();
    }
    acc
}

/// `n!` as an arbitrary-precision integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `prod_{i<j} (n_j - n_i)`; one for lists shorter than two.
pub fn vandermonde(ns: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for (i, a) in ns.iter().enumerate() {
        for b in &ns[i + 1..] {
            acc *= b - a;
        }
    }
    acc
}
