//! Reference computations that share no code path with the library beyond
//! polynomial arithmetic: Laguerre polynomials from the explicit sum,
//! determinants by cofactor expansion, seeds differentiated by hand, and
//! root counting by Descartes bisection.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use xlag::{rat, ExtensionSpec, RatPoly, Rational};

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `(a)_n` by direct product.
pub fn rising(a: &Rational, n: i64) -> Rational {
    (0..n).fold(Rational::one(), |acc, j| acc * (a + int(j)))
}

fn factorial(n: i64) -> Rational {
    (1..=n).fold(Rational::one(), |acc, j| acc * int(j))
}

/// `L_n^{(a)}(z) = sum_j (-1)^j (a+j+1)_{n-j} / ((n-j)! j!) z^j`; zero for `n < 0`.
pub fn laguerre_sum(n: i64, a: &Rational) -> RatPoly {
    if n < 0 {
        return RatPoly::zero();
    }
    let coeffs = (0..=n)
        .map(|j| {
            let c = rising(&(a + int(j + 1)), n - j) / (factorial(n - j) * factorial(j));
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    RatPoly::from_coeffs(coeffs)
}

/// `p(-z)`.
pub fn reflect(p: &RatPoly) -> RatPoly {
    RatPoly::from_coeffs(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
            .collect(),
    )
}

pub fn z_pow(n: usize) -> RatPoly {
    RatPoly::monomial(Rational::one(), n)
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<RatPoly>]) -> RatPoly {
    let n = m.len();
    if n == 0 {
        return RatPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = RatPoly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<RatPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &det_cofactor(&minor);
        acc = if col % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// The `k x k` matrix whose determinant is `z^{(k-q)(k-q-1)} g`, entry by
/// entry from its four-block definition (1-based `i`, `j`).
pub fn gamma_reference(ap: &Rational, m_i: &[u32], m_ii: &[u32]) -> Vec<Vec<RatPoly>> {
    let q = m_i.len() as i64;
    let m: Vec<i64> = m_i.iter().chain(m_ii).map(|&v| v as i64).collect();
    let k = m.len() as i64;
    let mut rows = Vec::new();
    for i in 1..=k {
        let mut row = Vec::new();
        for j in 1..=k {
            let mj = m[(j - 1) as usize];
            let a_i = ap + int(i - 1);
            let neg_a_i = -ap - int(i - 1);
            let entry = if j <= q {
                let n = if i <= q + 1 { mj - i + 1 } else { mj - q };
                reflect(&laguerre_sum(n, &a_i))
            } else {
                let (coef, n) = if i <= q + 1 {
                    (rising(&int(mj + 1), i - 1), mj + i - 1)
                } else {
                    (
                        rising(&int(mj + 1), q) * rising(&(int(mj + q + 2 - i) - ap), i - q - 1),
                        mj + q,
                    )
                };
                (&z_pow((k - i) as usize) * &laguerre_sum(n, &neg_a_i)).scale(&coef)
            };
            row.push(entry);
        }
        rows.push(row);
    }
    rows
}

/// `g` through the reference matrix and cofactor determinant.
pub fn g_reference(spec: &ExtensionSpec) -> RatPoly {
    let det = det_cofactor(&gamma_reference(
        &spec.alpha_prime(),
        spec.m_i(),
        spec.m_ii(),
    ));
    let r = spec.k() - spec.q();
    divide_z_power(&det, r * r.saturating_sub(1)).expect("det divisible by z^{(k-q)(k-q-1)}")
}

/// `p / z^n` when exact.
pub fn divide_z_power(p: &RatPoly, n: usize) -> Option<RatPoly> {
    if p.coeffs().iter().take(n).any(|c| !c.is_zero()) {
        return None;
    }
    Some(RatPoly::from_coeffs(
        p.coeffs().iter().skip(n).cloned().collect(),
    ))
}

pub struct ClosedForms {
    pub mu: i64,
    pub sigma: i64,
    pub lead: Rational,
    pub g0: Rational,
}

fn vandermonde_product(v: &[u32]) -> Rational {
    let mut acc = Rational::one();
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            acc *= int(v[b] as i64 - v[a] as i64);
        }
    }
    acc
}

pub fn closed_forms(spec: &ExtensionSpec) -> ClosedForms {
    let (k, q) = (spec.k() as i64, spec.q() as i64);
    let ap = spec.alpha_prime();
    let m: Vec<i64> = spec
        .m_i()
        .iter()
        .chain(spec.m_ii())
        .map(|&v| v as i64)
        .collect();
    let mu = m.iter().sum::<i64>() - q * (q - 1) / 2 - (k - q) * (k - q - 1) / 2 + q * (k - q);
    let sigma = spec.m_ii().iter().map(|&v| v as i64).sum::<i64>() + q * (k - q);
    let mut lead = vandermonde_product(spec.m_i()) * vandermonde_product(spec.m_ii());
    for &mi in &m {
        lead /= factorial(mi);
    }
    if sigma % 2 != 0 {
        lead = -lead;
    }
    let mut g0 = lead.clone();
    for (idx, &mi) in m.iter().enumerate() {
        let i = idx as i64 + 1;
        g0 *= if i <= q {
            rising(&(&ap + int(i)), mi - i + 1)
        } else {
            rising(&(&ap - int(mi)), mi + 2 * q + 1 - i)
        };
    }
    ClosedForms {
        mu,
        sigma,
        lead,
        g0,
    }
}

/// Polynomial part and exponents of a seed written as `z^a e^{s z/2} P(z)`.
#[derive(Clone)]
pub struct Seed {
    pub a: Rational,
    pub s: i64,
    pub p: RatPoly,
}

pub fn seeds_reference(spec: &ExtensionSpec) -> Vec<Seed> {
    let ap = spec.alpha_prime();
    let half = rat(1, 2);
    let mut out = Vec::new();
    for &m in spec.m_i() {
        out.push(Seed {
            a: (&ap + &half) * &half,
            s: 1,
            p: reflect(&laguerre_sum(m as i64, &ap)),
        });
    }
    for &m in spec.m_ii() {
        out.push(Seed {
            a: -(&ap - &half) * &half,
            s: -1,
            p: laguerre_sum(m as i64, &-ap.clone()),
        });
    }
    out
}

/// `d/dz [z^a e^{s z/2} P] = z^{a-1} e^{s z/2} (a P + z (P' + s P / 2))`; returns
/// the new polynomial part after the exponent of `z` is lowered by one.
pub fn differentiate(seed: &Seed) -> Seed {
    let zp = &z_pow(1) * &(&seed.p.derivative() + &seed.p.scale(&rat(seed.s, 2)));
    Seed {
        a: &seed.a - Rational::one(),
        s: seed.s,
        p: &seed.p.scale(&seed.a) + &zp,
    }
}

/// Polynomial part of the z-Wronskian of the seeds after removing the column
/// gauges, the row powers of `z`, and the residual `z^{q(q-1)/2 + (k-q)(k-q-1)/2}`.
pub fn wronskian_reference(spec: &ExtensionSpec) -> RatPoly {
    let seeds = seeds_reference(spec);
    let k = seeds.len();
    let mut cols: Vec<Vec<RatPoly>> = Vec::new();
    for s in &seeds {
        let mut cur = s.clone();
        let mut col = Vec::new();
        for _ in 0..k {
            col.push(cur.p.clone());
            cur = differentiate(&cur);
        }
        cols.push(col);
    }
    let rows: Vec<Vec<RatPoly>> = (0..k)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let (q, r) = (spec.q(), k - spec.q());
    let shift = q * q.saturating_sub(1) / 2 + r * r.saturating_sub(1) / 2;
    divide_z_power(&det_cofactor(&rows), shift).expect("Wronskian carries the expected power of z")
}

fn sign_variations(p: &RatPoly) -> usize {
    let signs: Vec<bool> = p
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `p(z + 1)` by Horner's scheme on the coefficients.
fn taylor_shift_one(p: &RatPoly) -> RatPoly {
    let mut c = p.coeffs().to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let add = c[j + 1].clone();
            c[j] += add;
        }
    }
    RatPoly::from_coeffs(c)
}

/// `(z + 1)^n p(1 / (z + 1))`, which maps roots in `(0, 1)` to `(0, inf)`.
fn invert_and_shift(p: &RatPoly) -> RatPoly {
    let mut rev = p.coeffs().to_vec();
    rev.reverse();
    taylor_shift_one(&RatPoly::from_coeffs(rev))
}

/// Number of distinct roots in `(0, inf)` of a square-free polynomial with
/// `p(0) != 0`, by Descartes' rule and bisection of the half-line.
pub fn positive_roots_descartes(p: &RatPoly) -> usize {
    fn rec(p: &RatPoly, depth: usize) -> usize {
        assert!(depth < 200, "Descartes bisection did not terminate");
        match sign_variations(p) {
            0 => 0,
            1 => 1,
            _ => {
                let at_one = usize::from(p.eval(&Rational::one()).is_zero());
                let right = taylor_shift_one(p);
                let right = divide_z_power(&right, at_one).expect("root at one divides out");
                let left =
                    divide_z_power(&invert_and_shift(p), at_one).expect("root at one divides out");
                rec(&right, depth + 1) + rec(&left, depth + 1) + at_one
            }
        }
    }
    assert!(!p.constant_term().is_zero());
    rec(p, 0)
}

/// Square-free part via the library gcd.
pub fn square_free(p: &RatPoly) -> RatPoly {
    let d = p.gcd(&p.derivative());
    p.div_exact(&d).expect("gcd divides")
}
