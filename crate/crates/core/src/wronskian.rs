//! The denominator polynomial `g(z)` of a multi-step extension: the
//! structured determinant route, its closed-form degree / leading / constant
//! coefficient predictions, and two independent cross-checks (the direct
//! Wronskian of the seeds and the recurrence at the origin).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{det_bareiss, factorial};
use crate::laguerre::{
    laguerre, laguerre_negated_arg, make_seed, IsotonicParams, SeedKind, SeedSpec,
};
use crate::scalar::Scalar;
use crate::{pochhammer, rat, vandermonde, RatPoly, Rational};

/// A multi-step extension: final `alpha`, `omega`, type-I indices
/// `m_1 < ... < m_q` and type-II indices `m_{q+1} < ... < m_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    alpha: Rational,
    omega: Rational,
    m_i: Vec<u32>,
    m_ii: Vec<u32>,
}

impl ExtensionSpec {
    /// Validates and normalizes a spec. Indices are sorted within each type;
    /// repeated indices within a type and zero indices are rejected.
    /// An empty seed list is the identity extension.
    pub fn new(
        alpha: Rational,
        omega: Rational,
        mut m_i: Vec<u32>,
        mut m_ii: Vec<u32>,
    ) -> Result<Self> {
        m_i.sort_unstable();
        m_ii.sort_unstable();
        for (name, list) in [("type-I", &m_i), ("type-II", &m_ii)] {
            if list.first() == Some(&0) {
                return Err(Error::SpecInvalid(format!(
                    "{name} seed index 0 is not allowed"
                )));
            }
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::SpecInvalid(format!(
                    "repeated {name} seed index in {list:?}"
                )));
            }
        }
        if !omega.is_positive() {
            return Err(Error::SpecInvalid(format!(
                "omega = {omega} must be positive"
            )));
        }
        let half = rat(1, 2);
        if alpha < half {
            return Err(Error::SpecInvalid(format!(
                "alpha = {alpha} is below 1/2 (l < 0)"
            )));
        }
        let spec = Self {
            alpha,
            omega,
            m_i,
            m_ii,
        };
        if spec.alpha_prime() < half {
            return Err(Error::SpecInvalid(format!(
                "seed parameter alpha' = {} is below 1/2 (l' < 0)",
                spec.alpha_prime()
            )));
        }
        Ok(spec)
    }

    /// Spec given through the seed parameter `alpha' = alpha + k - 2q`.
    pub fn from_alpha_prime(
        alpha_prime: Rational,
        omega: Rational,
        m_i: Vec<u32>,
        m_ii: Vec<u32>,
    ) -> Result<Self> {
        let k = (m_i.len() + m_ii.len()) as i64;
        let q = m_i.len() as i64;
        Self::new(
            alpha_prime - Rational::from_i64(k - 2 * q),
            omega,
            m_i,
            m_ii,
        )
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn m_i(&self) -> &[u32] {
        &self.m_i
    }

    pub fn m_ii(&self) -> &[u32] {
        &self.m_ii
    }

    pub fn k(&self) -> usize {
        self.m_i.len() + self.m_ii.len()
    }

    pub fn q(&self) -> usize {
        self.m_i.len()
    }

    pub fn alpha_prime(&self) -> Rational {
        &self.alpha + Rational::from_i64(self.k() as i64 - 2 * self.q() as i64)
    }

    pub fn l_prime(&self) -> Rational {
        self.alpha_prime() - rat(1, 2)
    }

    /// All seed indices in column order `m_1..m_k`.
    pub fn indices(&self) -> Vec<u32> {
        self.m_i.iter().chain(&self.m_ii).copied().collect()
    }

    pub fn seeds(&self) -> Vec<SeedSpec> {
        let kinds = std::iter::repeat_n(SeedKind::TypeI, self.q())
            .chain(std::iter::repeat(SeedKind::TypeII));
        kinds
            .zip(self.indices())
            .map(|(kind, m)| SeedSpec { kind, m })
            .collect()
    }

    /// Parameters of the final (extended) isotonic part `V_l`.
    pub fn params(&self) -> IsotonicParams {
        IsotonicParams::from_alpha(self.alpha.clone(), self.omega.clone())
            .expect("validated on construction")
    }

    /// Every type-II seed sits below the ground state: `alpha' > max m_II`.
    pub fn is_admissible(&self) -> bool {
        match self.m_ii.last() {
            Some(&m) => self.alpha_prime() > Rational::from_i64(m as i64),
            None => true,
        }
    }

    /// Same seeds with the type-II index at `pos` removed and `alpha` raised
    /// by one, which leaves `alpha'` unchanged.
    fn without_type_ii(&self, positions: &[usize]) -> Self {
        let m_ii = self
            .m_ii
            .iter()
            .enumerate()
            .filter(|(i, _)| !positions.contains(i))
            .map(|(_, &m)| m)
            .collect();
        let alpha = &self.alpha + Rational::from_i64(positions.len() as i64);
        Self::new(alpha, self.omega.clone(), self.m_i.clone(), m_ii)
            .expect("sub-spec of a valid spec")
    }
}

impl fmt::Display for ExtensionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={} omega={} I={:?} II={:?} (alpha'={})",
            self.alpha,
            self.omega,
            self.m_i,
            self.m_ii,
            self.alpha_prime()
        )
    }
}

/// Computed `g` together with its predicted and computed invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct GReport {
    pub g: RatPoly,
    pub mu_predicted: i64,
    pub mu_computed: Option<usize>,
    pub sigma: i64,
    pub lead_predicted: Rational,
    pub lead_computed: Rational,
    pub const_predicted: Rational,
    pub const_computed: Rational,
    /// `det Γ` was divisible by the expected power of `z`.
    pub divisible: bool,
    /// Set once a regularity certificate has been attached.
    pub regular: Option<bool>,
    pub admissible: bool,
}

impl GReport {
    pub fn degree_matches(&self) -> bool {
        self.mu_computed.map(|d| d as i64) == Some(self.mu_predicted)
    }

    /// Degree, leading coefficient and constant term all agree with the
    /// closed forms, and the z-power division was exact.
    pub fn closed_forms_hold(&self) -> bool {
        self.divisible
            && self.degree_matches()
            && self.lead_computed == self.lead_predicted
            && self.const_computed == self.const_predicted
    }
}

/// `Γ` for arbitrary (not necessarily sorted) index lists. Column order
/// follows `m_i` then `m_ii` as given.
pub fn gamma_matrix(alpha_prime: &Rational, m_i: &[u32], m_ii: &[u32]) -> Vec<Vec<RatPoly>> {
    let q = m_i.len();
    let k = q + m_ii.len();
    let m: Vec<i64> = m_i.iter().chain(m_ii).map(|&v| v as i64).collect();
    let shifted = |i: usize| alpha_prime + Rational::from_i64(i as i64 - 1);
    let neg_shifted = |i: usize| -alpha_prime - Rational::from_i64(i as i64 - 1);
    let type_i = |n: i64, i: usize| {
        if n < 0 {
            RatPoly::zero()
        } else {
            laguerre_negated_arg(n as u32, &shifted(i))
        }
    };
    (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| {
                    let mj = m[j - 1];
                    let mj1 = Rational::from_i64(mj + 1);
                    match (i <= q + 1, j <= q) {
                        (true, true) => type_i(mj - i as i64 + 1, i),
                        (true, false) => {
                            let c = pochhammer(&mj1, (i - 1) as u32);
                            laguerre((mj + i as i64 - 1) as u32, &neg_shifted(i))
                                .mul_zpow(k - i)
                                .scale(&c)
                        }
                        (false, true) => type_i(mj - q as i64, i),
                        (false, false) => {
                            let start =
                                Rational::from_i64(mj + q as i64 + 2 - i as i64) - alpha_prime;
                            let c =
                                pochhammer(&mj1, q as u32) * pochhammer(&start, (i - q - 1) as u32);
                            laguerre((mj + q as i64) as u32, &neg_shifted(i))
                                .mul_zpow(k - i)
                                .scale(&c)
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// The `k x k` polynomial matrix whose determinant, divided by
/// `z^{(k-q)(k-q-1)}`, is `g`.
pub fn build_gamma_matrix(spec: &ExtensionSpec) -> Vec<Vec<RatPoly>> {
    gamma_matrix(&spec.alpha_prime(), spec.m_i(), spec.m_ii())
}

fn z_power_removed(spec: &ExtensionSpec) -> usize {
    let r = spec.k() - spec.q();
    r * r.saturating_sub(1)
}

/// Computes `g = z^{-(k-q)(k-q-1)} det Γ` exactly and fills in the
/// closed-form predictions alongside.
pub fn compute_g(spec: &ExtensionSpec) -> Result<GReport> {
    let det = det_bareiss(build_gamma_matrix(spec))?;
    let g = det.div_exact_zpow(z_power_removed(spec))?;
    let (mu_predicted, sigma, lead_predicted) = predict_mu_sigma_lead(spec);
    Ok(GReport {
        mu_computed: g.degree(),
        lead_computed: g.leading().cloned().unwrap_or_else(Rational::zero),
        const_computed: g.constant_term(),
        g,
        mu_predicted,
        sigma,
        lead_predicted,
        const_predicted: predict_const(spec),
        divisible: true,
        regular: None,
        admissible: spec.is_admissible(),
    })
}

fn triangular(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

fn signed_vandermonde_over_factorials(spec: &ExtensionSpec, sigma: i64) -> Rational {
    let as_i64 = |v: &[u32]| v.iter().map(|&m| m as i64).collect::<Vec<_>>();
    let num = vandermonde(&as_i64(spec.m_i())) * vandermonde(&as_i64(spec.m_ii()));
    let den = spec
        .indices()
        .iter()
        .fold(BigInt::one(), |acc, &m| acc * factorial(m));
    let c = Rational::new(num, den);
    if sigma % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Closed-form degree `mu`, sign exponent `sigma` and leading coefficient of `g`.
pub fn predict_mu_sigma_lead(spec: &ExtensionSpec) -> (i64, i64, Rational) {
    let (k, q) = (spec.k(), spec.q());
    let sum_m: i64 = spec.indices().iter().map(|&m| m as i64).sum();
    let cross = (q * (k - q)) as i64;
    let mu = sum_m - triangular(q) - triangular(k - q) + cross;
    let sigma = spec.m_ii().iter().map(|&m| m as i64).sum::<i64>() + cross;
    (mu, sigma, signed_vandermonde_over_factorials(spec, sigma))
}

/// Closed-form `g(0)`:
/// `(-1)^sigma Δ(m_I) Δ(m_II) / (m_1!...m_k!)
///   * prod_{i<=q} (a'+i)_{m_i-i+1} * prod_{i>q} (a'-m_i)_{m_i+2q+1-i}`.
pub fn predict_const(spec: &ExtensionSpec) -> Rational {
    let q = spec.q() as i64;
    let ap = spec.alpha_prime();
    let (_, _, lead) = predict_mu_sigma_lead(spec);
    let m = spec.indices();
    let mut acc = lead;
    for (idx, &mi) in m.iter().enumerate() {
        let i = idx as i64 + 1;
        let mi = mi as i64;
        let (start, len) = if i <= q {
            (&ap + Rational::from_i64(i), mi - i + 1)
        } else {
            (&ap - Rational::from_i64(mi), mi + 2 * q + 1 - i)
        };
        debug_assert!(len >= 0, "negative Pochhammer length in {spec}");
        acc *= pochhammer(&start, len.max(0) as u32);
    }
    acc
}

/// Prefactor in `W(phi_1..phi_k | x) = (w x)^{k(k-1)/2} z^{z_power} e^{exp_half_coeff z/2} g(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskianGauge {
    pub omega_x_power: usize,
    pub z_power: Rational,
    pub exp_half_coeff: i64,
}

/// Result of the direct Wronskian route.
#[derive(Clone, Debug, PartialEq)]
pub struct WronskianDirect {
    pub gauge: WronskianGauge,
    /// Polynomial part of the Wronskian; equals `g`.
    pub w: RatPoly,
}

/// Largest `k` accepted by [`wronskian_direct`].
pub const DIRECT_WRONSKIAN_MAX_K: usize = 5;

/// Builds the Wronskian of the seed functions from their z-derivatives,
/// strips the common gauge, and checks the polynomial part against
/// [`compute_g`].
///
/// Row `r` holds the `r`-th z-derivatives `z^{a_c - r} e^{s_c z/2} P_{c,r}`.
/// Factoring `z^{a_c} e^{s_c z/2}` from column `c` and `z^{-r}` from row `r`
/// leaves `det[P_{c,r}] = z^{k(k-1)/2 - q(k-q)} g`; the change of variable
/// `d/dx = w x d/dz` contributes `(w x)^{k(k-1)/2}`.
pub fn wronskian_direct(spec: &ExtensionSpec) -> Result<WronskianDirect> {
    let (k, q) = (spec.k(), spec.q());
    if k > DIRECT_WRONSKIAN_MAX_K {
        return Err(Error::SpecInvalid(format!(
            "direct Wronskian limited to k <= {DIRECT_WRONSKIAN_MAX_K}, got k = {k}"
        )));
    }
    let ap = spec.alpha_prime();
    let seeds: Vec<_> = spec
        .seeds()
        .into_iter()
        .map(|s| make_seed(s, &ap).0)
        .collect();
    let mut columns = Vec::with_capacity(k);
    for seed in &seeds {
        let mut col = Vec::with_capacity(k);
        let mut cur = seed.clone();
        for _ in 0..k {
            col.push(cur.poly.clone());
            cur = cur.diff();
        }
        columns.push(col);
    }
    let rows: Vec<Vec<RatPoly>> = (0..k)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let det = det_bareiss(rows)?;
    let shift = (triangular(q) + triangular(k - q)) as usize;
    let w = det.div_exact_zpow(shift).map_err(|e| {
        Error::OracleMismatch(format!("direct Wronskian not divisible by z^{shift}: {e}"))
    })?;

    let reference = compute_g(spec)?;
    if w != reference.g {
        return Err(Error::OracleMismatch(format!(
            "direct Wronskian {w} differs from det route {} for {spec}",
            reference.g
        )));
    }
    let z_power = seeds
        .iter()
        .fold(Rational::zero(), |acc, s| acc + &s.zpower)
        - Rational::from_i64((q * (k - q)) as i64);
    Ok(WronskianDirect {
        gauge: WronskianGauge {
            omega_x_power: k * k.saturating_sub(1) / 2,
            z_power,
            exp_half_coeff: 2 * q as i64 - k as i64,
        },
        w,
    })
}

/// Checks the exact recurrence at the origin that links `g` to the three
/// lower-order denominators obtained by dropping the last, the penultimate,
/// or both of the last two type-II seeds:
///
/// `g(0) g''(0) (alpha+1) = (m_k - m_{k-1}) g'(0) gbar'(0)`.
pub fn check_origin_recurrence(spec: &ExtensionSpec) -> Result<bool> {
    let r = spec.m_ii().len();
    if r < 2 {
        return Err(Error::Inapplicable(format!(
            "origin recurrence needs at least two type-II seeds, spec has {r}"
        )));
    }
    let g0 = compute_g(spec)?.const_computed;
    let g_drop_last = compute_g(&spec.without_type_ii(&[r - 1]))?.const_computed;
    let g_drop_penultimate = compute_g(&spec.without_type_ii(&[r - 2]))?.const_computed;
    let g_drop_both = compute_g(&spec.without_type_ii(&[r - 2, r - 1]))?.const_computed;

    let gap = Rational::from_i64(spec.m_ii()[r - 1] as i64 - spec.m_ii()[r - 2] as i64);
    let lhs = g0 * g_drop_both * (spec.alpha() + Rational::one());
    let rhs = gap * g_drop_last * g_drop_penultimate;
    Ok(lhs == rhs)
}
