//! Machine-readable report of one extension. Exact quantities are written as
//! `"num/den"` strings; floating-point results live under `numeric`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::regularity::{certify, RegularityCertificate};
use crate::spectral::{
    build_potential, max_off_diagonal, numeric_spectrum, solve_eop, NumericGrid,
};
use crate::wronskian::{
    check_origin_recurrence, compute_g, wronskian_direct, ExtensionSpec, DIRECT_WRONSKIAN_MAX_K,
};
use crate::{RatPoly, Rational};

pub const SCHEMA_VERSION: u32 = 1;

/// Parses `"p/q"` or an integer `"p"`, with optional sign and surrounding spaces.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::SpecInvalid(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A rational that serializes as `"num/den"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s)
            .map(Exact)
            .map_err(serde::de::Error::custom)
    }
}

impl From<&Rational> for Exact {
    fn from(r: &Rational) -> Self {
        Exact(r.clone())
    }
}

fn exact_coeffs(p: &RatPoly) -> Vec<Exact> {
    p.coeffs().iter().map(Exact::from).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub alpha: Exact,
    pub l: Exact,
    pub omega: Exact,
    pub m_i: Vec<u32>,
    pub m_ii: Vec<u32>,
    pub k: usize,
    pub q: usize,
    pub alpha_prime: Exact,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GSection {
    /// Coefficients of `g`, constant term first.
    pub coefficients: Vec<Exact>,
    pub mu_predicted: i64,
    pub mu_computed: Option<usize>,
    pub sigma: i64,
    pub lead_predicted: Exact,
    pub lead_computed: Exact,
    pub const_predicted: Exact,
    pub const_computed: Exact,
    pub divisible: bool,
    pub closed_forms_hold: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EopEntry {
    pub nu: u32,
    pub degree: usize,
    /// Monic, constant term first.
    pub coefficients: Vec<Exact>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialSection {
    /// Additive constant `(k - 2q) w`.
    pub shift: Exact,
    pub irregular: bool,
    /// `w (2 nu + alpha + 1) + shift` for `nu = 0..=nu_max`; derived from the
    /// isospectral construction rather than computed.
    pub expected_levels: Vec<Exact>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericSection {
    pub orthogonality_max_off_diagonal: Option<f64>,
    pub spectrum_levels: Vec<f64>,
    pub spectrum_expected: Vec<f64>,
    pub spectrum_max_relative_deviation: Option<f64>,
    /// Failures of the numeric checks, as messages.
    pub errors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub spec: SpecEcho,
    pub g: GSection,
    pub certificate: RegularityCertificate,
    /// `None` when fewer than two type-II seeds.
    pub recurrence: Option<bool>,
    /// `None` when `k` exceeds the direct route's limit.
    pub direct_wronskian: Option<bool>,
    pub potential: PotentialSection,
    pub eop: Vec<EopEntry>,
    pub numeric: Option<NumericSection>,
    pub notes: Vec<String>,
}

impl ReportDocument {
    /// The closed forms or an oracle disagree with the computation.
    pub fn inconsistent(&self) -> bool {
        !self.g.closed_forms_hold
            || self.recurrence == Some(false)
            || self.direct_wronskian == Some(false)
    }
}

fn echo(spec: &ExtensionSpec) -> SpecEcho {
    SpecEcho {
        alpha: spec.alpha().into(),
        l: spec.params().l().into(),
        omega: spec.omega().into(),
        m_i: spec.m_i().to_vec(),
        m_ii: spec.m_ii().to_vec(),
        k: spec.k(),
        q: spec.q(),
        alpha_prime: (&spec.alpha_prime()).into(),
        admissible: spec.is_admissible(),
    }
}

/// Runs the full pipeline on one spec. Exceptional polynomials are solved
/// only for regular extensions; `numeric` adds quadrature and
/// finite-difference checks.
pub fn build_report(spec: &ExtensionSpec, nu_max: u32, numeric: bool) -> Result<ReportDocument> {
    let mut report = compute_g(spec)?;
    let certificate = certify(&report)?;
    report.regular = Some(certificate.regular);
    let mut notes = Vec::new();

    let recurrence = match check_origin_recurrence(spec) {
        Ok(ok) => Some(ok),
        Err(Error::Inapplicable(_)) => None,
        Err(e) => return Err(e),
    };
    let direct_wronskian = if spec.k() <= DIRECT_WRONSKIAN_MAX_K {
        match wronskian_direct(spec) {
            Ok(_) => Some(true),
            Err(Error::OracleMismatch(msg)) => {
                notes.push(msg);
                Some(false)
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    let potential = build_potential(spec, &report);
    let expected: Vec<Rational> = (0..=nu_max)
        .map(|nu| potential.expected_level(nu))
        .collect();

    let family = if certificate.regular {
        Some(solve_eop(spec, &report, nu_max)?)
    } else {
        notes.push(format!(
            "g has {} root(s) on the positive axis; no bound states reported",
            certificate.root_count_positive_axis
        ));
        None
    };
    let eop = family
        .as_ref()
        .map(|f| {
            f.polys
                .iter()
                .enumerate()
                .map(|(nu, y)| EopEntry {
                    nu: nu as u32,
                    degree: y.degree().unwrap_or(0),
                    coefficients: exact_coeffs(y),
                })
                .collect()
        })
        .unwrap_or_default();

    let numeric = match (&family, numeric) {
        (Some(f), true) => {
            let mut section = NumericSection {
                orthogonality_max_off_diagonal: None,
                spectrum_levels: Vec::new(),
                spectrum_expected: expected.iter().map(crate::Scalar::to_f64).collect(),
                spectrum_max_relative_deviation: None,
                errors: Vec::new(),
            };
            match max_off_diagonal(f) {
                Ok(v) => section.orthogonality_max_off_diagonal = Some(v),
                Err(e) => section.errors.push(e.to_string()),
            }
            let levels = expected.len();
            match numeric_spectrum(
                &potential,
                levels,
                &NumericGrid::for_potential(&potential, levels),
            ) {
                Ok(v) => {
                    section.spectrum_max_relative_deviation = Some(
                        v.iter()
                            .zip(&section.spectrum_expected)
                            .map(|(a, b)| (a - b).abs() / b.abs())
                            .fold(0.0, f64::max),
                    );
                    section.spectrum_levels = v;
                }
                Err(e) => section.errors.push(e.to_string()),
            }
            Some(section)
        }
        _ => None,
    };

    Ok(ReportDocument {
        schema: SCHEMA_VERSION,
        spec: echo(spec),
        g: GSection {
            coefficients: exact_coeffs(&report.g),
            mu_predicted: report.mu_predicted,
            mu_computed: report.mu_computed,
            sigma: report.sigma,
            lead_predicted: (&report.lead_predicted).into(),
            lead_computed: (&report.lead_computed).into(),
            const_predicted: (&report.const_predicted).into(),
            const_computed: (&report.const_computed).into(),
            divisible: report.divisible,
            closed_forms_hold: report.closed_forms_hold(),
        },
        certificate,
        recurrence,
        direct_wronskian,
        potential: PotentialSection {
            shift: (&potential.shift).into(),
            irregular: potential.irregular,
            expected_levels: expected.iter().map(Exact::from).collect(),
        },
        eop,
        numeric,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("5/2").unwrap(), rat(5, 2));
        assert_eq!(parse_rational(" -3 ").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(Exact(rat(3, 1)).to_string(), "3/1");
        assert_eq!(
            serde_json::to_string(&Exact(rat(-1, 8))).unwrap(),
            "\"-1/8\""
        );
    }

    #[test]
    fn worked_two_step_report() {
        let spec = ExtensionSpec::new(rat(5, 2), rat(1, 1), vec![1], vec![1]).unwrap();
        let doc = build_report(&spec, 2, false).unwrap();
        assert_eq!(doc.g.mu_computed, Some(3));
        assert!(doc.certificate.regular);
        assert_eq!(doc.eop.len(), 3);
        assert_eq!(doc.eop[2].degree, 5);
        assert_eq!(doc.recurrence, None);
        assert_eq!(doc.direct_wronskian, Some(true));
        assert!(!doc.inconsistent());
    }

    #[test]
    fn counterexample_report() {
        let spec = ExtensionSpec::new(rat(1, 2), rat(1, 1), vec![], vec![2]).unwrap();
        let doc = build_report(&spec, 3, true).unwrap();
        assert!(!doc.certificate.regular);
        assert_eq!(doc.certificate.root_count_positive_axis, 1);
        assert!(doc.eop.is_empty());
        assert!(doc.numeric.is_none());
    }

    #[test]
    fn json_round_trip() {
        let spec = ExtensionSpec::new(rat(9, 2), rat(3, 2), vec![2], vec![1, 3]).unwrap();
        let doc = build_report(&spec, 2, true).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert!(text.contains("\"schema\":1"));
    }
}
