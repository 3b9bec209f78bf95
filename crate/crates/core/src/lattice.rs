//! Enumeration of admissible extensions and the exact invariant checks run
//! over them.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::regularity::certify;
use crate::scalar::Scalar;
use crate::wronskian::{check_origin_recurrence, compute_g, wronskian_direct, ExtensionSpec};
use crate::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeConfig {
    pub max_k: usize,
    pub max_m: u32,
    /// Number of `alpha'` values per index set: `base + 1/2, base + 3/2, ...`
    /// with `base = max m_II`, or 1 without type-II seeds.
    pub alpha_grid: usize,
    /// Largest `k` for which the direct Wronskian is recomputed.
    pub wronskian_max_k: usize,
    /// Flips the predicted sign of `g(0)`; every nontrivial case must then fail.
    pub negate_sign: bool,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        Self {
            max_k: 4,
            max_m: 6,
            alpha_grid: 4,
            wronskian_max_k: 4,
            negate_sign: false,
        }
    }
}

/// Strictly increasing subsets of `1..=max_m` with `len` elements.
fn increasing_subsets(max_m: u32, len: usize) -> Vec<Vec<u32>> {
    fn rec(start: u32, max_m: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for m in start..=max_m {
            cur.push(m);
            rec(m + 1, max_m, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max_m, len, &mut Vec::new(), &mut out);
    out
}

/// Every admissible spec with `1 <= k <= max_k`, `omega = 1`, in a fixed order.
pub fn admissible_lattice(config: &LatticeConfig) -> Vec<ExtensionSpec> {
    let mut specs = Vec::new();
    for k in 1..=config.max_k {
        for q in 0..=k {
            for m_i in increasing_subsets(config.max_m, q) {
                for m_ii in increasing_subsets(config.max_m, k - q) {
                    let base = m_ii.last().map_or(1, |&m| m as i64);
                    for j in 0..config.alpha_grid as i64 {
                        let alpha_prime = Rational::from_i64(base) + rat(2 * j + 1, 2);
                        let spec = ExtensionSpec::from_alpha_prime(
                            alpha_prime,
                            rat(1, 1),
                            m_i.clone(),
                            m_ii.clone(),
                        )
                        .expect("lattice alpha' keeps alpha >= 1/2");
                        debug_assert!(spec.is_admissible());
                        specs.push(spec);
                    }
                }
            }
        }
    }
    specs
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Check {
    /// `det Γ` divisible by `z^{(k-q)(k-q-1)}`.
    Divisibility,
    Degree,
    Leading,
    Constant,
    /// `sign g(0) = sign lead = (-1)^sigma`.
    SignTheorem,
    /// No root of `g` on the positive half-line.
    RootCount,
    Recurrence,
    DirectWronskian,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Divisibility,
        Check::Degree,
        Check::Leading,
        Check::Constant,
        Check::SignTheorem,
        Check::RootCount,
        Check::Recurrence,
        Check::DirectWronskian,
    ];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Check::Divisibility => "divisibility",
            Check::Degree => "degree",
            Check::Leading => "leading",
            Check::Constant => "constant",
            Check::SignTheorem => "sign",
            Check::RootCount => "root-count",
            Check::Recurrence => "recurrence",
            Check::DirectWronskian => "direct-wronskian",
        };
        f.write_str(name)
    }
}

/// Results of every applicable check for one spec.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseOutcome {
    pub spec: ExtensionSpec,
    pub results: Vec<(Check, Result<(), String>)>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, r)| r.is_ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = (Check, &str)> {
        self.results
            .iter()
            .filter_map(|(c, r)| r.as_ref().err().map(|e| (*c, e.as_str())))
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs every applicable check on one spec.
pub fn check_spec(spec: &ExtensionSpec, config: &LatticeConfig) -> CaseOutcome {
    let mut results = Vec::new();
    let report = match compute_g(spec) {
        Ok(r) => r,
        Err(e) => {
            results.push((Check::Divisibility, Err(e.to_string())));
            return CaseOutcome {
                spec: spec.clone(),
                results,
            };
        }
    };
    results.push((
        Check::Divisibility,
        expect(report.divisible, || "z-power not removed".into()),
    ));
    results.push((
        Check::Degree,
        expect(report.degree_matches(), || {
            format!(
                "deg g = {:?}, predicted {}",
                report.mu_computed, report.mu_predicted
            )
        }),
    ));
    results.push((
        Check::Leading,
        expect(report.lead_computed == report.lead_predicted, || {
            format!(
                "lead {} vs predicted {}",
                report.lead_computed, report.lead_predicted
            )
        }),
    ));
    results.push((
        Check::Constant,
        expect(report.const_computed == report.const_predicted, || {
            format!(
                "g(0) {} vs predicted {}",
                report.const_computed, report.const_predicted
            )
        }),
    ));

    let mut predicted_sign: i8 = if report.sigma % 2 == 0 { 1 } else { -1 };
    if config.negate_sign {
        predicted_sign = -predicted_sign;
    }
    let s0 = report.const_computed.signum_i8();
    let sl = report.lead_computed.signum_i8();
    results.push((
        Check::SignTheorem,
        expect(s0 == predicted_sign && sl == predicted_sign, || {
            format!("sign g(0) = {s0}, sign lead = {sl}, (-1)^sigma = {predicted_sign}")
        }),
    ));
    results.push((
        Check::RootCount,
        match certify(&report) {
            Ok(c) => expect(c.regular, || {
                format!("{} positive roots", c.root_count_positive_axis)
            }),
            Err(e) => Err(e.to_string()),
        },
    ));
    if spec.k() - spec.q() >= 2 {
        results.push((
            Check::Recurrence,
            match check_origin_recurrence(spec) {
                Ok(ok) => expect(ok, || "origin recurrence violated".into()),
                Err(e) => Err(e.to_string()),
            },
        ));
    }
    if spec.k() <= config.wronskian_max_k {
        results.push((
            Check::DirectWronskian,
            wronskian_direct(spec)
                .map(|_| ())
                .map_err(|e| e.to_string()),
        ));
    }
    CaseOutcome {
        spec: spec.clone(),
        results,
    }
}

/// Pass/fail tallies per check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub cases: usize,
    pub cases_passed: usize,
    pub per_check: BTreeMap<Check, CheckTally>,
    /// Display form of the first failing spec in lattice order, with its failures.
    pub first_failure: Option<(String, Vec<(Check, String)>)>,
}

impl LatticeSummary {
    pub fn from_outcomes(outcomes: &[CaseOutcome]) -> Self {
        let mut per_check: BTreeMap<Check, CheckTally> = BTreeMap::new();
        for o in outcomes {
            for (c, r) in &o.results {
                let t = per_check.entry(*c).or_default();
                if r.is_ok() {
                    t.passed += 1;
                } else {
                    t.failed += 1;
                }
            }
        }
        let first_failure = outcomes.iter().find(|o| !o.passed()).map(|o| {
            (
                o.spec.to_string(),
                o.failures().map(|(c, e)| (c, e.to_string())).collect(),
            )
        });
        Self {
            cases: outcomes.len(),
            cases_passed: outcomes.iter().filter(|o| o.passed()).count(),
            per_check,
            first_failure,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.cases_passed == self.cases
    }

    pub fn tally(&self, check: Check) -> CheckTally {
        self.per_check.get(&check).cloned().unwrap_or_default()
    }
}

/// Checks the whole lattice; outcomes come back in lattice order either way.
pub fn run_lattice(config: &LatticeConfig, parallel: bool) -> Vec<CaseOutcome> {
    let specs = admissible_lattice(config);
    if parallel {
        specs.par_iter().map(|s| check_spec(s, config)).collect()
    } else {
        specs.iter().map(|s| check_spec(s, config)).collect()
    }
}
