mod common;

use xlag::spectral::{build_potential, numeric_spectrum, solve_eop, wavefunction, NumericGrid};
use xlag::{certify, compute_g, rat, ExtensionSpec, IsotonicParams, Scalar};

use common::*;

fn regular(spec: &ExtensionSpec) -> xlag::GReport {
    let mut r = compute_g(spec).unwrap();
    r.regular = Some(certify(&r).unwrap().regular);
    r
}

/// `ln |W(x)|` of the seeds, from their z-derivatives in floating point and
/// `W_x = (dz/dx)^{k(k-1)/2} W_z`.
fn log_wronskian(spec: &ExtensionSpec, x: f64) -> f64 {
    let w = spec.omega().to_f64();
    let z = 0.5 * w * x * x;
    let seeds = seeds_reference(spec);
    let k = seeds.len();
    let mut m = vec![vec![0.0; k]; k];
    for (c, s) in seeds.iter().enumerate() {
        let mut cur = s.clone();
        for row in m.iter_mut() {
            let p = cur.p.to_f64();
            row[c] = z.powf(cur.a.to_f64()) * (0.5 * cur.s as f64 * z).exp() * p.eval(&z);
            cur = differentiate(&cur);
        }
    }
    let det = det_f64(m);
    (k * k.saturating_sub(1) / 2) as f64 * (w * x).ln() + det.abs().ln()
}

fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        let pivot_row = m[col].clone();
        for row in m.iter_mut().skip(col + 1) {
            let f = row[col] / pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= f * p;
            }
        }
    }
    det
}

#[test]
fn extended_potential_follows_crum() {
    let cases = [
        ExtensionSpec::new(rat(5, 2), rat(1, 1), vec![1], vec![]).unwrap(),
        ExtensionSpec::new(rat(1, 2), rat(3, 2), vec![], vec![1]).unwrap(),
        ExtensionSpec::new(rat(5, 2), rat(1, 1), vec![1], vec![1]).unwrap(),
        ExtensionSpec::new(rat(9, 2), rat(1, 2), vec![2], vec![1, 3]).unwrap(),
    ];
    for spec in &cases {
        let v = build_potential(spec, &regular(spec));
        let start = IsotonicParams::from_alpha(spec.alpha_prime(), spec.omega().clone()).unwrap();
        for x in [0.4, 1.1, 2.3, 3.7] {
            let h = 1e-3;
            let f = |t: f64| log_wronskian(spec, t);
            let second = (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h)
                - f(x - 2.0 * h))
                / (12.0 * h * h);
            let crum = start.potential(x) - 2.0 * second;
            let ours = v.eval(x);
            assert!(
                (crum - ours).abs() < 1e-5 * ours.abs().max(1.0),
                "{spec} at x={x}: {crum} vs {ours}"
            );
        }
    }
}

#[test]
fn bound_states_solve_the_schrodinger_equation() {
    let spec = ExtensionSpec::new(rat(7, 2), rat(2, 1), vec![2], vec![1]).unwrap();
    let r = regular(&spec);
    let v = build_potential(&spec, &r);
    let fam = solve_eop(&spec, &r, 3).unwrap();
    for nu in 0..=3 {
        let psi = wavefunction(&spec, &fam, nu).unwrap();
        let e = v.expected_level(nu).to_f64();
        for x in [0.5, 1.0, 1.6, 2.4] {
            let h = 1e-4;
            let d2 = (psi.eval(x + h) - 2.0 * psi.eval(x) + psi.eval(x - h)) / (h * h);
            let residual = -d2 + (v.eval(x) - e) * psi.eval(x);
            let scale = (e * psi.eval(x)).abs().max(d2.abs()).max(1e-12);
            assert!(
                residual.abs() < 1e-5 * scale,
                "nu={nu} x={x}: residual {residual}"
            );
        }
    }
}

#[test]
fn levels_are_evenly_spaced() {
    let spec = ExtensionSpec::new(rat(5, 2), rat(3, 2), vec![1, 2], vec![1]).unwrap();
    let r = regular(&spec);
    let v = build_potential(&spec, &r);
    let levels = numeric_spectrum(&v, 4, &NumericGrid::for_potential(&v, 4)).unwrap();
    for pair in levels.windows(2) {
        assert!(((pair[1] - pair[0]) - 3.0).abs() < 1e-2, "{levels:?}");
    }
}

#[test]
fn one_step_shift_lowers_levels_by_omega() {
    let spec = ExtensionSpec::new(rat(5, 2), rat(1, 1), vec![1], vec![]).unwrap();
    let r = regular(&spec);
    let v = build_potential(&spec, &r);
    let levels = numeric_spectrum(&v, 3, &NumericGrid::for_potential(&v, 3)).unwrap();
    for (nu, e) in levels.iter().enumerate() {
        // w (2 nu + alpha + 1) - w
        let expected = 2.0 * nu as f64 + 2.5;
        assert!((e - expected).abs() / expected < 1e-3);
    }
}

#[test]
fn irregular_potential_is_refused_by_the_spectral_check() {
    let spec = ExtensionSpec::new(rat(1, 2), rat(1, 1), vec![], vec![2]).unwrap();
    let r = regular(&spec);
    let v = build_potential(&spec, &r);
    assert!(v.irregular);
    assert!(numeric_spectrum(&v, 2, &NumericGrid::for_potential(&v, 2)).is_err());
}

#[test]
fn worked_examples() {
    // k = 2, q = 1, m = (1; 1): mu = 3, g(0) = (a'+1)_1 (a'-1)_2 with sigma = 2
    let spec = ExtensionSpec::new(rat(5, 2), rat(1, 1), vec![1], vec![1]).unwrap();
    let r = compute_g(&spec).unwrap();
    assert_eq!(r.mu_computed, Some(3));
    assert_eq!(r.const_computed, rat(7, 2) * rat(3, 2) * rat(5, 2));
    assert_eq!(r.g, g_reference(&spec));

    // k = 1 type I: g = z + alpha' + 1 = z + alpha
    let spec = ExtensionSpec::new(rat(5, 2), rat(1, 1), vec![1], vec![]).unwrap();
    assert_eq!(
        compute_g(&spec).unwrap().g,
        reflect(&laguerre_sum(1, &rat(3, 2)))
    );
}

#[test]
fn classical_laguerre_family_is_orthogonal() {
    let spec = ExtensionSpec::new(rat(3, 2), rat(1, 1), vec![], vec![]).unwrap();
    let fam = solve_eop(&spec, &regular(&spec), 5).unwrap();
    for i in 0..=5 {
        assert_eq!(
            xlag::spectral::orthogonality_check(&fam, i, i).unwrap(),
            1.0
        );
        for j in i + 1..=5 {
            assert!(xlag::spectral::orthogonality_check(&fam, i, j).unwrap() < 1e-12);
        }
    }
}
