//! Comparisons against independently written reference formulas.

use nalgebra::Matrix3;
use num_complex::Complex64 as C64;
use poincare_maxwell::harmonics::{z_2f1, z_factorized, z_matrix, z_sum, HarmonicIndex};
use poincare_maxwell::photon::{curl_matrix, eigenstructure, polarization_vectors, Helicity, WaveVector};
use poincare_maxwell::HalfInt;

fn fact(n: i32) -> f64 {
    assert!(n >= 0);
    (1..=n).map(f64::from).product()
}

/// Wigner small-d `d^j_{m'm}(β)` by the explicit alternating sum, all
/// arguments given as twice their value.
fn wigner_d(tj: i32, tmp: i32, tm: i32, beta: f64) -> f64 {
    let (jpm, jmm) = ((tj + tm) / 2, (tj - tm) / 2);
    let (jpmp, jmmp) = ((tj + tmp) / 2, (tj - tmp) / 2);
    let pref = (fact(jpm) * fact(jmm) * fact(jpmp) * fact(jmmp)).sqrt();
    let (c, s) = ((beta / 2.0).cos(), (beta / 2.0).sin());
    let diff = (tmp - tm) / 2;
    let mut sum = 0.0;
    for k in 0..=tj {
        let (a, b, d) = (jpm - k, jmmp - k, k + diff);
        if a < 0 || b < 0 || d < 0 {
            continue;
        }
        let sign = if (k + diff) % 2 == 0 { 1.0 } else { -1.0 };
        let pc = tj - 2 * k - diff;
        let ps = 2 * k + diff;
        sum += sign * c.powi(pc) * s.powi(ps) / (fact(a) * fact(k) * fact(b) * fact(d));
    }
    pref * sum
}

fn indices(max_twice_l: i32) -> Vec<HarmonicIndex> {
    (0..=max_twice_l)
        .flat_map(|tl| HarmonicIndex::all_for(HalfInt::from_twice(tl)))
        .collect()
}

const GRID: [f64; 5] = [0.0, 0.6, 1.4, 2.3, std::f64::consts::PI];
const TAUS: [f64; 5] = [-1.5, -0.4, 0.0, 0.7, 1.6];

#[test]
fn modulus_matches_wigner_small_d() {
    for idx in indices(8) {
        for &theta in &GRID {
            let z = z_sum(idx, theta, 0.0).unwrap();
            let d = wigner_d(idx.l().twice(), idx.m().twice(), idx.n().twice(), theta);
            assert!((z.norm() - d.abs()).abs() < 1e-10, "{idx:?} θ={theta}: {} vs {d}", z.norm());
        }
    }
}

#[test]
fn wigner_oracle_sanity() {
    // d^1_{00} = cos β, d^{1/2}_{1/2,1/2} = cos β/2
    assert!((wigner_d(2, 0, 0, 0.7) - 0.7f64.cos()).abs() < 1e-15);
    assert!((wigner_d(1, 1, 1, 0.7) - 0.35f64.cos()).abs() < 1e-15);
}

#[test]
fn three_routes_agree_on_grid() {
    let mut count = 0;
    for idx in indices(8) {
        for &theta in &GRID {
            for &tau in &TAUS {
                let a = z_sum(idx, theta, tau).unwrap();
                let b = z_2f1(idx, theta, tau).unwrap();
                let c = z_factorized(idx, theta, tau).unwrap();
                let scale = a.norm().max(1.0);
                assert!((a - b).norm() <= 1e-10 * scale, "{idx:?} ({theta}, {tau}): {a} vs {b}");
                assert!((a - c).norm() <= 1e-10 * scale, "{idx:?} ({theta}, {tau}): {a} vs {c}");
                count += 1;
            }
        }
    }
    assert!(count >= 2000, "{count}");
}

#[test]
fn real_angle_matrices_are_unitary() {
    for tl in 0..=8 {
        let l = HalfInt::from_twice(tl);
        let dim = (tl + 1) as usize;
        for &theta in &GRID {
            let z = z_matrix(l, theta, 0.0).unwrap();
            for i in 0..dim {
                for j in 0..dim {
                    let p: C64 = (0..dim).map(|k| z[i * dim + k] * z[j * dim + k].conj()).sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((p - want).norm() < 1e-10, "l={l} θ={theta} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn identity_is_exact_delta() {
    for idx in indices(8) {
        let v = z_sum(idx, 0.0, 0.0).unwrap();
        let want = if idx.m() == idx.n() { 1.0 } else { 0.0 };
        assert_eq!(v, C64::new(want, 0.0), "{idx:?}");
    }
}

fn to_nalgebra(m: &poincare_maxwell::linalg::Matrix<3>) -> Matrix3<C64> {
    Matrix3::from_fn(|i, j| m.0[i][j])
}

#[test]
fn curl_spectrum_matches_nalgebra() {
    let ks = [[0.0, 0.0, 1.0], [3.0, 4.0, 0.0], [1.0, -2.0, 0.5], [-0.3, 0.2, -1.7]];
    for k in ks {
        let w = WaveVector::propagating(k).unwrap();
        for c in [1.0, 2.5] {
            let mut oracle: Vec<f64> = to_nalgebra(&curl_matrix(&w, c)).symmetric_eigen().eigenvalues.iter().copied().collect();
            oracle.sort_by(|a, b| b.total_cmp(a));
            let ours = eigenstructure(&w, c).unwrap();
            for (a, b) in ours.values.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-12);
            }
            let kn = w.norm();
            assert!((ours.values[0] - c * kn).abs() < 1e-12);
            assert!(ours.values[1].abs() < 1e-12);
            assert!((ours.values[2] + c * kn).abs() < 1e-12);
            // Phase alignment with the closed forms: +c|k| ↔ ε₊, 0 ↔ ε₀, −c|k| ↔ ε₋.
            let p = polarization_vectors(&w).unwrap();
            for (col, h) in [Helicity::Plus, Helicity::Zero, Helicity::Minus].into_iter().enumerate() {
                let v = ours.vectors.column(col);
                let e = p.get(h);
                let overlap: C64 = v.iter().zip(&e).map(|(a, b)| a.conj() * b).sum();
                assert!((overlap.norm() - 1.0).abs() < 1e-10, "{k:?} {h:?}");
            }
        }
    }
}
