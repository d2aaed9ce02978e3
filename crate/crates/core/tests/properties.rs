//! Randomized invariants.

use num_complex::Complex64 as C64;
use poincare_maxwell::harmonics::{z_at, HarmonicIndex};
use poincare_maxwell::kinematics::{sl2c_to_complex_rotation, ComplexEulerAngles, ComplexSpherePoint};
use poincare_maxwell::linalg::{norm, sub_vec};
use poincare_maxwell::lorentz_sector::{radial_residual, RadialSolution, RadialVariant};
use poincare_maxwell::photon::{
    dirac_form_residual, energy_density, maxwell_residuals, polarization_vectors, DiracEquation, FieldPair, Helicity,
    PhotonPlaneWave, WaveVector,
};
use poincare_maxwell::HalfInt;
use proptest::prelude::*;
use std::f64::consts::PI;

fn angles() -> impl Strategy<Value = ComplexEulerAngles> {
    (0.0..2.0 * PI, -1.0..1.0f64, 0.0..PI, -1.0..1.0f64, -2.0 * PI..2.0 * PI, -1.0..1.0f64)
        .prop_map(|(a, b, c, d, e, f)| ComplexEulerAngles::new(a, b, c, d, e, f).unwrap())
}

fn wave_vector() -> impl Strategy<Value = WaveVector> {
    prop::array::uniform3(-3.0..3.0f64)
        .prop_filter("nonzero", |k| k.iter().map(|v| v * v).sum::<f64>() > 1e-4)
        .prop_map(|k| WaveVector::propagating(k).unwrap())
}

fn complex() -> impl Strategy<Value = C64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| C64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rotation_preserves_sphere_invariant(a in angles(), z in prop::array::uniform3(complex())) {
        let r = sl2c_to_complex_rotation(&a.to_sl2c()).unwrap();
        let p = ComplexSpherePoint::new(z);
        let q = p.transformed(&r);
        prop_assert!((p.r_sq() - q.r_sq()).norm() < 1e-9 * p.r_sq().norm().max(1.0) * r.max_abs().powi(2));
    }

    #[test]
    fn rotation_map_is_homomorphism(a in angles(), b in angles()) {
        let (ga, gb) = (a.to_sl2c(), b.to_sl2c());
        let lhs = sl2c_to_complex_rotation(&ga.compose(&gb)).unwrap();
        let rhs = sl2c_to_complex_rotation(&ga).unwrap() * sl2c_to_complex_rotation(&gb).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9 * rhs.max_abs().max(1.0));
    }

    #[test]
    fn polar_one_parameter_subgroup(w1 in (0.0..1.5f64, -0.8..0.8f64), w2 in (0.0..1.5f64, -0.8..0.8f64), tl in 0..7i32) {
        // Z(w₁) Z(w₂) = Z(w₁ + w₂) as matrices.
        let l = HalfInt::from_twice(tl);
        let (a, b) = (C64::new(w1.0, w1.1), C64::new(w2.0, w2.1));
        let z = |w: C64, m: HalfInt, n: HalfInt| z_at(HarmonicIndex::new(l, m, n).unwrap(), w);
        for m in l.symmetric_range() {
            for n in l.symmetric_range() {
                let prod: C64 = l.symmetric_range().map(|k| z(a, m, k) * z(b, k, n)).sum();
                let direct = z(a + b, m, n);
                prop_assert!((prod - direct).norm() < 1e-10 * direct.norm().max(1.0) * 10.0);
            }
        }
    }

    #[test]
    fn polarizations_are_unit_and_transverse(k in wave_vector()) {
        let p = polarization_vectors(&k).unwrap();
        let kc = k.components();
        for h in Helicity::ALL {
            let e = p.get(h);
            prop_assert!((norm(&e) - 1.0).abs() < 1e-12);
            if h.is_transverse() {
                let d: C64 = e.iter().zip(&kc).map(|(a, b)| a * b).sum();
                prop_assert!(d.norm() < 1e-12 * k.norm());
            }
        }
    }

    #[test]
    fn transverse_waves_solve_maxwell(k in wave_vector(), x in prop::array::uniform3(-5.0..5.0f64), t in -5.0..5.0f64, c in 0.5..3.0f64) {
        for h in [Helicity::Plus, Helicity::Minus] {
            let w = PhotonPlaneWave::new(k, h, c).unwrap();
            let m = maxwell_residuals(&w.physical_field(), &x, t, c).unwrap();
            prop_assert!(m.max() < 1e-12, "{m:?}");
            let eq = if h == Helicity::Plus { DiracEquation::Me1 } else { DiracEquation::Me2 };
            let other = if h == Helicity::Plus { DiracEquation::Me2 } else { DiracEquation::Me1 };
            let field = w.translation_field();
            prop_assert!(dirac_form_residual(&field, eq, &x, t, c).unwrap().residual < 1e-12);
            prop_assert!(dirac_form_residual(&field.conj(), other, &x, t, c).unwrap().residual < 1e-12);
        }
    }

    #[test]
    fn energy_formulas_agree(v in prop::array::uniform6(complex())) {
        let a = energy_density(&v);
        let b = FieldPair::from_six(&v).energy_density();
        prop_assert!((a - b).abs() < 1e-12 * a.max(1.0));
    }

    #[test]
    fn plane_wave_energy_is_constant(k in wave_vector(), x in prop::array::uniform3(-5.0..5.0f64), t in -5.0..5.0f64) {
        let w = PhotonPlaneWave::new(k, Helicity::Plus, 1.0).unwrap();
        let f = w.physical_field();
        let e0 = energy_density(&f.value(&[0.0; 3], 0.0));
        prop_assert!((energy_density(&f.value(&x, t)) - e0).abs() < 1e-14);
        let diff = norm(&sub_vec(&FieldPair::from_six(&f.value(&x, t)).to_six(), &f.value(&x, t)));
        prop_assert!(diff < 1e-14);
    }

    #[test]
    fn corrected_radial_residual_vanishes(l in 1u32..6, c in complex(), cd in complex(), r in complex()) {
        prop_assume!(r.norm() > 0.05 && !(r.im.abs() < 1e-9 && r.re < 0.0));
        let f = RadialSolution::new(l, c, cd, RadialVariant::Corrected).unwrap();
        for v in radial_residual(&f, r).unwrap() {
            prop_assert!(v.norm() < 1e-12 * 100.0 * r.norm().max(1.0));
        }
    }
}
