//! The `SL(2,ℂ)` factor `ψ(g)` for spin 1: the `Λ` and `Υ` matrices, the
//! radial system for `f^l_{1,q}(r)` and the separated solutions
//! `ψ_q = f^l_{1,q}(r)·𝔐^q_l`.
//!
//! The radial equations are handled in their multiplied-by-`r` form
//!
//! ```text
//! 2r f₁,₁′ − f₁,₁ − s f₁,₀ = 0,    −2r f₁,₋₁′ + f₁,₋₁ + s f₁,₀ = 0,
//! ```
//!
//! with `s = √(2l(l+1))`, plus the same pair for the dotted functions at
//! `r*`. Two closed forms are provided. The as-printed one,
//! `f₁,±₁ = C√r + s·r`, `f₁,₀ = s·r`, leaves the residual
//! `(s − s²)·r`. The corrected one has a linear term `s²·r` that makes the
//! residual vanish.

use core::f64::consts::FRAC_1_SQRT_2;

#[allow(unused_imports)] // std's inherent methods win when std is linked
use num_traits::Float;

use crate::harmonics::{generalized_m, HarmonicIndex};
use crate::kinematics::ComplexEulerAngles;
use crate::linalg::{block6, Matrix, I, ONE, ZERO};
use crate::{Error, HalfInt, Result, C64};

/// `Λ₁, Λ₂, Λ₃` and the six `Υ` built from them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaMatrices {
    pub lambda: [Matrix<3>; 3],
    pub upsilon: [Matrix<6>; 6],
    c11: C64,
    corrected: bool,
}

/// `corrected = false` keeps `Λ₁ = c₁₁/√2 [[0,1,0],[1,0,0],[0,1,0]]`
/// without its (2,3) entry; `corrected = true` restores the symmetric spin-1 form
/// `c₁₁/√2 [[0,1,0],[1,0,1],[0,1,0]]`.
pub fn build_matrices(c11: C64, corrected: bool) -> Result<LambdaMatrices> {
    if c11 == ZERO || !c11.is_finite() {
        return Err(Error::OutOfRange { name: "c11", value: c11.norm() });
    }
    let h = c11 * FRAC_1_SQRT_2;
    let lambda1 = Matrix([
        [ZERO, h, ZERO],
        [h, ZERO, if corrected { h } else { ZERO }],
        [ZERO, h, ZERO],
    ]);
    let lambda2 = Matrix([[ZERO, -I * h, ZERO], [I * h, ZERO, -I * h], [ZERO, I * h, ZERO]]);
    let lambda3 = Matrix([[c11, ZERO, ZERO], [ZERO; 3], [ZERO, ZERO, -c11]]);
    let lambda = [lambda1, lambda2, lambda3];
    let zero = Matrix::<3>::zero();
    let up = |l: &Matrix<3>, f: C64| block6(&zero, &l.conj().scale(f), &l.scale(f), &zero);
    let upsilon = [
        up(&lambda[0], ONE),
        up(&lambda[1], ONE),
        up(&lambda[2], ONE),
        up(&lambda[0], I),
        up(&lambda[1], I),
        up(&lambda[2], I),
    ];
    Ok(LambdaMatrices { lambda, upsilon, c11, corrected })
}

impl LambdaMatrices {
    pub fn c11(&self) -> C64 {
        self.c11
    }

    pub fn is_corrected(&self) -> bool {
        self.corrected
    }

    /// `Λ₁² + Λ₂² + Λ₃²`.
    pub fn casimir(&self) -> Matrix<3> {
        self.lambda.iter().fold(Matrix::zero(), |acc, l| acc + *l * *l)
    }

    /// `max |Σ Λᵢ² − l(l+1)·c₁₁²·1|` with `l = 1`.
    pub fn casimir_defect(&self) -> f64 {
        let expected = Matrix::<3>::identity().scale(self.c11 * self.c11 * 2.0);
        self.casimir().max_abs_diff(&expected)
    }

    /// Largest entry of `[Λᵢ, Λⱼ] − s·i·c₁₁·ε_ijk Λ_k` over the three cyclic
    /// pairs.
    pub fn commutator_defect(&self, sign: f64) -> f64 {
        let l = &self.lambda;
        let f = I * self.c11 * sign;
        [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
            .iter()
            .map(|&(i, j, k)| l[i].commutator(&l[j]).max_abs_diff(&l[k].scale(f)))
            .fold(0.0, f64::max)
    }

    /// The sign `s ∈ {±1}` that fits `[Λ₁, Λ₂]` best.
    pub fn commutator_sign(&self) -> f64 {
        let lhs = self.lambda[0].commutator(&self.lambda[1]);
        let f = I * self.c11;
        let plus = lhs.max_abs_diff(&self.lambda[2].scale(f));
        let minus = lhs.max_abs_diff(&self.lambda[2].scale(-f));
        if plus <= minus {
            1.0
        } else {
            -1.0
        }
    }

    /// Every `Υ` has zero diagonal 3×3 blocks.
    pub fn upsilon_block_antidiagonal(&self) -> bool {
        self.upsilon.iter().all(|u| (0..3).all(|i| (0..3).all(|j| u.0[i][j] == ZERO && u.0[i + 3][j + 3] == ZERO)))
    }
}

/// Which closed form of the radial functions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum RadialVariant {
    /// `f₁,±₁ = C√r + s·r`, `f₁,₀ = s·r`.
    AsPrinted,
    /// `f₁,±₁ = C√r + s²·r`, `f₁,₀ = s·r`.
    #[default]
    Corrected,
}

impl RadialVariant {
    pub fn name(self) -> &'static str {
        match self {
            RadialVariant::AsPrinted => "paper",
            RadialVariant::Corrected => "corrected",
        }
    }
}

/// Functions `f^l_{1,q}(r)` and their dotted partners, with derivatives.
pub trait RadialFunctions {
    fn l(&self) -> u32;
    fn l_dot(&self) -> u32;
    /// `f^l_{1,q}(r)` for `q ∈ {1, 0, −1}`.
    fn f(&self, q: i32, r: C64) -> C64;
    fn df(&self, q: i32, r: C64) -> C64;
    /// `f^l̇_{1,q}` at the (already conjugated) argument `r*`.
    fn f_dot(&self, q: i32, r_star: C64) -> C64;
    fn df_dot(&self, q: i32, r_star: C64) -> C64;
}

/// `√(2l(l+1))`.
pub fn radial_coupling(l: u32) -> f64 {
    let l = f64::from(l);
    (2.0 * l * (l + 1.0)).sqrt()
}

/// A closed-form radial solution on the principal branch of `√r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSolution {
    l: u32,
    l_dot: u32,
    c: C64,
    c_dot: C64,
    variant: RadialVariant,
}

impl RadialSolution {
    /// `l̇ = l`; see [`Self::with_l_dot`].
    pub fn new(l: u32, c: C64, c_dot: C64, variant: RadialVariant) -> Result<Self> {
        if l < 1 {
            return Err(Error::OutOfRange { name: "l", value: f64::from(l) });
        }
        Ok(RadialSolution { l, l_dot: l, c, c_dot, variant })
    }

    pub fn with_l_dot(self, l_dot: u32) -> Result<Self> {
        if l_dot < 1 {
            return Err(Error::OutOfRange { name: "l_dot", value: f64::from(l_dot) });
        }
        Ok(RadialSolution { l_dot, ..self })
    }

    pub fn variant(&self) -> RadialVariant {
        self.variant
    }

    pub fn constants(&self) -> (C64, C64) {
        (self.c, self.c_dot)
    }

    /// Coefficient of the linear term of `f₁,±₁`.
    fn linear(&self, l: u32) -> f64 {
        let s = radial_coupling(l);
        match self.variant {
            RadialVariant::AsPrinted => s,
            RadialVariant::Corrected => s * s,
        }
    }

    fn eval(&self, l: u32, c: C64, q: i32, r: C64) -> C64 {
        match q {
            0 => r * radial_coupling(l),
            _ => c * r.sqrt() + r * self.linear(l),
        }
    }

    fn deriv(&self, l: u32, c: C64, q: i32, r: C64) -> C64 {
        match q {
            0 => C64::new(radial_coupling(l), 0.0),
            _ => c / (r.sqrt() * 2.0) + self.linear(l),
        }
    }

    /// The residual left at `r` by the first radial equation,
    /// `(s − s²)·r` for the as-printed variant and `0` for the corrected one.
    pub fn expected_residual(&self, r: C64) -> C64 {
        let s = radial_coupling(self.l);
        r * (self.linear(self.l) - s * s)
    }
}

impl RadialFunctions for RadialSolution {
    fn l(&self) -> u32 {
        self.l
    }
    fn l_dot(&self) -> u32 {
        self.l_dot
    }
    fn f(&self, q: i32, r: C64) -> C64 {
        self.eval(self.l, self.c, q, r)
    }
    fn df(&self, q: i32, r: C64) -> C64 {
        self.deriv(self.l, self.c, q, r)
    }
    fn f_dot(&self, q: i32, r_star: C64) -> C64 {
        self.eval(self.l_dot, self.c_dot, q, r_star)
    }
    fn df_dot(&self, q: i32, r_star: C64) -> C64 {
        self.deriv(self.l_dot, self.c_dot, q, r_star)
    }
}

pub fn radial_solutions(l: u32, c: C64, c_dot: C64, variant: RadialVariant) -> Result<RadialSolution> {
    RadialSolution::new(l, c, c_dot, variant)
}

/// The four radial equations at `r` (undotted pair) and `r*` (dotted pair).
pub fn radial_residual<F: RadialFunctions + ?Sized>(f: &F, r: C64) -> Result<[C64; 4]> {
    if r == ZERO || !r.is_finite() {
        return Err(Error::SingularPoint { what: "r", value: r.norm() });
    }
    let rs = r.conj();
    let (s, sd) = (radial_coupling(f.l()), radial_coupling(f.l_dot()));
    Ok([
        r * f.df(1, r) * 2.0 - f.f(1, r) - f.f(0, r) * s,
        -(r * f.df(-1, r) * 2.0) + f.f(-1, r) + f.f(0, r) * s,
        rs * f.df_dot(1, rs) * 2.0 - f.f_dot(1, rs) - f.f_dot(0, rs) * sd,
        -(rs * f.df_dot(-1, rs) * 2.0) + f.f_dot(-1, rs) + f.f_dot(0, rs) * sd,
    ])
}

/// `(ψ₁, ψ₂, ψ₃)` and `(ψ̇₁, ψ̇₂, ψ̇₃)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparatedPsi {
    pub psi: [C64; 3],
    pub psi_dot: [C64; 3],
}

fn associated(l: u32, m: i32, angles: &ComplexEulerAngles, dotted: bool) -> Result<C64> {
    let idx = HarmonicIndex::new(HalfInt::from_int(l as i32), HalfInt::from_int(m), HalfInt::ZERO)?;
    let idx = if dotted { idx.dotted() } else { idx };
    Ok(generalized_m(idx, angles))
}

/// The Lorentz factor `f^l_{1,q}(r)·𝔐^q_l` for one `q ∈ {1, 0, −1}`.
/// `𝔐^{±1}` take `(φ, ε, θ, τ, 0, 0)`, `𝔐⁰` takes `(0, 0, θ, τ, 0, 0)`.
/// The dotted factor uses `r*` and the dotted (conjugate) harmonics of
/// degree `l̇`.
pub fn lorentz_factor<F: RadialFunctions + ?Sized>(
    radial: &F,
    q: i32,
    r: C64,
    angles: &ComplexEulerAngles,
    dotted: bool,
) -> Result<C64> {
    if !(-1..=1).contains(&q) {
        return Err(Error::OutOfRange { name: "q", value: f64::from(q) });
    }
    let reduced = if q == 0 {
        ComplexEulerAngles::polar(angles.theta(), angles.tau())?
    } else {
        ComplexEulerAngles::new(angles.phi(), angles.epsilon(), angles.theta(), angles.tau(), 0.0, 0.0)?
    };
    if dotted {
        Ok(radial.f_dot(q, r.conj()) * associated(radial.l_dot(), q, &reduced, true)?)
    } else {
        Ok(radial.f(q, r) * associated(radial.l(), q, &reduced, false)?)
    }
}

pub fn separated_psi<F: RadialFunctions + ?Sized>(radial: &F, r: C64, angles: &ComplexEulerAngles) -> Result<SeparatedPsi> {
    let mut out = SeparatedPsi { psi: [ZERO; 3], psi_dot: [ZERO; 3] };
    for (slot, q) in [1, 0, -1].into_iter().enumerate() {
        out.psi[slot] = lorentz_factor(radial, q, r, angles, false)?;
        out.psi_dot[slot] = lorentz_factor(radial, q, r, angles, true)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonics::z_sum;

    struct Zero;
    impl RadialFunctions for Zero {
        fn l(&self) -> u32 {
            1
        }
        fn l_dot(&self) -> u32 {
            1
        }
        fn f(&self, _: i32, _: C64) -> C64 {
            ZERO
        }
        fn df(&self, _: i32, _: C64) -> C64 {
            ZERO
        }
        fn f_dot(&self, _: i32, _: C64) -> C64 {
            ZERO
        }
        fn df_dot(&self, _: i32, _: C64) -> C64 {
            ZERO
        }
    }

    #[test]
    fn corrected_lambda_is_spin_one() {
        let m = build_matrices(ONE, true).unwrap();
        assert_eq!(m.lambda[2], Matrix::from_real([[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, -1.0]]));
        assert!(m.casimir_defect() < 1e-15);
        assert_eq!(m.commutator_sign(), 1.0);
        assert!(m.commutator_defect(1.0) < 1e-15);
        assert!(m.upsilon_block_antidiagonal());
        for l in &m.lambda {
            assert!(l.is_hermitian(1e-16));
        }
    }

    #[test]
    fn printed_lambda_fails_casimir() {
        let m = build_matrices(ONE, false).unwrap();
        assert!(m.casimir_defect() > 0.1);
        assert!(m.upsilon_block_antidiagonal());
    }

    #[test]
    fn c11_scales_uniformly() {
        let c = C64::new(0.5, 0.25);
        let m = build_matrices(c, true).unwrap();
        assert!(m.casimir_defect() < 1e-15);
        assert!(m.commutator_defect(1.0) < 1e-15);
        assert!(build_matrices(ZERO, true).is_err());
    }

    #[test]
    fn upsilon_blocks() {
        let m = build_matrices(ONE, true).unwrap();
        for i in 0..3 {
            for r in 0..3 {
                for c in 0..3 {
                    assert_eq!(m.upsilon[i].0[r][c + 3], m.lambda[i].0[r][c].conj());
                    assert_eq!(m.upsilon[i + 3].0[r + 3][c], I * m.lambda[i].0[r][c]);
                }
            }
        }
    }

    #[test]
    fn radial_examples() {
        let p = radial_solutions(1, ZERO, ZERO, RadialVariant::AsPrinted).unwrap();
        assert_eq!(p.f(0, ONE), C64::new(2.0, 0.0));
        let p1 = radial_solutions(1, ONE, ONE, RadialVariant::AsPrinted).unwrap();
        assert_eq!(p1.f(1, ZERO), ZERO);
        assert!(radial_solutions(0, ONE, ONE, RadialVariant::AsPrinted).is_err());
        let res = radial_residual(&p, ONE).unwrap();
        assert!((res[0] - C64::new(-2.0, 0.0)).norm() < 1e-15);
        assert_eq!(radial_residual(&Zero, C64::new(0.3, 0.1)).unwrap(), [ZERO; 4]);
        assert!(radial_residual(&p, ZERO).is_err());
    }

    #[test]
    fn corrected_solution_has_zero_residual() {
        for l in 1..=4 {
            let f = radial_solutions(l, C64::new(0.7, -0.2), C64::new(-1.1, 0.4), RadialVariant::Corrected).unwrap();
            for r in [C64::new(0.1, 0.0), C64::new(2.0, 3.0), C64::new(-4.0, 0.5)] {
                for v in radial_residual(&f, r).unwrap() {
                    assert!(v.norm() < 1e-12 * r.norm().max(1.0) * 40.0, "l={l}, r={r}: {v}");
                }
            }
        }
    }

    #[test]
    fn minus_equals_plus() {
        let f = radial_solutions(2, C64::new(0.3, 0.9), ONE, RadialVariant::AsPrinted).unwrap();
        let r = C64::new(1.3, -0.8);
        assert_eq!(f.f(-1, r), f.f(1, r));
        assert_eq!(f.f_dot(-1, r), f.f_dot(1, r));
    }

    #[test]
    fn separated_at_identity() {
        let f = radial_solutions(1, ONE, ONE, RadialVariant::Corrected).unwrap();
        let r = C64::new(1.5, 0.5);
        let s = separated_psi(&f, r, &ComplexEulerAngles::identity()).unwrap();
        assert_eq!(s.psi[0], ZERO);
        assert_eq!(s.psi[2], ZERO);
        assert!((s.psi[1] - f.f(0, r)).norm() < 1e-15);
        assert!((s.psi_dot[1] - f.f_dot(0, r.conj())).norm() < 1e-15);
    }

    #[test]
    fn separated_ratio_is_radius_independent() {
        let f = radial_solutions(2, C64::new(0.4, 0.1), ONE, RadialVariant::Corrected).unwrap();
        let a = ComplexEulerAngles::new(0.8, 0.3, 1.1, 0.4, 2.0, 1.0).unwrap();
        let idx = |m| HarmonicIndex::integer(2, m, 0).unwrap();
        let expected = (C64::new(a.epsilon(), a.phi()) * -2.0).exp() * z_sum(idx(1), 1.1, 0.4).unwrap()
            / z_sum(idx(-1), 1.1, 0.4).unwrap();
        for r in [C64::new(0.5, 0.0), C64::new(3.0, -2.0)] {
            let s = separated_psi(&f, r, &a).unwrap();
            assert!((s.psi[0] / s.psi[2] - expected).norm() < 1e-13 * expected.norm());
        }
    }
}
