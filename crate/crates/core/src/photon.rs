//! The translation factor `ψ(x)`: Dirac-like form of the Maxwell equations
//! for the Riemann–Silberstein pair `(E − iB, E + iB)`, the curl
//! eigenproblem and photon plane waves.
//!
//! Sign facts fixed by the α matrices as given (`(α_j)_{ik} = i ε_{jik}`):
//!
//! * `[α_i, α_j] = −i ε_ijk α_k`, i.e. the global commutator sign is `−1`.
//! * `curl_matrix(k) = −c k·α` acts as `ε ↦ i c k × ε`; `ε₊` carries the
//!   eigenvalue `+c|k|`, `ε₋` carries `−c|k|` and `ε₀` carries `0`.
//! * With `ω = c|k|`, `ε₊ e^{i(k·x−ωt)}` solves ME1, `ε₋ e^{i(k·x−ωt)}`
//!   solves ME2, and `ε₀ e^{ik·x}` solves both.
//! * A solution of ME1 is a field of the form `E + iB` and a solution of
//!   ME2 one of the form `E − iB`. The 6-vector annihilated by the full
//!   operator ME is therefore `(E + iB; E − iB)`, and the field-ordered
//!   column `(E − iB; E + iB)` is `Γ₀` times it.
//!
//! Fields are represented as finite sums of plane-wave modes
//! ([`ModalField`]), so every derivative below is exact.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // std's inherent methods win when std is linked
use num_traits::Float;

use crate::differential::ResidualRecord;
use crate::linalg::{
    block6, conj_vec, cross, dot, hermitian_eigen, inner, norm, real_vec, scale_vec, Matrix, Vector, I, ONE,
    ZERO,
};
use crate::{Error, Result, C64};

/// Default tolerance for exact-derivative residuals.
pub const EXACT_TOL: f64 = 1e-12;

/// `k₁² + k₂² < AXIS_THRESHOLD · |k|²` selects the on-axis polarization limit.
pub const AXIS_THRESHOLD: f64 = 1e-12;

/// The three `α` matrices and the four 6×6 `Γ` matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinMatrices {
    pub alpha: [Matrix<3>; 3],
    pub gamma: [Matrix<6>; 4],
}

impl SpinMatrices {
    pub fn new() -> Self {
        let alpha = [
            Matrix([[ZERO, ZERO, ZERO], [ZERO, ZERO, I], [ZERO, -I, ZERO]]),
            Matrix([[ZERO, ZERO, -I], [ZERO, ZERO, ZERO], [I, ZERO, ZERO]]),
            Matrix([[ZERO, I, ZERO], [-I, ZERO, ZERO], [ZERO, ZERO, ZERO]]),
        ];
        let (zero, id) = (Matrix::<3>::zero(), Matrix::<3>::identity());
        let g = |a: &Matrix<3>| block6(&zero, &(-*a), a, &zero);
        let gamma = [block6(&zero, &id, &id, &zero), g(&alpha[0]), g(&alpha[1]), g(&alpha[2])];
        SpinMatrices { alpha, gamma }
    }

    /// The sign `s` in `[α_i, α_j] = s·i·ε_ijk α_k`, read off from `[α₁, α₂]`.
    pub fn commutator_sign(&self) -> f64 {
        let lhs = self.alpha[0].commutator(&self.alpha[1]);
        let plus = lhs.max_abs_diff(&self.alpha[2].scale(I));
        let minus = lhs.max_abs_diff(&self.alpha[2].scale(-I));
        if plus <= minus {
            1.0
        } else {
            -1.0
        }
    }
}

impl Default for SpinMatrices {
    fn default() -> Self {
        Self::new()
    }
}

/// A real wave vector `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveVector {
    k: [f64; 3],
}

impl WaveVector {
    /// Any finite vector, including `k = 0`.
    pub fn new(k: [f64; 3]) -> Result<Self> {
        for (&v, name) in k.iter().zip(["k1", "k2", "k3"]) {
            if !v.is_finite() {
                return Err(Error::OutOfRange { name, value: v });
            }
        }
        Ok(WaveVector { k })
    }

    /// A finite vector with `|k| > 0`.
    pub fn propagating(k: [f64; 3]) -> Result<Self> {
        let w = Self::new(k)?;
        if w.norm() == 0.0 {
            return Err(Error::DegenerateWaveVector);
        }
        Ok(w)
    }

    pub fn components(&self) -> [f64; 3] {
        self.k
    }

    pub fn norm(&self) -> f64 {
        self.k.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `ω = c|k|`.
    pub fn omega(&self, c: f64) -> f64 {
        c * self.norm()
    }

    fn require_propagating(&self) -> Result<()> {
        if self.norm() == 0.0 {
            Err(Error::DegenerateWaveVector)
        } else {
            Ok(())
        }
    }
}

fn check_c(c: f64) -> Result<()> {
    if c.is_finite() && c > 0.0 {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "c", value: c })
    }
}

/// `−c [[0, ik₃, −ik₂], [−ik₃, 0, ik₁], [ik₂, −ik₁, 0]]`.
pub fn curl_matrix(k: &WaveVector, c: f64) -> Matrix<3> {
    let [k1, k2, k3] = k.k;
    let ik = |v: f64| C64::new(0.0, v);
    Matrix([
        [ZERO, ik(k3), -ik(k2)],
        [-ik(k3), ZERO, ik(k1)],
        [ik(k2), -ik(k1), ZERO],
    ])
    .scale(C64::new(-c, 0.0))
}

/// Eigen-decomposition of [`curl_matrix`]; values in descending order
/// `(+c|k|, 0, −c|k|)`, columns of `vectors` normalized.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenstructure {
    pub values: [f64; 3],
    pub vectors: Matrix<3>,
}

pub fn eigenstructure(k: &WaveVector, c: f64) -> Result<Eigenstructure> {
    k.require_propagating()?;
    check_c(c)?;
    let (values, vectors) = hermitian_eigen(&curl_matrix(k, c));
    Ok(Eigenstructure { values, vectors })
}

/// Photon helicity label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Helicity {
    Plus,
    Zero,
    Minus,
}

impl Helicity {
    pub const ALL: [Helicity; 3] = [Helicity::Plus, Helicity::Zero, Helicity::Minus];

    /// `+1, 0, −1`.
    pub fn sign(self) -> i32 {
        match self {
            Helicity::Plus => 1,
            Helicity::Zero => 0,
            Helicity::Minus => -1,
        }
    }

    pub fn from_sign(sign: i32) -> Option<Self> {
        match sign {
            1 => Some(Helicity::Plus),
            0 => Some(Helicity::Zero),
            -1 => Some(Helicity::Minus),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Helicity::Plus => "+",
            Helicity::Zero => "0",
            Helicity::Minus => "-",
        }
    }

    pub fn is_transverse(self) -> bool {
        self != Helicity::Zero
    }

    /// Eigenvalue of [`curl_matrix`] carried by `ε_λ`.
    pub fn curl_eigenvalue(self, k: &WaveVector, c: f64) -> f64 {
        f64::from(self.sign()) * k.omega(c)
    }
}

/// `ε₊, ε₋, ε₀` for one wave vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationTriple {
    pub eps_plus: Vector<3>,
    pub eps_minus: Vector<3>,
    pub eps_zero: Vector<3>,
}

impl PolarizationTriple {
    pub fn get(&self, helicity: Helicity) -> Vector<3> {
        match helicity {
            Helicity::Plus => self.eps_plus,
            Helicity::Zero => self.eps_zero,
            Helicity::Minus => self.eps_minus,
        }
    }
}

/// The closed-form polarization vectors
///
/// ```text
/// ε± = (2|k|²(k₁²+k₂²))^{-1/2} (−k₁k₃ ± i k₂|k|, −k₂k₃ ∓ i k₁|k|, k₁²+k₂²)
/// ε₀ = k/|k|
/// ```
///
/// On the `k₃` axis the first formula is `0/0`. There the limit along
/// `k₂ = 0, k₁ → 0⁺` is used, `ε± = (−sign k₃, ∓i, 0)/√2`, which keeps
/// `ε±` continuous for either sign of `k₃`.
pub fn polarization_vectors(k: &WaveVector) -> Result<PolarizationTriple> {
    k.require_propagating()?;
    let [k1, k2, k3] = k.k;
    let kn = k.norm();
    let perp = k1 * k1 + k2 * k2;
    let eps_zero = real_vec([k1 / kn, k2 / kn, k3 / kn]);
    let (eps_plus, eps_minus) = if perp < AXIS_THRESHOLD * kn * kn {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let sign = if k3 < 0.0 { -1.0 } else { 1.0 };
        (
            [C64::new(-sign * s, 0.0), C64::new(0.0, -s), ZERO],
            [C64::new(-sign * s, 0.0), C64::new(0.0, s), ZERO],
        )
    } else {
        let n = 1.0 / (2.0 * kn * kn * perp).sqrt();
        let eps = |pm: f64| {
            [
                C64::new(-k1 * k3 * n, pm * k2 * kn * n),
                C64::new(-k2 * k3 * n, -pm * k1 * kn * n),
                C64::new(perp * n, 0.0),
            ]
        };
        (eps(1.0), eps(-1.0))
    };
    Ok(PolarizationTriple { eps_plus, eps_minus, eps_zero })
}

/// `|k·ε_λ|` (bilinear product): `0` for `λ = ±`, `|k|` for `λ = 0`.
pub fn transversality_residual(k: &WaveVector, helicity: Helicity) -> Result<f64> {
    let eps = polarization_vectors(k)?.get(helicity);
    Ok(dot(&real_vec(k.k), &eps).norm())
}

/// `{2(2π)³}^{-1/2}`.
pub fn plane_wave_normalization() -> f64 {
    1.0 / (2.0 * (2.0 * PI).powi(3)).sqrt()
}

/// One plane-wave mode `a·exp[i(q·x − νt)]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode<const N: usize> {
    pub amplitude: Vector<N>,
    pub wave_vector: [f64; 3],
    pub frequency: f64,
}

impl<const N: usize> Mode<N> {
    fn phase(&self, x: &[f64; 3], t: f64) -> C64 {
        let arg: f64 = self.wave_vector.iter().zip(x).map(|(q, xi)| q * xi).sum::<f64>() - self.frequency * t;
        C64::new(0.0, arg).exp()
    }
}

/// A finite superposition of plane-wave modes with exact derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalField<const N: usize> {
    modes: Vec<Mode<N>>,
}

impl<const N: usize> ModalField<N> {
    pub fn new(modes: Vec<Mode<N>>) -> Self {
        ModalField { modes }
    }

    pub fn single(amplitude: Vector<N>, wave_vector: [f64; 3], frequency: f64) -> Self {
        ModalField { modes: vec![Mode { amplitude, wave_vector, frequency }] }
    }

    /// A spacetime-constant field.
    pub fn constant(amplitude: Vector<N>) -> Self {
        Self::single(amplitude, [0.0; 3], 0.0)
    }

    pub fn modes(&self) -> &[Mode<N>] {
        &self.modes
    }

    pub fn value(&self, x: &[f64; 3], t: f64) -> Vector<N> {
        self.sum(x, t, |_| ONE)
    }

    /// `∂ψ/∂t`.
    pub fn time_derivative(&self, x: &[f64; 3], t: f64) -> Vector<N> {
        self.sum(x, t, |m| C64::new(0.0, -m.frequency))
    }

    /// `∂ψ/∂x_j`.
    pub fn partial(&self, j: usize, x: &[f64; 3], t: f64) -> Vector<N> {
        self.sum(x, t, |m| C64::new(0.0, m.wave_vector[j]))
    }

    fn sum(&self, x: &[f64; 3], t: f64, factor: impl Fn(&Mode<N>) -> C64) -> Vector<N> {
        let mut out = [ZERO; N];
        for m in &self.modes {
            let w = m.phase(x, t) * factor(m);
            out.iter_mut().zip(&m.amplitude).for_each(|(o, a)| *o += a * w);
        }
        out
    }

    /// Pointwise complex conjugate: amplitudes conjugated, `q, ν` negated.
    pub fn conj(&self) -> Self {
        ModalField {
            modes: self
                .modes
                .iter()
                .map(|m| Mode {
                    amplitude: conj_vec(&m.amplitude),
                    wave_vector: m.wave_vector.map(|q| -q),
                    frequency: -m.frequency,
                })
                .collect(),
        }
    }

    /// Applies the same linear map to every mode amplitude.
    pub fn map<const M: usize>(&self, f: impl Fn(&Vector<N>) -> Vector<M>) -> ModalField<M> {
        ModalField {
            modes: self
                .modes
                .iter()
                .map(|m| Mode { amplitude: f(&m.amplitude), wave_vector: m.wave_vector, frequency: m.frequency })
                .collect(),
        }
    }

    pub fn superpose(mut self, other: &Self) -> Self {
        self.modes.extend_from_slice(&other.modes);
        self
    }

    /// `a_t ∂_t ψ + Σ_j a_j ∂_j ψ` together with the larger of the norms of
    /// its time and space parts (the residual scale).
    fn first_order(&self, a_t: &Matrix<N>, a_x: &[Matrix<N>; 3], x: &[f64; 3], t: f64) -> (Vector<N>, f64) {
        let time = a_t.apply(&self.time_derivative(x, t));
        let mut space = [ZERO; N];
        for (j, a) in a_x.iter().enumerate() {
            let d = a.apply(&self.partial(j, x, t));
            space.iter_mut().zip(&d).for_each(|(s, v)| *s += v);
        }
        let total: Vector<N> = core::array::from_fn(|i| time[i] + space[i]);
        (total, norm(&time).max(norm(&space)))
    }
}

impl ModalField<3> {
    /// `∇ × F`.
    pub fn curl(&self, x: &[f64; 3], t: f64) -> Vector<3> {
        let mut out = [ZERO; 3];
        for m in &self.modes {
            let ik = m.wave_vector.map(|q| C64::new(0.0, q));
            let c = cross(&ik, &m.amplitude);
            let w = m.phase(x, t);
            out.iter_mut().zip(&c).for_each(|(o, v)| *o += v * w);
        }
        out
    }

    /// `∇·F`.
    pub fn divergence(&self, x: &[f64; 3], t: f64) -> C64 {
        self.modes
            .iter()
            .map(|m| dot(&m.wave_vector.map(|q| C64::new(0.0, q)), &m.amplitude) * m.phase(x, t))
            .sum()
    }
}

impl ModalField<6> {
    pub fn upper(&self) -> ModalField<3> {
        self.map(|a| [a[0], a[1], a[2]])
    }

    pub fn lower(&self) -> ModalField<3> {
        self.map(|a| [a[3], a[4], a[5]])
    }

    pub fn from_blocks(upper: &ModalField<3>, lower: &ModalField<3>) -> Self {
        let up = upper.map(|a| [a[0], a[1], a[2], ZERO, ZERO, ZERO]);
        let low = lower.map(|a| [ZERO, ZERO, ZERO, a[0], a[1], a[2]]);
        up.superpose(&low)
    }

    /// `Γ₀ ψ`, i.e. the two 3-blocks swapped.
    pub fn swap_blocks(&self) -> Self {
        self.map(|a| [a[3], a[4], a[5], a[0], a[1], a[2]])
    }
}

/// The two 3-component Dirac-like equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiracEquation {
    /// `(i/c)∂_t ψ − i α·∇ψ = 0`.
    Me1,
    /// `(i/c)∂_t ψ + i α·∇ψ = 0`.
    Me2,
}

impl DiracEquation {
    pub fn name(self) -> &'static str {
        match self {
            DiracEquation::Me1 => "me1",
            DiracEquation::Me2 => "me2",
        }
    }
}

fn residual_record(name: &str, v: &[C64], scale: f64) -> ResidualRecord {
    let r = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    ResidualRecord::new(name, r, scale, EXACT_TOL)
}

fn with_spacetime(rec: ResidualRecord, x: &[f64; 3], t: f64) -> ResidualRecord {
    rec.with_point("x1", x[0]).with_point("x2", x[1]).with_point("x3", x[2]).with_point("t", t)
}

/// Residual of ME1 or ME2 (with `ħ = 1`) for a 3-component field.
pub fn dirac_form_residual(psi: &ModalField<3>, eq: DiracEquation, x: &[f64; 3], t: f64, c: f64) -> Result<ResidualRecord> {
    check_c(c)?;
    let s = SpinMatrices::new();
    let sign = match eq {
        DiracEquation::Me1 => -1.0,
        DiracEquation::Me2 => 1.0,
    };
    let a_t = Matrix::<3>::identity().scale(C64::new(0.0, 1.0 / c));
    let a_x = s.alpha.map(|a| a.scale(C64::new(0.0, sign)));
    let (v, scale) = psi.first_order(&a_t, &a_x, x, t);
    Ok(with_spacetime(residual_record(eq.name(), &v, scale), x, t))
}

/// Residual of the full 6×6 equation
/// `[(i/c)∂_t Γ₀ − i Σ_j ∂_j Γ_j] ψ = 0`. Its lower row is ME1 on the
/// upper block, its upper row ME2 on the lower block.
pub fn me6_residual(psi: &ModalField<6>, x: &[f64; 3], t: f64, c: f64) -> Result<ResidualRecord> {
    check_c(c)?;
    let s = SpinMatrices::new();
    let a_t = s.gamma[0].scale(C64::new(0.0, 1.0 / c));
    let a_x = [1, 2, 3].map(|j| s.gamma[j].scale(-I));
    let (v, scale) = psi.first_order(&a_t, &a_x, x, t);
    Ok(with_spacetime(residual_record("me6", &v, scale), x, t))
}

/// `Dψ = (1/c) Γ₀ ∂_t ψ − Σ_j Γ_j ∂_j ψ`, the operator of the first-order
/// equation `Γ_μ ∂_μ ψ = 0` (the 6×6 equation above is `i·D`).
fn translation_operator(psi: &ModalField<6>, x: &[f64; 3], t: f64, c: f64, transpose: bool) -> (Vector<6>, f64) {
    let s = SpinMatrices::new();
    let g = |m: Matrix<6>| if transpose { m.transpose() } else { m };
    let a_t = g(s.gamma[0]).scale(C64::new(1.0 / c, 0.0));
    let a_x = [1, 2, 3].map(|j| g(s.gamma[j]).scale(-ONE));
    psi.first_order(&a_t, &a_x, x, t)
}

/// Residual of the conjugate equation `Γᵀ_μ ∂_μ ψ̄ = 0`, where the column
/// `ψ̄ᵀ = Γ₀ᵀ ψ*` is built from `ψ`.
pub fn anti_residual(psi: &ModalField<6>, x: &[f64; 3], t: f64, c: f64) -> Result<ResidualRecord> {
    check_c(c)?;
    let gamma0 = SpinMatrices::new().gamma[0].transpose();
    let bar = psi.conj().map(|a| gamma0.apply(a));
    let (v, scale) = translation_operator(&bar, x, t, c, true);
    Ok(with_spacetime(residual_record("anti", &v, scale), x, t))
}

/// `L = −½ (ψ̄ Γ_μ ∂_μψ − ∂_μψ̄ Γ_μ ψ)` with `ψ̄ = ψ†Γ₀`, evaluated with
/// exact derivatives. Since `∂_μψ̄ Γ_μ ψ = (Dψ)† Γ₀ ψ`, it vanishes wherever
/// `Dψ = 0`.
pub fn lagrangian_density_translation(psi: &ModalField<6>, x: &[f64; 3], t: f64, c: f64) -> Result<C64> {
    check_c(c)?;
    let gamma0 = SpinMatrices::new().gamma[0];
    let value = psi.value(x, t);
    let (d, _) = translation_operator(psi, x, t, c, false);
    let g0_value = gamma0.apply(&value);
    // ψ̄ Dψ = ψ† Γ₀ Dψ and (Dψ)† Γ₀ ψ.
    let first = inner(&g0_value, &d);
    let second = inner(&d, &g0_value);
    Ok((first - second) * -0.5)
}

/// `E` and `B` read from a 6-component value by `upper = E − iB`,
/// `lower = E + iB`. Components are complex so arbitrary 6-vectors are
/// accepted; for physical fields they are real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldPair {
    pub e: Vector<3>,
    pub b: Vector<3>,
}

impl FieldPair {
    pub fn from_real(e: [f64; 3], b: [f64; 3]) -> Self {
        FieldPair { e: real_vec(e), b: real_vec(b) }
    }

    pub fn from_six(psi: &Vector<6>) -> Self {
        let u = [psi[0], psi[1], psi[2]];
        let v = [psi[3], psi[4], psi[5]];
        FieldPair {
            e: core::array::from_fn(|i| (u[i] + v[i]) * 0.5),
            b: core::array::from_fn(|i| (v[i] - u[i]) / C64::new(0.0, 2.0)),
        }
    }

    /// `(E − iB; E + iB)`.
    pub fn to_six(&self) -> Vector<6> {
        let (e, b) = (self.e, self.b);
        [
            e[0] - I * b[0],
            e[1] - I * b[1],
            e[2] - I * b[2],
            e[0] + I * b[0],
            e[1] + I * b[1],
            e[2] + I * b[2],
        ]
    }

    /// Largest imaginary part among the six components.
    pub fn imaginary_defect(&self) -> f64 {
        self.e.iter().chain(&self.b).map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// `2(E² + B²)` with Hermitian squares.
    pub fn energy_density(&self) -> f64 {
        2.0 * (norm(&self.e).powi(2) + norm(&self.b).powi(2))
    }
}

/// `ψ̄ Γ₀ ψ = ψ† Γ₀ Γ₀ ψ` (real up to rounding; the real part is returned).
pub fn energy_density(psi: &Vector<6>) -> f64 {
    let gamma0 = SpinMatrices::new().gamma[0];
    let bar_row = gamma0.apply(psi);
    inner(&bar_row, &gamma0.apply(psi)).re
}

/// Residuals of the four classical Maxwell equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxwellResiduals {
    /// `|∇×E + (1/c)∂_t B|`
    pub faraday: f64,
    /// `|∇×B − (1/c)∂_t E|`
    pub ampere: f64,
    /// `|∇·E|`
    pub gauss_e: f64,
    /// `|∇·B|`
    pub gauss_b: f64,
    /// Largest single term, for relative comparisons.
    pub scale: f64,
}

impl MaxwellResiduals {
    pub fn max(&self) -> f64 {
        self.faraday.max(self.ampere).max(self.gauss_e).max(self.gauss_b)
    }

    /// `√(|∇·E|² + |∇·B|²) = |∇·(E − iB)|` for real fields.
    pub fn divergence(&self) -> f64 {
        self.gauss_e.hypot(self.gauss_b)
    }
}

/// Maxwell residuals of the fields read from a field-ordered 6-component
/// field `(E − iB; E + iB)` via [`FieldPair`].
pub fn maxwell_residuals(psi: &ModalField<6>, x: &[f64; 3], t: f64, c: f64) -> Result<MaxwellResiduals> {
    check_c(c)?;
    let e = psi.map(|a| FieldPair::from_six(a).e);
    let b = psi.map(|a| FieldPair::from_six(a).b);
    let (curl_e, curl_b) = (e.curl(x, t), b.curl(x, t));
    let dt_e = scale_vec(&e.time_derivative(x, t), C64::new(1.0 / c, 0.0));
    let dt_b = scale_vec(&b.time_derivative(x, t), C64::new(1.0 / c, 0.0));
    let add = |a: &Vector<3>, b: &Vector<3>, s: f64| -> f64 {
        norm(&core::array::from_fn::<C64, 3, _>(|i| a[i] + b[i] * s))
    };
    let scale = [norm(&curl_e), norm(&curl_b), norm(&dt_e), norm(&dt_b)].into_iter().fold(0.0, f64::max);
    Ok(MaxwellResiduals {
        faraday: add(&curl_e, &dt_b, 1.0),
        ampere: add(&curl_b, &dt_e, -1.0),
        gauss_e: e.divergence(x, t).norm(),
        gauss_b: b.divergence(x, t).norm(),
        scale,
    })
}

/// A normalized photon plane wave of fixed wave vector and helicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonPlaneWave {
    k: WaveVector,
    helicity: Helicity,
    c: f64,
    eps: Vector<3>,
}

impl PhotonPlaneWave {
    pub fn new(k: WaveVector, helicity: Helicity, c: f64) -> Result<Self> {
        check_c(c)?;
        let eps = polarization_vectors(&k)?.get(helicity);
        Ok(PhotonPlaneWave { k, helicity, c, eps })
    }

    pub fn wave_vector(&self) -> WaveVector {
        self.k
    }

    pub fn helicity(&self) -> Helicity {
        self.helicity
    }

    pub fn speed_of_light(&self) -> f64 {
        self.c
    }

    pub fn polarization(&self) -> Vector<3> {
        self.eps
    }

    /// `c|k|` for transverse modes, `0` for the longitudinal one (whose
    /// wave carries no time dependence).
    pub fn omega(&self) -> f64 {
        if self.helicity.is_transverse() {
            self.k.omega(self.c)
        } else {
            0.0
        }
    }

    /// `N ε_λ e^{i(k·x − ωt)}`, the 3-component wave. Solves ME1 for
    /// `λ = +`, ME2 for `λ = −`, both for `λ = 0`.
    pub fn translation_field(&self) -> ModalField<3> {
        let amp = scale_vec(&self.eps, C64::new(plane_wave_normalization(), 0.0));
        ModalField::single(amp, self.k.k, self.omega())
    }

    /// The column as displayed, `N (ε_λ; ε_λ) e^{i(k·x − ωt)}`.
    pub fn displayed_field(&self) -> ModalField<6> {
        let w = self.translation_field();
        ModalField::from_blocks(&w, &w)
    }

    /// `N (ε_λ; ε_λ) e^{i(k·x − ωt)}` at one spacetime point.
    pub fn value(&self, x: &[f64; 3], t: f64) -> Vector<6> {
        self.displayed_field().value(x, t)
    }

    /// The 6-vector annihilated by the full 6×6 equation: the ME1 solution
    /// on top and its conjugate (an ME2 solution) below.
    pub fn dirac_solution(&self) -> ModalField<6> {
        let w = self.translation_field();
        match self.helicity {
            Helicity::Plus | Helicity::Zero => ModalField::from_blocks(&w, &w.conj()),
            Helicity::Minus => ModalField::from_blocks(&w.conj(), &w),
        }
    }

    /// The real field `(E − iB; E + iB)` carried by the wave; equal to
    /// `Γ₀` applied to [`Self::dirac_solution`].
    pub fn physical_field(&self) -> ModalField<6> {
        self.dirac_solution().swap_blocks()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(k: [f64; 3]) -> WaveVector {
        WaveVector::propagating(k).unwrap()
    }

    #[test]
    fn alpha_and_gamma_structure() {
        let s = SpinMatrices::new();
        for a in &s.alpha {
            assert!(a.is_hermitian(0.0));
        }
        assert_eq!(s.commutator_sign(), -1.0);
        let sq = s.gamma[0] * s.gamma[0];
        assert_eq!(sq, Matrix::identity());
    }

    #[test]
    fn curl_matrix_examples() {
        assert_eq!(curl_matrix(&WaveVector::new([0.0; 3]).unwrap(), 1.0), Matrix::zero());
        let m = curl_matrix(&wv([0.0, 0.0, 1.0]), 1.0);
        let expected = Matrix([[ZERO, I, ZERO], [-I, ZERO, ZERO], [ZERO; 3]]).scale(-ONE);
        assert_eq!(m, expected);
        let k = wv([0.3, -1.2, 2.0]);
        let s = SpinMatrices::new();
        let sum = (s.alpha[0].scale(C64::new(0.3, 0.0)) + s.alpha[1].scale(C64::new(-1.2, 0.0)) + s.alpha[2].scale(C64::new(2.0, 0.0)))
            .scale(C64::new(-2.5, 0.0));
        assert!(curl_matrix(&k, 2.5).max_abs_diff(&sum) < 1e-15);
    }

    #[test]
    fn eigenvalues_examples() {
        let e = eigenstructure(&wv([0.0, 0.0, 1.0]), 1.0).unwrap();
        for (v, want) in e.values.iter().zip([1.0, 0.0, -1.0]) {
            assert!((v - want).abs() < 1e-12);
        }
        let e = eigenstructure(&wv([3.0, 4.0, 0.0]), 1.0).unwrap();
        for (v, want) in e.values.iter().zip([5.0, 0.0, -5.0]) {
            assert!((v - want).abs() < 1e-12);
        }
        assert_eq!(eigenstructure(&WaveVector::new([0.0; 3]).unwrap(), 1.0), Err(Error::DegenerateWaveVector));
    }

    #[test]
    fn polarization_examples() {
        let p = polarization_vectors(&wv([0.0, 0.0, 1.0])).unwrap();
        assert_eq!(p.eps_zero, real_vec([0.0, 0.0, 1.0]));
        let s = core::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(p.eps_plus, [C64::new(-s, 0.0), C64::new(0.0, -s), ZERO]);
        assert_eq!(p.eps_minus, [C64::new(-s, 0.0), C64::new(0.0, s), ZERO]);
        let k = wv([1.0, 1.0, 1.0]);
        let p = polarization_vectors(&k).unwrap();
        for h in Helicity::ALL {
            assert!((norm(&p.get(h)) - 1.0).abs() < 1e-15);
        }
        assert!(inner(&p.eps_plus, &p.eps_minus).norm() < 1e-15);
        assert!(transversality_residual(&k, Helicity::Plus).unwrap() < 1e-15);
        assert_eq!(transversality_residual(&wv([0.0, 0.0, 2.0]), Helicity::Zero).unwrap(), 2.0);
        assert!(transversality_residual(&wv([1.0, 2.0, 3.0]), Helicity::Minus).unwrap() < 1e-12);
    }

    #[test]
    fn axis_limit_is_continuous_for_both_signs() {
        for k3 in [1.0, -1.0, 0.4] {
            let on = polarization_vectors(&wv([0.0, 0.0, k3])).unwrap();
            let near = polarization_vectors(&wv([2e-6, 0.0, k3])).unwrap();
            for h in Helicity::ALL {
                let d = norm(&core::array::from_fn::<C64, 3, _>(|i| on.get(h)[i] - near.get(h)[i]));
                assert!(d < 1e-5, "k3 = {k3}, {h:?}: {d}");
            }
        }
    }

    #[test]
    fn plane_wave_examples() {
        let w = PhotonPlaneWave::new(wv([0.2, 0.1, 1.0]), Helicity::Zero, 1.0).unwrap();
        let x = [0.3, 0.2, -0.5];
        assert_eq!(w.value(&x, 0.0), w.value(&x, 17.0));
        let w = PhotonPlaneWave::new(wv([0.2, 0.1, 1.0]), Helicity::Plus, 1.0).unwrap();
        let v0 = w.value(&[0.0; 3], 0.0);
        let n = plane_wave_normalization();
        for i in 0..3 {
            assert_eq!(v0[i], w.polarization()[i] * n);
            assert_eq!(v0[i + 3], w.polarization()[i] * n);
        }
        let (a, b) = (w.value(&x, 0.4), w.value(&x, 0.9));
        let step = C64::new(0.0, -w.omega() * 0.5).exp();
        assert!((a[1] * step - b[1]).norm() < 1e-15);
    }

    #[test]
    fn helicities_solve_their_equations() {
        let k = wv([0.7, -0.4, 1.3]);
        let x = [0.1, 0.5, -0.2];
        let plus = PhotonPlaneWave::new(k, Helicity::Plus, 1.0).unwrap().translation_field();
        let minus = PhotonPlaneWave::new(k, Helicity::Minus, 1.0).unwrap().translation_field();
        let zero = PhotonPlaneWave::new(k, Helicity::Zero, 1.0).unwrap().translation_field();
        assert!(dirac_form_residual(&plus, DiracEquation::Me1, &x, 0.3, 1.0).unwrap().residual < 1e-15);
        assert!(dirac_form_residual(&plus, DiracEquation::Me2, &x, 0.3, 1.0).unwrap().residual > 0.01);
        assert!(dirac_form_residual(&minus, DiracEquation::Me2, &x, 0.3, 1.0).unwrap().residual < 1e-15);
        for eq in [DiracEquation::Me1, DiracEquation::Me2] {
            assert!(dirac_form_residual(&zero, eq, &x, 0.3, 1.0).unwrap().residual < 1e-15);
        }
        // ψ solves ME1 ⇒ ψ* solves ME2
        assert!(dirac_form_residual(&plus.conj(), DiracEquation::Me2, &x, 0.3, 1.0).unwrap().residual < 1e-15);
    }

    #[test]
    fn six_component_forms() {
        let k = wv([0.7, -0.4, 1.3]);
        let x = [0.1, 0.5, -0.2];
        for h in Helicity::ALL {
            let w = PhotonPlaneWave::new(k, h, 2.0).unwrap();
            let sol = w.dirac_solution();
            assert!(me6_residual(&sol, &x, 0.4, 2.0).unwrap().passed);
            assert!(anti_residual(&sol, &x, 0.4, 2.0).unwrap().passed);
            assert!(lagrangian_density_translation(&sol, &x, 0.4, 2.0).unwrap().norm() < 1e-15);
            if h.is_transverse() {
                // The displayed (ε; ε) column is not annihilated.
                assert!(!me6_residual(&w.displayed_field(), &x, 0.4, 2.0).unwrap().passed);
                let m = maxwell_residuals(&w.physical_field(), &x, 0.4, 2.0).unwrap();
                assert!(m.max() < 1e-15, "{m:?}");
            }
        }
    }

    #[test]
    fn longitudinal_mode_violates_gauss() {
        let k = wv([0.0, 0.0, 2.0]);
        let w = PhotonPlaneWave::new(k, Helicity::Zero, 1.0).unwrap();
        let m = maxwell_residuals(&w.physical_field(), &[0.3, 0.1, 0.2], 0.0, 1.0).unwrap();
        let expected = 2.0 * plane_wave_normalization();
        assert!((m.divergence() - expected).abs() < 1e-15);
    }

    #[test]
    fn static_uniform_fields_solve_maxwell() {
        let f = FieldPair::from_real([1.0, -2.0, 0.5], [0.3, 0.0, 4.0]);
        let m = maxwell_residuals(&ModalField::constant(f.to_six()), &[1.0, 2.0, 3.0], 5.0, 1.0).unwrap();
        assert_eq!(m.max(), 0.0);
    }

    #[test]
    fn field_pair_round_trip_and_energy() {
        let f = FieldPair::from_real([1.0, 0.0, 0.0], [0.0; 3]);
        assert_eq!(energy_density(&f.to_six()), 2.0);
        assert_eq!(f.energy_density(), 2.0);
        assert_eq!(energy_density(&[ZERO; 6]), 0.0);
        let f = FieldPair::from_real([0.3, -1.1, 2.0], [0.5, 0.25, -0.7]);
        let back = FieldPair::from_six(&f.to_six());
        for i in 0..3 {
            assert!((back.e[i] - f.e[i]).norm() < 1e-15 && (back.b[i] - f.b[i]).norm() < 1e-15);
        }
        assert_eq!(back.imaginary_defect(), 0.0);
    }

    #[test]
    fn constant_field_has_zero_lagrangian() {
        let psi = ModalField::constant([ONE, I, ZERO, C64::new(0.5, 0.2), ZERO, -ONE]);
        assert_eq!(lagrangian_density_translation(&psi, &[0.0; 3], 0.0, 1.0).unwrap(), ZERO);
    }

    #[test]
    fn invalid_inputs() {
        assert!(WaveVector::new([f64::NAN, 0.0, 0.0]).is_err());
        assert_eq!(WaveVector::propagating([0.0; 3]), Err(Error::DegenerateWaveVector));
        assert!(PhotonPlaneWave::new(wv([1.0, 0.0, 0.0]), Helicity::Plus, 0.0).is_err());
    }
}
