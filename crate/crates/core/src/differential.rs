//! Finite-difference checks that computed matrix elements solve the
//! Casimir eigen-equations and the complex Legendre equation.
//!
//! Derivatives with respect to a complex angle `wᶜ = a − i b` are formed
//! from real-direction central differences through the Wirtinger
//! combinations that hold for holomorphic functions:
//!
//! ```text
//! ∂_w   = ½ (∂_a + i ∂_b)
//! ∂²_w  = ¼ (∂_aa + 2i ∂_ab − ∂_bb)
//! ```
//!
//! (signs of `i` flip for the dotted angles `a + i b`), or, by default, from
//! the real direction alone, since `∂_w f = ∂_a f` for holomorphic `f`. The
//! Wirtinger combination cancels the `O(h²)` truncation terms exactly, so
//! its residual falls off as `h⁴`; the real-direction form is a plain
//! second-order scheme. Either way the residual of the whole differential
//! expression is then Richardson-extrapolated in the step size.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // std's inherent methods win when std is linked
use num_traits::Float;

use crate::harmonics::{generalized_m_raw, z_at, HarmonicIndex};
use crate::kinematics::ComplexEulerAngles;
use crate::{Error, Result, C64};

pub const CASIMIR_TOL: f64 = 1e-6;
pub const LEGENDRE_TOL: f64 = 1e-6;
pub const HOLOMORPHY_TOL: f64 = 1e-6;

/// Exclusion zone around `θ = 0, π` for the Casimir check.
pub const THETA_EXCLUSION: f64 = 0.1;
/// Exclusion zone `|1 − z²|` for the Legendre check.
pub const LEGENDRE_EXCLUSION: f64 = 1e-3;

/// How derivatives in a complex angle are assembled from real differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivativeForm {
    /// Differences along the real part of the angle only.
    #[default]
    RealDirection,
    /// Wirtinger average over the real and imaginary directions.
    Wirtinger,
}

/// Central-difference step plus the number of Richardson levels
/// (`1` means plain central differences).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FDScheme {
    step: f64,
    richardson_levels: usize,
    form: DerivativeForm,
}

impl FDScheme {
    pub fn new(step: f64, richardson_levels: usize) -> Result<Self> {
        if !(1e-6..=1e-1).contains(&step) {
            return Err(Error::OutOfRange { name: "step", value: step });
        }
        if !(1..=4).contains(&richardson_levels) {
            return Err(Error::OutOfRange { name: "richardson_levels", value: richardson_levels as f64 });
        }
        Ok(FDScheme { step, richardson_levels, form: DerivativeForm::RealDirection })
    }

    pub fn with_form(self, form: DerivativeForm) -> Self {
        FDScheme { form, ..self }
    }

    pub fn form(&self) -> DerivativeForm {
        self.form
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn richardson_levels(&self) -> usize {
        self.richardson_levels
    }

    /// Richardson table for an `O(h²)` expansion, evaluated at `h, h/2, …`.
    pub fn extrapolate(&self, f: impl Fn(f64) -> C64) -> C64 {
        let n = self.richardson_levels;
        let mut table = [[C64::new(0.0, 0.0); 4]; 4];
        for i in 0..n {
            table[i][0] = f(self.step / f64::from(1u32 << i));
            let mut factor = 1.0;
            for j in 1..=i {
                factor *= 4.0;
                table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
            }
        }
        table[n - 1][n - 1]
    }
}

impl Default for FDScheme {
    fn default() -> Self {
        FDScheme { step: 1e-3, richardson_levels: 2, form: DerivativeForm::RealDirection }
    }
}

/// One named residual measurement.
///
/// `passed` is always `residual ≤ tolerance · max(1, scale)` (and false for
/// non-finite residuals). `flagged` marks checks that only report: a
/// flagged failure does not fail a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualRecord {
    pub name: String,
    pub indices: Vec<(String, f64)>,
    pub point: Vec<(String, f64)>,
    pub residual: f64,
    pub scale: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub flagged: bool,
}

impl ResidualRecord {
    pub fn new(name: impl Into<String>, residual: f64, scale: f64, tolerance: f64) -> Self {
        let mut r = ResidualRecord {
            name: name.into(),
            indices: Vec::new(),
            point: Vec::new(),
            residual,
            scale,
            tolerance,
            passed: false,
            flagged: false,
        };
        r.reevaluate();
        r
    }

    /// A negative control: passes when `measured ≥ threshold`. Stored as
    /// residual `max(0, threshold − measured)` with zero tolerance.
    pub fn at_least(name: impl Into<String>, measured: f64, threshold: f64) -> Self {
        let shortfall = if measured.is_finite() { (threshold - measured).max(0.0) } else { f64::INFINITY };
        Self::new(name, shortfall, 0.0, 0.0)
    }

    pub fn with_index(mut self, key: &str, value: f64) -> Self {
        self.indices.push((key.to_string(), value));
        self
    }

    pub fn with_point(mut self, key: &str, value: f64) -> Self {
        self.point.push((key.to_string(), value));
        self
    }

    pub fn with_harmonic_index(self, idx: &HarmonicIndex) -> Self {
        self.with_index("l", idx.l().to_f64())
            .with_index("m", idx.m().to_f64())
            .with_index("n", idx.n().to_f64())
    }

    pub fn with_angles(self, angles: &ComplexEulerAngles) -> Self {
        let [phi, epsilon, theta, tau, chi, vareps] = angles.to_array();
        self.with_point("phi", phi)
            .with_point("epsilon", epsilon)
            .with_point("theta", theta)
            .with_point("tau", tau)
            .with_point("chi", chi)
            .with_point("vareps", vareps)
    }

    pub fn flagged(mut self) -> Self {
        self.flagged = true;
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.reevaluate();
        self
    }

    fn reevaluate(&mut self) {
        self.passed = self.residual.is_finite() && self.residual <= self.tolerance * self.scale.max(1.0);
    }
}

// Parameter slots in [φ, ε, θ, τ, χ, vareps].
const PHI: usize = 0;
const EPS: usize = 1;
const THETA: usize = 2;
const TAU: usize = 3;
const CHI: usize = 4;
const VAREPS: usize = 5;

struct Stencil<'a> {
    f: &'a dyn Fn(&[f64; 6]) -> C64,
    p: [f64; 6],
    h: f64,
    form: DerivativeForm,
}

impl Stencil<'_> {
    fn at(&self, shifts: &[(usize, f64)]) -> C64 {
        let mut q = self.p;
        for &(i, s) in shifts {
            q[i] += s * self.h;
        }
        (self.f)(&q)
    }

    fn d1(&self, i: usize) -> C64 {
        (self.at(&[(i, 1.0)]) - self.at(&[(i, -1.0)])) / (2.0 * self.h)
    }

    fn d2(&self, i: usize) -> C64 {
        (self.at(&[(i, 1.0)]) - self.at(&[]) * 2.0 + self.at(&[(i, -1.0)])) / (self.h * self.h)
    }

    fn d11(&self, i: usize, j: usize) -> C64 {
        (self.at(&[(i, 1.0), (j, 1.0)]) - self.at(&[(i, 1.0), (j, -1.0)]) - self.at(&[(i, -1.0), (j, 1.0)])
            + self.at(&[(i, -1.0), (j, -1.0)]))
            / (4.0 * self.h * self.h)
    }

    /// `∂/∂wᶜ` for the complex angle whose real part is slot `a` and whose
    /// imaginary part is `−sign·(slot b)`.
    fn dw(&self, a: usize, b: usize, sign: f64) -> C64 {
        if self.form == DerivativeForm::RealDirection {
            return self.d1(a);
        }
        (self.d1(a) + C64::new(0.0, sign) * self.d1(b)) * 0.5
    }

    fn dww(&self, a: usize, b: usize, sign: f64) -> C64 {
        if self.form == DerivativeForm::RealDirection {
            return self.d2(a);
        }
        (self.d2(a) + C64::new(0.0, 2.0 * sign) * self.d11(a, b) - self.d2(b)) * 0.25
    }

    fn dw1w2(&self, (a1, b1): (usize, usize), (a2, b2): (usize, usize), sign: f64) -> C64 {
        if self.form == DerivativeForm::RealDirection {
            return self.d11(a1, a2);
        }
        let i = C64::new(0.0, sign);
        (self.d11(a1, a2) + i * self.d11(a1, b2) + i * self.d11(b1, a2) - self.d11(b1, b2)) * 0.25
    }
}

fn check_casimir_domain(theta: f64) -> Result<()> {
    if theta.abs() <= THETA_EXCLUSION || (theta - PI).abs() <= THETA_EXCLUSION {
        return Err(Error::SingularPoint { what: "theta", value: theta });
    }
    Ok(())
}

/// `(X² + l(l+1))𝔐` at step `h`, plus the largest term magnitude.
fn casimir_expression(idx: HarmonicIndex, p: [f64; 6], h: f64, form: DerivativeForm) -> (C64, f64) {
    let f = move |q: &[f64; 6]| generalized_m_raw(idx, q);
    let st = Stencil { f: &f, p, h, form };
    // Undotted angles are a − i b, dotted ones a + i b.
    let sign = if idx.is_dotted() { -1.0 } else { 1.0 };
    let w = C64::new(p[THETA], -sign * p[TAU]);
    let (sin_w, cos_w) = (w.sin(), w.cos());
    let sin2 = sin_w * sin_w;

    let f0 = st.at(&[]);
    let f_ww = st.dww(THETA, TAU, sign);
    let f_w = st.dw(THETA, TAU, sign);
    let f_pp = st.dww(PHI, EPS, sign);
    let f_cc = st.dww(CHI, VAREPS, sign);
    let f_pc = st.dw1w2((PHI, EPS), (CHI, VAREPS), sign);

    let terms = [
        f_ww,
        cos_w / sin_w * f_w,
        f_pp / sin2,
        -(cos_w * f_pc * 2.0) / sin2,
        f_cc / sin2,
        f0 * idx.casimir_eigenvalue(),
    ];
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    (terms.iter().sum(), scale)
}

fn casimir_record(name: &str, idx: HarmonicIndex, angles: &ComplexEulerAngles, scheme: &FDScheme) -> Result<ResidualRecord> {
    check_casimir_domain(angles.theta())?;
    let p = angles.to_array();
    let value = scheme.extrapolate(|h| casimir_expression(idx, p, h, scheme.form()).0);
    let (_, scale) = casimir_expression(idx, p, scheme.step(), scheme.form());
    Ok(ResidualRecord::new(name, value.norm(), scale, CASIMIR_TOL)
        .with_harmonic_index(&idx)
        .with_angles(angles))
}

/// Residual of `[X² + l(l+1)]𝔐^l_mn` for the undotted series.
pub fn casimir_x2_residual(idx: HarmonicIndex, angles: &ComplexEulerAngles, scheme: &FDScheme) -> Result<ResidualRecord> {
    casimir_record("casimir.x2", idx.undotted(), angles, scheme)
}

/// Residual of `[Y² + l̇(l̇+1)]𝔐^l̇_ṁṅ` for the dotted series, differentiating
/// in the dotted angles.
pub fn casimir_y2_residual(idx: HarmonicIndex, angles: &ComplexEulerAngles, scheme: &FDScheme) -> Result<ResidualRecord> {
    casimir_record("casimir.y2", idx.dotted(), angles, scheme)
}

/// `log₂(r(h)/r(h/2))` of the unextrapolated Casimir residual magnitude,
/// with `h = scheme.step()`.
pub fn casimir_convergence_order(idx: HarmonicIndex, angles: &ComplexEulerAngles, scheme: &FDScheme) -> Result<f64> {
    check_casimir_domain(angles.theta())?;
    let p = angles.to_array();
    let (step, form) = (scheme.step(), scheme.form());
    let coarse = casimir_expression(idx, p, step, form).0.norm();
    let fine = casimir_expression(idx, p, step / 2.0, form).0.norm();
    Ok((coarse / fine).log2())
}

fn legendre_expression(idx: HarmonicIndex, theta: f64, tau: f64, h: f64) -> (C64, f64) {
    let sign = if idx.is_dotted() { -1.0 } else { 1.0 };
    // Z as a function of the real angle; its θ-derivatives are the complex
    // derivatives in the (possibly dotted) angle.
    let zf = |th: f64| z_at(idx, C64::new(th, -tau));
    let w = C64::new(theta, -sign * tau);
    let (s, c) = (w.sin(), w.cos());
    let z0 = zf(theta);
    let (zp, zm) = (zf(theta + h), zf(theta - h));
    let z_w = (zp - zm) / (2.0 * h);
    let z_ww = (zp - z0 * 2.0 + zm) / (h * h);

    let z = c;
    let one_minus = C64::new(1.0, 0.0) - z * z;
    let d_z = -z_w / s;
    let d_zz = (z_ww - c / s * z_w) / (s * s);
    let (m, n) = (idx.m().to_f64(), idx.n().to_f64());
    let terms = [
        one_minus * d_zz,
        -(z * d_z) * 2.0,
        -(C64::new(m * m + n * n, 0.0) - z * (2.0 * m * n)) / one_minus * z0,
        z0 * idx.casimir_eigenvalue(),
    ];
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    (terms.iter().sum(), scale)
}

/// Residual of the complex Legendre equation in `z = cos θᶜ`.
pub fn legendre_residual(idx: HarmonicIndex, theta: f64, tau: f64, scheme: &FDScheme) -> Result<ResidualRecord> {
    let sign = if idx.is_dotted() { -1.0 } else { 1.0 };
    let z = C64::new(theta, -sign * tau).cos();
    let gap = (C64::new(1.0, 0.0) - z * z).norm();
    if gap <= LEGENDRE_EXCLUSION || !gap.is_finite() {
        return Err(Error::SingularPoint { what: "1 - z^2", value: gap });
    }
    let value = scheme.extrapolate(|h| legendre_expression(idx, theta, tau, h).0);
    let (_, scale) = legendre_expression(idx, theta, tau, scheme.step());
    Ok(ResidualRecord::new("legendre", value.norm(), scale, LEGENDRE_TOL)
        .with_harmonic_index(&idx)
        .with_point("theta", theta)
        .with_point("tau", tau))
}

/// `log₂(r(h)/r(h/2))` for the unextrapolated Legendre residual.
pub fn legendre_convergence_order(idx: HarmonicIndex, theta: f64, tau: f64, step: f64) -> f64 {
    let coarse = legendre_expression(idx, theta, tau, step).0.norm();
    let fine = legendre_expression(idx, theta, tau, step / 2.0).0.norm();
    (coarse / fine).log2()
}

/// Cauchy–Riemann defect `∂Z/∂τ + i∂Z/∂θ` (sign of `i` flipped for the
/// dotted series). Vanishes iff `Z` depends on `θ − iτ` only. Reported as a
/// flagged record.
pub fn holomorphy_residual(idx: HarmonicIndex, theta: f64, tau: f64, scheme: &FDScheme) -> ResidualRecord {
    let sign = if idx.is_dotted() { -1.0 } else { 1.0 };
    let zf = |th: f64, ta: f64| z_at(idx, C64::new(th, -ta));
    let defect = |h: f64| {
        let dth = (zf(theta + h, tau) - zf(theta - h, tau)) / (2.0 * h);
        let dta = (zf(theta, tau + h) - zf(theta, tau - h)) / (2.0 * h);
        dta + C64::new(0.0, sign) * dth
    };
    let value = scheme.extrapolate(defect);
    let h = scheme.step();
    let scale = ((zf(theta + h, tau) - zf(theta - h, tau)) / (2.0 * h)).norm();
    ResidualRecord::new("holomorphy", value.norm(), scale, HOLOMORPHY_TOL)
        .with_harmonic_index(&idx)
        .with_point("theta", theta)
        .with_point("tau", tau)
        .flagged()
}
