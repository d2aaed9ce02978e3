//! Complex Euler angles, the complex two-sphere, and the action of
//! `SL(2,ℂ)` on `ℂ³`.
//!
//! The third Euler angle is called `chi` here (and its imaginary partner
//! `vareps`); it is the angle usually written `ψ`, renamed so it does not
//! clash with the wavefunction.
//!
//! Convention: the group element attached to a set of angles is the z-x-z
//! product
//!
//! ```text
//! g = diag(e^{iφᶜ/2}, e^{-iφᶜ/2}) · [[cos θᶜ/2, i sin θᶜ/2], [i sin θᶜ/2, cos θᶜ/2]]
//!     · diag(e^{iχᶜ/2}, e^{-iχᶜ/2})
//! ```
//!
//! with `φᶜ = φ − iε`, `θᶜ = θ − iτ`, `χᶜ = χ − i·vareps`. The imaginary parts
//! are boosts. With this choice the spin-½ generalized hyperspherical
//! function reproduces `g` entry by entry (rows/columns ordered `m = -½, +½`).

use core::f64::consts::PI;


use crate::linalg::{Matrix, I, ONE, ZERO};
use crate::{Error, Result, C64};

/// Six real parameters of `SL(2,ℂ)` grouped as three complex Euler angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexEulerAngles {
    phi: f64,
    epsilon: f64,
    theta: f64,
    tau: f64,
    chi: f64,
    vareps: f64,
}

impl ComplexEulerAngles {
    /// Validates `0 ≤ θ ≤ π`, `0 ≤ φ < 2π`, `−2π ≤ χ < 2π`; the three
    /// imaginary parts only need to be finite.
    pub fn new(phi: f64, epsilon: f64, theta: f64, tau: f64, chi: f64, vareps: f64) -> Result<Self> {
        let check = |name: &'static str, value: f64, ok: bool| {
            if value.is_finite() && ok {
                Ok(())
            } else {
                Err(Error::OutOfRange { name, value })
            }
        };
        check("phi", phi, (0.0..2.0 * PI).contains(&phi))?;
        check("epsilon", epsilon, true)?;
        check("theta", theta, (0.0..=PI).contains(&theta))?;
        check("tau", tau, true)?;
        check("chi", chi, (-2.0 * PI..2.0 * PI).contains(&chi))?;
        check("vareps", vareps, true)?;
        Ok(ComplexEulerAngles { phi, epsilon, theta, tau, chi, vareps })
    }

    pub const fn identity() -> Self {
        ComplexEulerAngles { phi: 0.0, epsilon: 0.0, theta: 0.0, tau: 0.0, chi: 0.0, vareps: 0.0 }
    }

    /// Only `θ` and `τ` set; the other four parameters are zero.
    pub fn polar(theta: f64, tau: f64) -> Result<Self> {
        Self::new(0.0, 0.0, theta, tau, 0.0, 0.0)
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn tau(&self) -> f64 {
        self.tau
    }
    pub fn chi(&self) -> f64 {
        self.chi
    }
    pub fn vareps(&self) -> f64 {
        self.vareps
    }

    /// `[φ, ε, θ, τ, χ, vareps]`.
    pub fn to_array(&self) -> [f64; 6] {
        [self.phi, self.epsilon, self.theta, self.tau, self.chi, self.vareps]
    }

    pub fn phi_c(&self) -> C64 {
        C64::new(self.phi, -self.epsilon)
    }
    pub fn theta_c(&self) -> C64 {
        C64::new(self.theta, -self.tau)
    }
    pub fn chi_c(&self) -> C64 {
        C64::new(self.chi, -self.vareps)
    }

    /// Same real parts, negated imaginary parts: the dotted angles
    /// `φ̇ᶜ = φ + iε`, `θ̇ᶜ = θ + iτ`, `χ̇ᶜ = χ + i·vareps`.
    pub fn conjugated(&self) -> Self {
        ComplexEulerAngles {
            epsilon: -self.epsilon,
            tau: -self.tau,
            vareps: -self.vareps,
            ..*self
        }
    }

    /// The z-x-z group element described in the module docs.
    pub fn to_sl2c(&self) -> SL2CElement {
        let half = C64::new(0.5, 0.0);
        let ep = (I * self.phi_c() * half).exp();
        let ec = (I * self.chi_c() * half).exp();
        let (c, s) = ((self.theta_c() * half).cos(), (self.theta_c() * half).sin());
        SL2CElement {
            alpha: ep * c * ec,
            beta: ep * I * s / ec,
            gamma: I * s * ec / ep,
            delta: c / (ep * ec),
        }
    }
}

/// A point `z = x + iy ∈ ℂ³` on the complex two-sphere `z·z = r²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexSpherePoint {
    pub z: [C64; 3],
}

impl ComplexSpherePoint {
    pub fn new(z: [C64; 3]) -> Self {
        ComplexSpherePoint { z }
    }

    pub fn from_real_imag(x: [f64; 3], y: [f64; 3]) -> Self {
        ComplexSpherePoint { z: core::array::from_fn(|i| C64::new(x[i], y[i])) }
    }

    pub fn real_part(&self) -> [f64; 3] {
        self.z.map(|c| c.re)
    }

    pub fn imag_part(&self) -> [f64; 3] {
        self.z.map(|c| c.im)
    }

    /// `z₁² + z₂² + z₃²`.
    pub fn r_sq(&self) -> C64 {
        self.z.iter().map(|c| c * c).sum()
    }

    /// The same invariant from the real decomposition: `x² − y² + 2i x·y`.
    pub fn r_sq_decomposed(&self) -> C64 {
        let (x, y) = (self.real_part(), self.imag_part());
        let xx: f64 = x.iter().map(|v| v * v).sum();
        let yy: f64 = y.iter().map(|v| v * v).sum();
        let xy: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        C64::new(xx - yy, 2.0 * xy)
    }

    /// Invariant of the dual sphere, `z̄·z̄ = x² − y² − 2i x·y`.
    pub fn dual_r_sq(&self) -> C64 {
        self.r_sq().conj()
    }

    /// Principal square root of `r²`.
    pub fn radius(&self) -> C64 {
        self.r_sq().sqrt()
    }

    pub fn transformed(&self, rotation: &Matrix<3>) -> Self {
        ComplexSpherePoint { z: rotation.apply(&self.z) }
    }
}

pub fn sphere_invariant(z: &ComplexSpherePoint) -> C64 {
    z.r_sq()
}

/// `[[α, β], [γ, δ]]` with `αδ − γβ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SL2CElement {
    alpha: C64,
    beta: C64,
    gamma: C64,
    delta: C64,
}

pub const UNIMODULAR_TOL: f64 = 1e-12;

impl SL2CElement {
    pub fn new(alpha: C64, beta: C64, gamma: C64, delta: C64) -> Result<Self> {
        let det = alpha * delta - gamma * beta;
        if !det.is_finite() || (det - ONE).norm() > UNIMODULAR_TOL {
            return Err(Error::NotUnimodular { det });
        }
        Ok(SL2CElement { alpha, beta, gamma, delta })
    }

    pub const fn identity() -> Self {
        SL2CElement { alpha: ONE, beta: ZERO, gamma: ZERO, delta: ONE }
    }

    pub fn entries(&self) -> [[C64; 2]; 2] {
        [[self.alpha, self.beta], [self.gamma, self.delta]]
    }

    pub fn det(&self) -> C64 {
        self.alpha * self.delta - self.gamma * self.beta
    }

    pub fn inverse(&self) -> Self {
        SL2CElement { alpha: self.delta, beta: -self.beta, gamma: -self.gamma, delta: self.alpha }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        SL2CElement {
            alpha: self.alpha * rhs.alpha + self.beta * rhs.gamma,
            beta: self.alpha * rhs.beta + self.beta * rhs.delta,
            gamma: self.gamma * rhs.alpha + self.delta * rhs.gamma,
            delta: self.gamma * rhs.beta + self.delta * rhs.delta,
        }
    }
}

type Mat2 = [[C64; 2]; 2];

fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    core::array::from_fn(|i| core::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

fn pauli() -> [Mat2; 3] {
    [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
}

/// The complex rotation `R(g) ∈ SO(3,ℂ)` defined by
/// `g (z·σ) g⁻¹ = (R z)·σ`, i.e. `R_ij = ½ tr(σᵢ g σⱼ g⁻¹)`.
///
/// `R(g)` is complex-orthogonal, so it preserves `z₁² + z₂² + z₃²`, and
/// `g ↦ R(g)` is a homomorphism with kernel `±1`. For
/// `g = diag(e^{iφ/2}, e^{−iφ/2})` it rotates the `(z₁, z₂)` plane by `−φ`.
pub fn sl2c_to_complex_rotation(g: &SL2CElement) -> Result<Matrix<3>> {
    let det = g.det();
    if (det - ONE).norm() > UNIMODULAR_TOL {
        return Err(Error::NotUnimodular { det });
    }
    let sigma = pauli();
    let gm = g.entries();
    let gi = g.inverse().entries();
    let mut r = Matrix::<3>::zero();
    for (j, sj) in sigma.iter().enumerate() {
        let conj = mul2(&mul2(&gm, sj), &gi);
        for (i, si) in sigma.iter().enumerate() {
            let prod = mul2(si, &conj);
            r.0[i][j] = (prod[0][0] + prod[1][1]) * 0.5;
        }
    }
    Ok(r)
}
