//! The complete wavefunction `ψ_λ(α) = ψ(x)·ψ(g)`: a photon plane wave
//! multiplied, as a scalar on both 3-blocks, by the Lorentz factor
//! `f^l_{1,λ}(r)·𝔐^λ_l`. Spacetime point and `r` are independent
//! coordinates.

use alloc::vec::Vec;

use crate::kinematics::ComplexEulerAngles;
use crate::linalg::{conj_vec, scale_vec, Vector};
use crate::lorentz_sector::{lorentz_factor, RadialSolution};
use crate::photon::{transversality_residual, Helicity, PhotonPlaneWave, WaveVector};
use crate::{Result, C64};

/// One member `ψ_λ` (or `ψ̇_λ` when `dotted`) of the solution set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoincareWaveFunction {
    wave: PhotonPlaneWave,
    radial: RadialSolution,
    dotted: bool,
}

impl PoincareWaveFunction {
    pub fn new(k: WaveVector, helicity: Helicity, radial: RadialSolution, dotted: bool, c: f64) -> Result<Self> {
        Ok(PoincareWaveFunction { wave: PhotonPlaneWave::new(k, helicity, c)?, radial, dotted })
    }

    pub fn helicity(&self) -> Helicity {
        self.wave.helicity()
    }

    pub fn is_dotted(&self) -> bool {
        self.dotted
    }

    pub fn plane_wave(&self) -> &PhotonPlaneWave {
        &self.wave
    }

    pub fn radial(&self) -> &RadialSolution {
        &self.radial
    }

    /// `ψ(x)`: the plane-wave column, conjugated for the dotted member.
    pub fn translation_factor(&self, x: &[f64; 3], t: f64) -> Vector<6> {
        let v = self.wave.value(x, t);
        if self.dotted {
            conj_vec(&v)
        } else {
            v
        }
    }

    /// `ψ(g)`: `f^l_{1,λ}(r)·𝔐^λ_l`, or the dotted factor at `r*`.
    pub fn lorentz_factor(&self, r: C64, angles: &ComplexEulerAngles) -> Result<C64> {
        lorentz_factor(&self.radial, self.helicity().sign(), r, angles, self.dotted)
    }

    pub fn evaluate(&self, x: &[f64; 3], t: f64, r: C64, angles: &ComplexEulerAngles) -> Result<Vector<6>> {
        Ok(scale_vec(&self.translation_factor(x, t), self.lorentz_factor(r, angles)?))
    }

    /// Largest relative mismatch between `value_i / ψ(x)_i` and `ψ(g)` over
    /// components with `|ψ(x)_i| > 1e−6`.
    pub fn factorization_defect(&self, x: &[f64; 3], t: f64, r: C64, angles: &ComplexEulerAngles) -> Result<f64> {
        let value = self.evaluate(x, t, r, angles)?;
        let translation = self.translation_factor(x, t);
        let factor = self.lorentz_factor(r, angles)?;
        Ok(value
            .iter()
            .zip(&translation)
            .filter(|(_, d)| d.norm() > 1e-6)
            .map(|(v, d)| (v / d - factor).norm() / factor.norm().max(1.0))
            .fold(0.0, f64::max))
    }
}

#[allow(clippy::too_many_arguments)]
pub fn assemble(
    k: WaveVector,
    helicity: Helicity,
    radial: RadialSolution,
    x: &[f64; 3],
    t: f64,
    r: C64,
    angles: &ComplexEulerAngles,
    dotted: bool,
    c: f64,
) -> Result<Vector<6>> {
    PoincareWaveFunction::new(k, helicity, radial, dotted, c)?.evaluate(x, t, r, angles)
}

/// Why a catalog member is not a physical photon state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exclusion {
    /// A dotted member: the conjugate branch.
    NegativeEnergy,
    /// The longitudinal member; `residual = |k·ε₀| = |k|`.
    Transversality { residual: f64 },
}

/// A catalog entry `ψ_λ` or `ψ̇_λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogMember {
    pub helicity: Helicity,
    pub dotted: bool,
    pub wavefunction: PoincareWaveFunction,
}

impl CatalogMember {
    /// `psi_1`, `psi_0`, `psi_-1`, `psi_dot_1`, …
    pub fn label(&self) -> &'static str {
        match (self.dotted, self.helicity) {
            (false, Helicity::Plus) => "psi_1",
            (false, Helicity::Zero) => "psi_0",
            (false, Helicity::Minus) => "psi_-1",
            (true, Helicity::Plus) => "psi_dot_1",
            (true, Helicity::Zero) => "psi_dot_0",
            (true, Helicity::Minus) => "psi_dot_-1",
        }
    }
}

/// The six members `ψ₁, ψ₀, ψ₋₁, ψ̇₁, ψ̇₀, ψ̇₋₁` for one wave vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionCatalog {
    k: WaveVector,
    members: Vec<CatalogMember>,
}

impl SolutionCatalog {
    pub fn new(k: WaveVector, radial: RadialSolution, c: f64) -> Result<Self> {
        let mut members = Vec::with_capacity(6);
        for dotted in [false, true] {
            for helicity in Helicity::ALL {
                let wavefunction = PoincareWaveFunction::new(k, helicity, radial, dotted, c)?;
                members.push(CatalogMember { helicity, dotted, wavefunction });
            }
        }
        Ok(SolutionCatalog { k, members })
    }

    pub fn members(&self) -> &[CatalogMember] {
        &self.members
    }

    pub fn wave_vector(&self) -> WaveVector {
        self.k
    }

    pub fn is_physical(member: &CatalogMember) -> bool {
        !member.dotted && member.helicity.is_transverse()
    }
}

/// Result of [`physical_filter`].
#[derive(Debug, Clone, PartialEq)]
pub struct FilterOutcome {
    pub physical: Vec<CatalogMember>,
    pub excluded: Vec<(CatalogMember, Exclusion)>,
}

/// Keeps `ψ₊₁` and `ψ₋₁`; dotted members are tagged negative-energy and the
/// longitudinal one is tagged with its transversality residual.
pub fn physical_filter(catalog: &SolutionCatalog) -> Result<FilterOutcome> {
    let mut out = FilterOutcome { physical: Vec::new(), excluded: Vec::new() };
    for m in catalog.members() {
        if m.dotted {
            out.excluded.push((*m, Exclusion::NegativeEnergy));
        } else if !m.helicity.is_transverse() {
            let residual = transversality_residual(&catalog.k, m.helicity)?;
            out.excluded.push((*m, Exclusion::Transversality { residual }));
        } else {
            out.physical.push(*m);
        }
    }
    Ok(out)
}
