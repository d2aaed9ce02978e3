//! Numerics for the Maxwell field `(1,0)⊕(0,1)` realized as functions on the
//! Poincaré group.
//!
//! The crate is split along the two factors of the wavefunction
//! `ψ(α) = ψ(x)·ψ(g)`:
//!
//! * [`kinematics`], [`special`], [`harmonics`] and [`differential`] cover the
//!   Lorentz-group side: complex Euler angles, hyperspherical functions
//!   `Z^l_mn`, their generalized forms `𝔐^l_mn`, and finite-difference
//!   checks of the Casimir and Legendre equations they satisfy.
//! * [`photon`] covers the translation side: the Dirac-like (Majorana–
//!   Oppenheimer) form of the Maxwell equations for `ψ = E − iB`, the curl
//!   eigenproblem, polarization vectors and plane waves.
//! * [`lorentz_sector`] holds the spin-1 `Λ`/`Υ` matrices and the radial
//!   functions on the complex two-sphere, and [`assembly`] multiplies both
//!   factors into the complete solution set.
//!
//! Everything here is pure and allocation-light; IO, reports and the CLI
//! live in the companion `poincare-maxwell-cli` crate.
//!
//! Units: `ħ = 1`; the speed of light `c` is an explicit positive parameter
//! wherever it enters.

#![no_std]

extern crate alloc;

pub mod assembly;
pub mod differential;
mod error;
mod half;
pub mod harmonics;
pub mod kinematics;
pub mod linalg;
pub mod lorentz_sector;
pub mod photon;
pub mod special;

pub use error::{Error, Result};
pub use half::HalfInt;
pub use num_complex::Complex64;

/// Shorthand used throughout the crate.
pub type C64 = Complex64;
