//! Hyperspherical functions `Z^l_mn(θ, τ)` of the Lorentz group and the
//! generalized functions `𝔐^l_mn` built from them.
//!
//! Two independent evaluations of `Z` are provided:
//!
//! * [`z_sum`]: the explicit triple sum over `k, j, s` with `1/Γ` factors,
//!   which is the defining formula;
//! * [`z_2f1`]: the same function as a sum over `k` of products of two
//!   terminating Gauss series, one in `−tan²(θ/2)` and one in `tanh²(τ/2)`.
//!
//! The Gauss-series form used here is
//!
//! ```text
//! Z = cos^{2l}(θ/2) cosh^{2l}(τ/2) Σ_k A_k(θ) B_k(τ)
//! A_k = i^{|m−k|} N_mk tan^{|m−k|}(θ/2) ₂F₁(max(m,k)−l, −l−min(m,k); |m−k|+1; −tan²(θ/2)) / D_mk
//! B_k =           N_nk tanh^{|n−k|}(τ/2) ₂F₁(max(n,k)−l, −l−min(n,k); |n−k|+1;  tanh²(τ/2)) / D_nk
//! ```
//!
//! with `N_ab = √((l−a)!(l+a)!(l−b)!(l+b)!)` and
//! `D_ab = |a−b|! (l−max(a,b))! (l+min(a,b))!`. For `k > m` this is the
//! inner `j`-sum re-indexed from `j = k − m`, so the lower parameter never
//! reaches a non-positive integer.
//!
//! `Z` depends on `(θ, τ)` only through `θᶜ = θ − iτ`. The dotted (conjugate)
//! series is the complex-conjugate representation: every dotted value is
//! the complex conjugate of the undotted one at the same real parameters,
//! which makes it a holomorphic function of `θ̇ᶜ = θ + iτ`, `φ̇ᶜ = φ + iε`,
//! `χ̇ᶜ = χ + i·vareps`.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)] // std's inherent methods win when std is linked
use num_traits::Float;

use crate::kinematics::ComplexEulerAngles;
use crate::linalg::i_pow;
use crate::special::{factorial, gamma_reciprocal, terminating_2f1};
use crate::{Error, HalfInt, Result, C64};

/// `(l, m, n)` with the dotted flag selecting the conjugate series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HarmonicIndex {
    l: HalfInt,
    m: HalfInt,
    n: HalfInt,
    dotted: bool,
}

impl HarmonicIndex {
    pub fn new(l: HalfInt, m: HalfInt, n: HalfInt) -> Result<Self> {
        let ok = l.twice() >= 0
            && m.abs() <= l
            && n.abs() <= l
            && (l - m).is_integer()
            && (l - n).is_integer();
        if !ok {
            return Err(Error::InvalidIndex {
                twice_l: l.twice(),
                twice_m: m.twice(),
                twice_n: n.twice(),
            });
        }
        Ok(HarmonicIndex { l, m, n, dotted: false })
    }

    /// Integer-valued shorthand.
    pub fn integer(l: i32, m: i32, n: i32) -> Result<Self> {
        Self::new(HalfInt::from_int(l), HalfInt::from_int(m), HalfInt::from_int(n))
    }

    pub fn dotted(self) -> Self {
        HarmonicIndex { dotted: true, ..self }
    }

    pub fn undotted(self) -> Self {
        HarmonicIndex { dotted: false, ..self }
    }

    pub fn l(&self) -> HalfInt {
        self.l
    }
    pub fn m(&self) -> HalfInt {
        self.m
    }
    pub fn n(&self) -> HalfInt {
        self.n
    }
    pub fn is_dotted(&self) -> bool {
        self.dotted
    }

    /// The eigenvalue `l(l+1)` of the matching Casimir operator.
    pub fn casimir_eigenvalue(&self) -> f64 {
        let l = self.l.to_f64();
        l * (l + 1.0)
    }

    /// Every valid `(m, n)` for a given `l`, row-major in `m` then `n`.
    pub fn all_for(l: HalfInt) -> impl Iterator<Item = HarmonicIndex> {
        l.symmetric_range()
            .flat_map(move |m| l.symmetric_range().map(move |n| HarmonicIndex { l, m, n, dotted: false }))
    }
}

/// Where a harmonic was evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HarmonicPoint {
    Polar { theta: f64, tau: f64 },
    Group(ComplexEulerAngles),
}

/// A computed `Z^l_mn` or `𝔐^l_mn` together with its inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypersphericalValue {
    pub index: HarmonicIndex,
    pub point: HarmonicPoint,
    pub value: C64,
}

impl HypersphericalValue {
    pub fn z(index: HarmonicIndex, theta: f64, tau: f64) -> Result<Self> {
        let value = z_sum(index, theta, tau)?;
        Ok(HypersphericalValue { index, point: HarmonicPoint::Polar { theta, tau }, value })
    }

    pub fn generalized(index: HarmonicIndex, angles: ComplexEulerAngles) -> Self {
        let value = generalized_m(index, &angles);
        HypersphericalValue { index, point: HarmonicPoint::Group(angles), value }
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "theta", value: theta })
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if tau.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange { name: "tau", value: tau })
    }
}

fn gamma_of_int(x: HalfInt) -> f64 {
    1.0 / gamma_reciprocal(x)
}

fn fact(x: HalfInt) -> f64 {
    factorial(x.as_int().expect("integer factorial argument") as u32)
}

/// `√((l−a)!(l+a)!(l−b)!(l+b)!)`.
fn norm_factor(l: HalfInt, a: HalfInt, b: HalfInt) -> f64 {
    (fact(l - a) * fact(l + a) * fact(l - b) * fact(l + b)).sqrt()
}

/// Triple sum for already validated indices; `θ`, `τ` are any reals.
fn z_triple_sum(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64, tau: f64) -> C64 {
    let one = HalfInt::ONE;
    let (st, ct) = (theta / 2.0).sin_cos();
    let (sh, ch) = ((tau / 2.0).sinh(), (tau / 2.0).cosh());
    let two_l = l.twice();
    let mut total = C64::new(0.0, 0.0);

    for k in l.symmetric_range() {
        let root_theta = (gamma_of_int(l - m + one)
            * gamma_of_int(l + m + one)
            * gamma_of_int(l - k + one)
            * gamma_of_int(l + k + one))
        .sqrt();
        let root_tau = (gamma_of_int(l - n + one)
            * gamma_of_int(l + n + one)
            * gamma_of_int(l - k + one)
            * gamma_of_int(l + k + one))
        .sqrt();

        // cos^{2l} tan^{m−k} tan^{2j} regrouped as cos^{2l−p} sin^{p}
        let j_lo = (k - m).twice().max(0) / 2;
        let j_hi = (l - m).twice().min((l + k).twice()) / 2;
        let mut theta_sum = 0.0;
        for j in j_lo..=j_hi {
            let jh = HalfInt::from_int(j);
            let p = (m - k).twice() / 2 + 2 * j;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            // A single ratio keeps diagonal entries at the identity exactly 1;
            // a pole in the denominator makes the term vanish.
            let denom = gamma_of_int(jh + one)
                * gamma_of_int(l - m - jh + one)
                * gamma_of_int(l + k - jh + one)
                * gamma_of_int(m - k + jh + one);
            theta_sum += sign * ct.powi(two_l - p) * st.powi(p) * (root_theta / denom);
        }

        let s_lo = (k - n).twice().max(0) / 2;
        let s_hi = (l - n).twice().min((l + k).twice()) / 2;
        let mut tau_sum = 0.0;
        for s in s_lo..=s_hi {
            let sh_ = HalfInt::from_int(s);
            let q = (n - k).twice() / 2 + 2 * s;
            let denom = gamma_of_int(sh_ + one)
                * gamma_of_int(l - n - sh_ + one)
                * gamma_of_int(l + k - sh_ + one)
                * gamma_of_int(n - k + sh_ + one);
            tau_sum += ch.powi(two_l - q) * sh.powi(q) * (root_tau / denom);
        }

        total += i_pow((m - k).twice() / 2) * (theta_sum * tau_sum);
    }
    total
}

fn dress(idx: HarmonicIndex, value: C64) -> C64 {
    if idx.dotted {
        value.conj()
    } else {
        value
    }
}

/// `Z^l_mn(θ, τ)` from the defining triple sum. Terms carrying `1/Γ` of a
/// non-positive integer vanish; `cos^{2l}(θ/2) tan^{m−k+2j}(θ/2)` is
/// evaluated as `cos^{2l−p} sin^{p}` so `θ = π` is safe.
pub fn z_sum(idx: HarmonicIndex, theta: f64, tau: f64) -> Result<C64> {
    check_theta(theta)?;
    check_tau(tau)?;
    Ok(dress(idx, z_triple_sum(idx.l, idx.m, idx.n, theta, tau)))
}

/// `Z` at an arbitrary complex angle `θᶜ` (no range restriction), using the
/// fact that `Z` depends on `θ − iτ` only.
pub fn z_at(idx: HarmonicIndex, theta_c: C64) -> C64 {
    dress(idx, z_triple_sum(idx.l, idx.m, idx.n, theta_c.re, -theta_c.im))
}

/// One factor of the Gauss-series form: `i^{|a−b|}`-free part of `A_k`/`B_k`
/// with `x = ∓t²` and `t` the half-angle tangent.
fn gauss_factor(l: HalfInt, a: HalfInt, b: HalfInt, t: f64, x: f64) -> Result<f64> {
    let (lo, hi) = if b <= a { (b, a) } else { (a, b) };
    let gap = (hi - lo).as_int().expect("same integer class");
    let upper1 = (hi - l).to_f64();
    let upper2 = (-l - lo).to_f64();
    let lower = f64::from(gap) + 1.0;
    let series = terminating_2f1(upper1, upper2, lower, C64::new(x, 0.0))?;
    let denom = factorial(gap as u32) * fact(l - hi) * fact(l + lo);
    Ok(norm_factor(l, a, b) * t.powi(gap) * series.re / denom)
}

/// `Z^l_mn(θ, τ)` as a sum of products of terminating `₂F₁` series.
pub fn z_2f1(idx: HarmonicIndex, theta: f64, tau: f64) -> Result<C64> {
    check_theta(theta)?;
    check_tau(tau)?;
    let (l, m, n) = (idx.l, idx.m, idx.n);
    let t = (theta / 2.0).tan();
    let th = (tau / 2.0).tanh();
    let mut total = C64::new(0.0, 0.0);
    for k in l.symmetric_range() {
        let phase = i_pow((m - k).abs().twice() / 2);
        let a = gauss_factor(l, m, k, t, -t * t)?;
        let b = gauss_factor(l, n, k, th, th * th)?;
        total += phase * (a * b);
    }
    let prefactor = (theta / 2.0).cos().powi(l.twice()) * (tau / 2.0).cosh().powi(l.twice());
    Ok(dress(idx, total * prefactor))
}

/// `P^l_mk(cos θ)`, the `SU(2)` factor: the θ-half of each summand of the
/// triple sum, so that `Z^l_mn = Σ_k P^l_mk 𝔓^l_kn`.
pub fn su2_factor_p(l: HalfInt, m: HalfInt, k: HalfInt, theta: f64) -> Result<C64> {
    HarmonicIndex::new(l, m, k)?;
    let (s, c) = (theta / 2.0).sin_cos();
    let lo = 0.max((k - m).twice() / 2);
    let hi = ((l - m).twice().min((l + k).twice())) / 2;
    let mut sum = 0.0;
    for j in lo..=hi {
        let jh = HalfInt::from_int(j);
        let p = (m - k).twice() / 2 + 2 * j;
        let term = c.powi(l.twice() - p) * s.powi(p)
            / (factorial(j as u32) * fact(l - m - jh) * fact(l + k - jh) * fact(m - k + jh));
        sum += if j % 2 == 0 { term } else { -term };
    }
    Ok(i_pow((m - k).twice() / 2) * (norm_factor(l, m, k) * sum))
}

/// `𝔓^l_kn(cosh τ)`, the `QU(2)` (Jacobi-function) factor: the τ-half of each
/// summand of the triple sum.
pub fn qu2_factor_jacobi(l: HalfInt, k: HalfInt, n: HalfInt, tau: f64) -> Result<f64> {
    HarmonicIndex::new(l, k, n)?;
    let (s, c) = ((tau / 2.0).sinh(), (tau / 2.0).cosh());
    let lo = 0.max((k - n).twice() / 2);
    let hi = ((l - n).twice().min((l + k).twice())) / 2;
    let mut sum = 0.0;
    for j in lo..=hi {
        let jh = HalfInt::from_int(j);
        let q = (n - k).twice() / 2 + 2 * j;
        sum += c.powi(l.twice() - q) * s.powi(q)
            / (factorial(j as u32) * fact(l - n - jh) * fact(l + k - jh) * fact(n - k + jh));
    }
    Ok(norm_factor(l, n, k) * sum)
}

/// `Σ_k P^l_mk(cos θ) 𝔓^l_kn(cosh τ)`.
pub fn z_factorized(idx: HarmonicIndex, theta: f64, tau: f64) -> Result<C64> {
    check_theta(theta)?;
    check_tau(tau)?;
    let mut total = C64::new(0.0, 0.0);
    for k in idx.l.symmetric_range() {
        total += su2_factor_p(idx.l, idx.m, k, theta)? * qu2_factor_jacobi(idx.l, k, idx.n, tau)?;
    }
    Ok(dress(idx, total))
}

/// Evaluation on raw parameters `[φ, ε, θ, τ, χ, vareps]` without range
/// checks. Finite-difference stencils step outside the canonical ranges.
pub fn generalized_m_raw(idx: HarmonicIndex, p: &[f64; 6]) -> C64 {
    let [phi, epsilon, theta, tau, chi, vareps] = *p;
    let (m, n) = (idx.m.to_f64(), idx.n.to_f64());
    let left = (C64::new(epsilon, phi) * -m).exp();
    let right = (C64::new(vareps, chi) * -n).exp();
    let z = z_triple_sum(idx.l, idx.m, idx.n, theta, tau);
    dress(idx, left * z * right)
}

/// `𝔐^l_mn = e^{−m(ε+iφ)} Z^l_mn(θ, τ) e^{−n(vareps+iχ)}`; the dotted index
/// gives the conjugate series.
pub fn generalized_m(idx: HarmonicIndex, angles: &ComplexEulerAngles) -> C64 {
    generalized_m_raw(idx, &angles.to_array())
}

/// Associated function `𝔐^l_m0 = e^{−m(ε+iφ)} Z^l_m0(θ, τ)`.
pub fn associated_m(l: HalfInt, m: HalfInt, angles: &ComplexEulerAngles) -> Result<C64> {
    let idx = HarmonicIndex::new(l, m, HalfInt::ZERO)?;
    Ok(generalized_m(idx, angles))
}

/// Zonal function `Z^l_00(θ, τ)`. Requires integer `l`.
pub fn zonal_z(l: HalfInt, theta: f64, tau: f64) -> Result<C64> {
    z_sum(HarmonicIndex::new(l, HalfInt::ZERO, HalfInt::ZERO)?, theta, tau)
}

/// The `l ≥ 1`, `m ∈ {−1, 0, 1}`, `n = 0` specialization written out with
/// the Gauss series directly. A term whose lower parameter would be a
/// non-positive integer is replaced by the corresponding finite inner sum.
pub fn section3_z(l: u32, m: i32, theta: f64, tau: f64) -> Result<C64> {
    if l < 1 {
        return Err(Error::OutOfRange { name: "l", value: f64::from(l) });
    }
    if !(-1..=1).contains(&m) {
        return Err(Error::OutOfRange { name: "m", value: f64::from(m) });
    }
    check_theta(theta)?;
    check_tau(tau)?;
    let li = l as i32;
    let t = (theta / 2.0).tan();
    let th = (tau / 2.0).tanh();

    // Finite inner sum Σ_j (sign·t²)^j / (j!(l−a−j)!(l+k−j)!(a−k+j)!) · t^{a−k}
    let inner = |a: i32, k: i32, t: f64, sign: f64| -> f64 {
        let lo = 0.max(k - a);
        let hi = (li - a).min(li + k);
        (lo..=hi)
            .map(|j| {
                sign.powi(j) * t.powi(a - k + 2 * j)
                    /(factorial(j as u32)
                        * factorial((li - a - j) as u32)
                        * factorial((li + k - j) as u32)
                        * factorial((a - k + j) as u32))
            })
            .sum()
    };
    let gauss = |a: i32, k: i32, t: f64, x: f64| -> Result<f64> {
        let f = terminating_2f1(f64::from(a - li), f64::from(-li - k), f64::from(a - k + 1), C64::new(x, 0.0))?;
        Ok(t.powi(a - k) * f.re
            / (factorial((li - a) as u32) * factorial((li + k) as u32) * factorial((a - k) as u32)))
    };
    let root = |a: i32, k: i32| -> f64 {
        (factorial((li - a) as u32)
            * factorial((li + a) as u32)
            * factorial((li - k) as u32)
            * factorial((li + k) as u32))
        .sqrt()
    };

    let mut total = C64::new(0.0, 0.0);
    for k in -li..=li {
        let theta_part = if m - k + 1 >= 1 { gauss(m, k, t, -t * t)? } else { inner(m, k, t, -1.0) };
        let tau_part = if -k + 1 >= 1 { gauss(0, k, th, th * th)? } else { inner(0, k, th, 1.0) };
        total += i_pow(m - k) * (root(m, k) * theta_part * root(0, k) * tau_part);
    }
    Ok(total * (theta / 2.0).cos().powi(2 * li) * (tau / 2.0).cosh().powi(2 * li))
}

/// `[Z^l_mn(θ, τ)]` row-major over `m, n = −l..l`.
pub fn z_matrix(l: HalfInt, theta: f64, tau: f64) -> Result<Vec<C64>> {
    HarmonicIndex::all_for(l).map(|idx| z_sum(idx, theta, tau)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{I, ONE, ZERO};

    fn idx(l: i32, m: i32, n: i32) -> HarmonicIndex {
        HarmonicIndex::integer(l, m, n).unwrap()
    }

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn index_validation() {
        assert!(HarmonicIndex::integer(1, 2, 0).is_err());
        assert!(HarmonicIndex::new(HalfInt::from_twice(3), HalfInt::from_int(1), HalfInt::from_twice(1)).is_err());
        assert!(HarmonicIndex::new(HalfInt::from_twice(-1), HalfInt::ZERO, HalfInt::ZERO).is_err());
        assert!(HarmonicIndex::new(HalfInt::from_twice(3), HalfInt::from_twice(-1), HalfInt::from_twice(3)).is_ok());
        assert_eq!(HarmonicIndex::all_for(HalfInt::from_int(2)).count(), 25);
    }

    #[test]
    fn identity_gives_kronecker_delta() {
        assert_eq!(z_sum(idx(1, 0, 0), 0.0, 0.0).unwrap(), ONE);
        assert_eq!(z_sum(idx(1, 1, 0), 0.0, 0.0).unwrap(), ZERO);
    }

    #[test]
    fn trivial_representation_is_one() {
        for (th, ta) in [(0.0, 0.0), (1.3, -2.0), (PI, 0.7)] {
            assert_eq!(z_2f1(idx(0, 0, 0), th, ta).unwrap(), ONE);
            assert_eq!(z_sum(idx(0, 0, 0), th, ta).unwrap(), ONE);
        }
    }

    #[test]
    fn two_routes_agree_on_examples() {
        let cases = [(idx(1, 1, 1), 0.9, 0.4), (idx(1, 0, 0), PI / 2.0, 0.0), (idx(2, -1, 1), 0.3, -0.7)];
        for (i, th, ta) in cases {
            let a = z_sum(i, th, ta).unwrap();
            let b = z_2f1(i, th, ta).unwrap();
            assert!(close(b, a, 1e-12), "{i:?}: {a} vs {b}");
        }
    }

    #[test]
    fn spin_one_matches_closed_form() {
        // Hand-derived l = 1 entries at τ = 0 from the triple sum:
        // Z_00 = cos θ, Z_10 = (i/√2) sin θ, Z_11 = cos²(θ/2).
        let th = 0.77_f64;
        assert!(close(z_sum(idx(1, 0, 0), th, 0.0).unwrap(), C64::new(th.cos(), 0.0), 1e-15));
        let z10 = z_sum(idx(1, 1, 0), th, 0.0).unwrap();
        assert!(close(z10, I * (th.sin() / 2f64.sqrt()), 1e-15));
        let z11 = z_sum(idx(1, 1, 1), th, 0.0).unwrap();
        assert!(close(z11, C64::new((th / 2.0).cos().powi(2), 0.0), 1e-15));
    }

    #[test]
    fn boosts_enter_through_complex_angle() {
        // Z^1_00 = cos θᶜ with θᶜ = θ − iτ
        let (th, ta) = (0.4, 0.9);
        let z = z_sum(idx(1, 0, 0), th, ta).unwrap();
        assert!(close(z, C64::new(th, -ta).cos(), 1e-14));
    }

    #[test]
    fn factors_at_identity() {
        let l = HalfInt::from_int(2);
        for m in l.symmetric_range() {
            for k in l.symmetric_range() {
                let p = su2_factor_p(l, m, k, 0.0).unwrap();
                let q = qu2_factor_jacobi(l, m, k, 0.0).unwrap();
                let delta = if m == k { 1.0 } else { 0.0 };
                assert_eq!(p, C64::new(delta, 0.0));
                assert_eq!(q, delta);
            }
        }
    }

    #[test]
    fn factorization_example() {
        let i = idx(1, 1, -1);
        let a = z_factorized(i, 0.5, 0.2).unwrap();
        let b = z_sum(i, 0.5, 0.2).unwrap();
        assert!(close(a, b, 1e-12));
    }

    #[test]
    fn generalized_function_examples() {
        let angles = ComplexEulerAngles::new(0.2, 0.1, 0.5, 0.3, 0.0, 0.0).unwrap();
        let i = idx(1, 1, 0);
        let expected = C64::new(-0.1, -0.2).exp() * z_sum(i, 0.5, 0.3).unwrap();
        assert!(close(generalized_m(i, &angles), expected, 1e-15));

        let j = idx(2, 0, 0);
        let a = ComplexEulerAngles::new(1.0, 0.5, 0.8, -0.4, 2.0, 0.7).unwrap();
        assert_eq!(generalized_m(j, &a), z_sum(j, 0.8, -0.4).unwrap());

        for i in HarmonicIndex::all_for(HalfInt::from_twice(3)) {
            let v = generalized_m(i, &ComplexEulerAngles::identity());
            let delta = if i.m() == i.n() { ONE } else { ZERO };
            assert_eq!(v, delta);
        }
    }

    #[test]
    fn dotted_series_is_conjugate() {
        let i = idx(2, 1, -2);
        let a = ComplexEulerAngles::new(0.3, 0.2, 1.1, 0.5, -0.4, 0.1).unwrap();
        assert_eq!(generalized_m(i.dotted(), &a), generalized_m(i, &a).conj());
    }

    #[test]
    fn associated_and_zonal() {
        for th in [0.0, 0.9, 2.5] {
            assert_eq!(zonal_z(HalfInt::ZERO, th, 0.4).unwrap(), ONE);
        }
        let a = ComplexEulerAngles::new(0.6, 0.2, 1.2, 0.3, 0.0, 0.0).unwrap();
        let l = HalfInt::from_int(2);
        assert_eq!(associated_m(l, HalfInt::ZERO, &a).unwrap(), zonal_z(l, 1.2, 0.3).unwrap());
        assert!(zonal_z(HalfInt::from_twice(1), 0.2, 0.0).is_err());
    }

    #[test]
    fn section3_examples() {
        assert!(close(section3_z(1, 0, 0.0, 0.0).unwrap(), ONE, 1e-15));
        let a = section3_z(1, 1, 0.6, 0.0).unwrap();
        assert!(close(a, z_2f1(idx(1, 1, 0), 0.6, 0.0).unwrap(), 1e-12));
        let b = section3_z(2, -1, 0.3, 0.8).unwrap();
        assert!(close(b, z_2f1(idx(2, -1, 0), 0.3, 0.8).unwrap(), 1e-12));
        let z = section3_z(1, 0, 0.4, 0.0).unwrap();
        assert!(close(z, zonal_z(HalfInt::ONE, 0.4, 0.0).unwrap(), 1e-12));
        assert!(section3_z(0, 0, 0.1, 0.1).is_err());
        assert!(section3_z(2, 2, 0.1, 0.1).is_err());
    }

    #[test]
    fn range_errors() {
        assert!(z_sum(idx(1, 0, 0), -0.1, 0.0).is_err());
        assert!(z_2f1(idx(1, 0, 0), 3.5, 0.0).is_err());
        assert!(z_sum(idx(1, 0, 0), 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn theta_pi_is_finite() {
        for i in HarmonicIndex::all_for(HalfInt::from_int(3)) {
            let a = z_sum(i, PI, 0.5).unwrap();
            let b = z_2f1(i, PI, 0.5).unwrap();
            assert!(a.is_finite() && b.is_finite());
            assert!(close(b, a, 1e-9), "{i:?}");
        }
    }
}
