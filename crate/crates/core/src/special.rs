//! Γ-function reciprocals at (half-)integers and terminating Gauss series.

use core::f64::consts::PI;

#[allow(unused_imports)] // std's inherent methods win when std is linked
use num_traits::Float;

use crate::{Error, HalfInt, Result, C64};

/// `n!` as a float. Exact for `n ≤ 22`.
pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * f64::from(k))
}

/// `1/Γ(x)` for `x ∈ ½ℤ`, exactly `0` at the poles `x = 0, −1, −2, …`.
pub fn gamma_reciprocal(x: HalfInt) -> f64 {
    if let Some(n) = x.as_int() {
        return if n <= 0 { 0.0 } else { 1.0 / factorial((n - 1) as u32) };
    }
    // Γ(½) = √π, then Γ(x + 1) = xΓ(x) up or down.
    let mut twice = 1;
    let mut gamma = PI.sqrt();
    while twice < x.twice() {
        gamma *= f64::from(twice) / 2.0;
        twice += 2;
    }
    while twice > x.twice() {
        twice -= 2;
        gamma /= f64::from(twice) / 2.0;
    }
    1.0 / gamma
}

fn non_positive_integer(v: f64) -> Option<u32> {
    if v <= 0.0 && v == v.trunc() && v > -(u32::MAX as f64) {
        Some((-v) as u32)
    } else {
        None
    }
}

/// `₂F₁(a, b; c; x)` for a series that terminates because `a` or `b` is a
/// non-positive integer `−N`; the result is the exact finite sum of
/// `N + 1` terms.
///
/// The lower parameter may itself be a non-positive integer `−M` only when
/// `M ≥ N` (the series stops before `(c)ⱼ` vanishes).
pub fn terminating_2f1(a: f64, b: f64, c: f64, x: C64) -> Result<C64> {
    let unsupported = Error::UnsupportedParameters { a, b, c };
    let order = match (non_positive_integer(a), non_positive_integer(b)) {
        (Some(na), Some(nb)) => na.min(nb),
        (Some(n), None) | (None, Some(n)) => n,
        (None, None) => return Err(unsupported),
    };
    if let Some(m) = non_positive_integer(c) {
        if m < order {
            return Err(unsupported);
        }
    }
    if !x.is_finite() {
        return Err(unsupported);
    }
    let mut term = C64::new(1.0, 0.0);
    let mut sum = term;
    for j in 0..order {
        let j = f64::from(j);
        term *= x * ((a + j) * (b + j) / ((c + j) * (j + 1.0)));
        sum += term;
    }
    Ok(sum)
}
