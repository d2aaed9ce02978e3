//! Run configuration and parsers for command-line values.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64 as C64;
use poincare_maxwell::lorentz_sector::RadialVariant;
use poincare_maxwell::HalfInt;
use serde::Serialize;

/// A malformed argument or an impossible request; maps to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Linear coefficient `s`; leaves a nonzero radial residual.
    #[serde(rename = "paper")]
    #[value(name = "paper")]
    AsPrinted,
    Corrected,
}

impl From<Variant> for RadialVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::AsPrinted => RadialVariant::AsPrinted,
            Variant::Corrected => RadialVariant::Corrected,
        }
    }
}

pub const LMAX_LIMIT: u32 = 6;

/// Everything a verification run depends on. Two runs with equal
/// configurations produce identical reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub lmax: u32,
    /// Points per axis of the deterministic angle grids.
    pub grid: usize,
    /// Random draws per randomized check.
    pub samples: usize,
    pub seed: u64,
    pub c: f64,
    pub variant: Variant,
    pub corrected_lambda: bool,
    pub tolerances: BTreeMap<String, f64>,
    pub format: Format,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            lmax: 4,
            grid: 5,
            samples: 200,
            seed: 42,
            c: 1.0,
            variant: Variant::Corrected,
            corrected_lambda: true,
            tolerances: BTreeMap::new(),
            format: Format::Json,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.lmax > LMAX_LIMIT {
            return Err(usage(format!("--lmax must lie in [0, {LMAX_LIMIT}], got {}", self.lmax)));
        }
        if self.grid < 2 {
            return Err(usage("--grid needs at least 2 points per axis"));
        }
        if self.samples == 0 {
            return Err(usage("--samples must be positive"));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(usage(format!("--c must be a positive finite number, got {}", self.c)));
        }
        Ok(())
    }

    /// Tolerance override for a check, by full name (`casimir.x2`) or by
    /// its family (`casimir`). The full name wins.
    pub fn tolerance_override(&self, name: &str) -> Option<f64> {
        self.tolerances
            .get(name)
            .or_else(|| name.split_once('.').and_then(|(family, _)| self.tolerances.get(family)))
            .copied()
    }
}

/// `NAME=VALUE` with a finite, non-negative value.
pub fn parse_tolerance(s: &str) -> anyhow::Result<(String, f64)> {
    let (name, value) = s.split_once('=').ok_or_else(|| usage(format!("expected NAME=VALUE, got `{s}`")))?;
    let value: f64 = value.trim().parse().map_err(|_| usage(format!("bad tolerance value in `{s}`")))?;
    if !(value.is_finite() && value >= 0.0) || name.trim().is_empty() {
        return Err(usage(format!("bad tolerance `{s}`")));
    }
    Ok((name.trim().to_string(), value))
}

/// A real number, optionally a multiple of `pi`: `0.3`, `pi`, `-pi/2`,
/// `2pi`, `0.25*pi`.
pub fn parse_angle(s: &str) -> anyhow::Result<f64> {
    let bad = || usage(format!("cannot read `{s}` as a number"));
    let t = s.trim();
    let Some(pos) = t.find("pi") else {
        let v: f64 = t.parse().map_err(|_| bad())?;
        return if v.is_finite() { Ok(v) } else { Err(bad()) };
    };
    let coeff = t[..pos].trim_end_matches('*');
    let coeff = match coeff {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let rest = &t[pos + 2..];
    let divisor = match rest {
        "" => 1.0,
        r => r.strip_prefix('/').and_then(|d| d.parse::<f64>().ok()).filter(|d| *d != 0.0).ok_or_else(bad)?,
    };
    Ok(coeff * PI / divisor)
}

/// `1`, `-3/2` or `0.5`.
pub fn parse_half(s: &str) -> anyhow::Result<HalfInt> {
    let bad = || usage(format!("`{s}` is not an integer or half-integer"));
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: i32 = num.trim().parse().map_err(|_| bad())?;
        return match den.trim() {
            "1" => Ok(HalfInt::from_int(num)),
            "2" => Ok(HalfInt::from_twice(num)),
            _ => Err(bad()),
        };
    }
    let v: f64 = t.parse().map_err(|_| bad())?;
    HalfInt::from_f64(v).ok_or_else(bad)
}

/// `1`, `2i`, `0.5-1.5i`.
pub fn parse_complex(s: &str) -> anyhow::Result<C64> {
    let z: C64 = s.trim().parse().map_err(|_| usage(format!("cannot read `{s}` as a complex number")))?;
    if z.is_finite() {
        Ok(z)
    } else {
        Err(usage(format!("`{s}` is not finite")))
    }
}

/// `k1,k2,k3`.
pub fn parse_vec3(s: &str) -> anyhow::Result<[f64; 3]> {
    let parts: Vec<f64> = s.split(',').map(parse_angle).collect::<anyhow::Result<_>>()?;
    parts.try_into().map_err(|_| usage(format!("expected three comma-separated numbers, got `{s}`")))
}

/// `a:b:n` for `n` equally spaced points from `a` to `b` inclusive, or a
/// single value.
pub fn parse_grid(s: &str) -> anyhow::Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![parse_angle(v)?]),
        [a, b, n] => {
            let (a, b) = (parse_angle(a)?, parse_angle(b)?);
            let n: usize = n.trim().parse().map_err(|_| usage(format!("bad point count in `{s}`")))?;
            match n {
                0 => Err(usage(format!("empty range `{s}`"))),
                1 => Ok(vec![a]),
                _ => Ok(linspace(a, b, n)),
            }
        }
        _ => Err(usage(format!("expected `start:stop:count` or a single value, got `{s}`"))),
    }
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n).map(|i| if i + 1 == n { b } else { a + (b - a) * i as f64 / (n - 1) as f64 }).collect(),
    }
}

/// An index range: a single value, `a:b` in steps of one, or `all`
/// (`−l..l`).
pub fn parse_index_range(s: &str, l: HalfInt) -> anyhow::Result<Vec<HalfInt>> {
    let values: Vec<HalfInt> = if s.trim() == "all" {
        l.symmetric_range().collect()
    } else if let Some((a, b)) = s.split_once(':') {
        let (a, b) = (parse_half(a)?, parse_half(b)?);
        (a.twice()..=b.twice()).step_by(2).map(HalfInt::from_twice).collect()
    } else {
        vec![parse_half(s)?]
    };
    if values.is_empty() {
        return Err(usage(format!("empty index range `{s}`")));
    }
    Ok(values)
}
