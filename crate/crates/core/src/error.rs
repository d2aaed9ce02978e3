use core::fmt;

use crate::C64;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A named parameter is outside its admissible range.
    OutOfRange { name: &'static str, value: f64 },
    /// A 2×2 complex matrix whose determinant is not 1.
    NotUnimodular { det: C64 },
    /// Index triple `(l, m, n)` violating `|m|,|n| ≤ l` or the parity rule.
    InvalidIndex { twice_l: i32, twice_m: i32, twice_n: i32 },
    /// A hypergeometric parameter set that does not give a finite sum.
    UnsupportedParameters { a: f64, b: f64, c: f64 },
    /// Zero wave vector where a propagation direction is required.
    DegenerateWaveVector,
    /// Evaluation point on (or too close to) a coordinate singularity.
    SingularPoint { what: &'static str, value: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange { name, value } => {
                write!(f, "parameter `{name}` out of range: {value}")
            }
            Error::NotUnimodular { det } => {
                write!(f, "matrix is not unimodular: det = {}{:+}i", det.re, det.im)
            }
            Error::InvalidIndex { twice_l, twice_m, twice_n } => write!(
                f,
                "invalid index (l, m, n) = ({}/2, {}/2, {}/2)",
                twice_l, twice_m, twice_n
            ),
            Error::UnsupportedParameters { a, b, c } => {
                write!(f, "2F1({a}, {b}; {c}; x) is not a terminating series")
            }
            Error::DegenerateWaveVector => f.write_str("wave vector has zero length"),
            Error::SingularPoint { what, value } => {
                write!(f, "evaluation point too close to a singularity: {what} = {value}")
            }
        }
    }
}

impl core::error::Error for Error {}
