//! Plain-text rendering of reals and complex numbers.

use num_complex::Complex64 as C64;

/// `x` with 17 significant digits in the style of C's `%.17g`: fixed
/// notation for moderate exponents, scientific otherwise, trailing zeros
/// dropped.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("`e` formatting always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{}{:02}", trim_zeros(mantissa), if exp < 0 { '-' } else { '+' }, exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `re±im i`, e.g. `1+0i` or `0.5-2i`.
pub fn complex(z: C64) -> String {
    let im = g17(z.im);
    if im.starts_with('-') {
        format!("{}{}i", g17(z.re), im)
    } else {
        format!("{}+{}i", g17(z.re), im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g17() {
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(-2.5), "-2.5");
        assert_eq!(g17(1e-7), "9.9999999999999995e-08");
        assert_eq!(g17(1e20), "1e+20");
        assert_eq!(g17(123456.0), "123456");
        assert_eq!(g17(f64::INFINITY), "inf");
    }

    #[test]
    fn complex_signs() {
        assert_eq!(complex(C64::new(1.0, 0.0)), "1+0i");
        assert_eq!(complex(C64::new(0.5, -2.0)), "0.5-2i");
    }
}
