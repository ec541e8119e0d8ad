//! Number rendering shared by the table, CSV and CLI outputs.

use std::f64::consts::PI;

/// Shortest decimal with at most `sig` significant digits, trailing zeros
/// trimmed: `2/3 → "0.666666666667"`, `1.25 → "1.25"`, `0 → "0"`.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if exp < -5 || exp >= sig as i32 {
        let m = trim_zeros(mantissa);
        return format!("{m}e{exp}");
    }
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    let s = trim_zeros(&s);
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Fixed scientific notation with 12 significant digits and a signed,
/// at-least-two-digit exponent: `1.00000000000e-04`.
pub fn sci12(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{:.11e}", x);
    let (mantissa, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

/// A phase reduced to `[0, 2)` in units of π, snapping values within
/// rounding of 2 back to 0.
pub fn phase_in_pi(phase: f64) -> f64 {
    let x = (phase / PI).rem_euclid(2.0);
    if 2.0 - x < 1e-12 {
        0.0
    } else {
        x
    }
}
