//! Euler's gamma function on the complex plane.
//!
//! Lanczos approximation (g = 607/128, 15 terms) for `Re z ≥ 1/2`, reflection
//! `Γ(z)Γ(1−z) = π / sin(πz)` below that. Relative error stays under 1e−12
//! for `|z| ≤ 50`.

use std::f64::consts::PI;

use crate::{AdelicError, ComplexValue, Result};

/// Distance to the pole lattice at which `z` is declared a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Distance from `z` to the nearest non-positive integer.
pub fn distance_to_nonpositive_integer(z: ComplexValue) -> f64 {
    let n = z.re.round().min(0.0);
    ComplexValue::new(z.re - n, z.im).norm()
}

pub fn is_gamma_pole(z: ComplexValue) -> bool {
    distance_to_nonpositive_integer(z) < POLE_TOLERANCE
}

/// `sin(πz)` with the argument reduced by the nearest integer first, so that
/// values near the zeros keep their relative accuracy.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let n = z.re.round();
    let r = ComplexValue::new(z.re - n, z.im);
    let s = (r * PI).sin();
    if (n as i64).rem_euclid(2) == 0 {
        s
    } else {
        -s
    }
}

/// `ln Γ(z)` up to a multiple of 2πi, for `Re z ≥ 1/2`.
fn ln_gamma_right(z: ComplexValue) -> ComplexValue {
    let zm1 = z - 1.0;
    let mut series = ComplexValue::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    (zm1 + 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln()
}

/// Euler's Γ(z).
pub fn complex_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if is_gamma_pole(z) {
        return Err(AdelicError::Pole(format!("Γ has a pole at {z}")));
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z).exp())
    } else {
        let reflected = ln_gamma_right(1.0 - z).exp();
        Ok(PI / (sin_pi(z) * reflected))
    }
}

/// `1/Γ(z)`, entire; exactly zero on the pole lattice.
pub fn reciprocal_gamma(z: ComplexValue) -> ComplexValue {
    if is_gamma_pole(z) {
        return ComplexValue::new(0.0, 0.0);
    }
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        sin_pi(z) * ln_gamma_right(1.0 - z).exp() / PI
    }
}
