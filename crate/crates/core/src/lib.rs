//! Local gamma- and beta-functions of every completion of a number field,
//! and numerical verification of the regularized adelic product formulas
//! they satisfy.
//!
//! The crate is split the same way the mathematics is:
//!
//! | module | contents |
//! |--------|----------|
//! | [`gamma`] | complex Euler gamma kernel |
//! | [`archimedean`] | gamma/beta of ℝ and ℂ for sign/weight characters |
//! | [`nonarch`] | reduced gamma Γ_q, beta B_q, ramified gamma, Gauss sums |
//! | [`places`] | ℚ, ℚ(√d), ℚ(ζ_m) and the splitting of rational primes |
//! | [`characters`] | Dirichlet characters and the idele-class characters built from them |
//! | [`oracle`] | ζ, Hurwitz ζ, Dirichlet L and Dedekind ζ with continuation |
//! | [`regularization`] | truncated Euler products and the identity checks |
//! | [`report`] | verification reports and their CSV/JSON encodings |
//!
//! All arithmetic is binary64. Poles are reported as [`AdelicError::Pole`],
//! never encoded as large finite values.

mod angle;
pub mod archimedean;
pub mod arith;
pub mod characters;
mod error;
pub mod gamma;
pub mod literal;
pub mod nonarch;
pub mod oracle;
pub mod places;
mod reduce;
pub mod regularization;
pub mod report;

pub use angle::Angle;
pub use error::{AdelicError, Result};

/// Complex scalar used for exponents, local factors and L-values.
pub type ComplexValue = num_complex::Complex64;

/// Integer power of `i`, exact.
pub fn i_pow(k: i64) -> ComplexValue {
    match k.rem_euclid(4) {
        0 => ComplexValue::new(1.0, 0.0),
        1 => ComplexValue::new(0.0, 1.0),
        2 => ComplexValue::new(-1.0, 0.0),
        _ => ComplexValue::new(0.0, -1.0),
    }
}

/// `base^s` for a positive real base, as `exp(s ln base)`.
pub fn real_pow(base: f64, s: ComplexValue) -> ComplexValue {
    debug_assert!(base > 0.0);
    (s * base.ln()).exp()
}

pub(crate) fn ensure_finite(z: ComplexValue, what: &str) -> Result<ComplexValue> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(AdelicError::Domain(format!("{what} is not representable in binary64")))
    }
}
