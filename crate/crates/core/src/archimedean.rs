//! Gamma- and beta-functions of the archimedean fields ℝ and ℂ.
//!
//! Characters of ℝ are `sgn^ν` with `ν ∈ F₂`; characters of ℂ are
//! `z^ν |z|^{-ν}` with `ν ∈ ℤ`. Powers of π and 2π are taken as
//! `exp(s ln base)` with the real logarithm, so there is no branch choice.

use std::f64::consts::PI;

use crate::gamma::{complex_gamma, distance_to_nonpositive_integer, is_gamma_pole, reciprocal_gamma};
use crate::{i_pow, real_pow, AdelicError, ComplexValue, Result};

/// Default bound on `|ν|` for characters of ℂ.
pub const MAX_COMPLEX_WEIGHT: i64 = 64;

/// Sign character exponent of ℝ, an element of F₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RealParity(u8);

impl RealParity {
    pub const EVEN: RealParity = RealParity(0);
    pub const ODD: RealParity = RealParity(1);

    pub fn new(nu: i64) -> RealParity {
        RealParity(nu.rem_euclid(2) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `(−1)^ν`.
    pub fn sign(self) -> f64 {
        if self.0 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

impl std::ops::Add for RealParity {
    type Output = RealParity;
    fn add(self, rhs: RealParity) -> RealParity {
        RealParity((self.0 + rhs.0) % 2)
    }
}

impl std::ops::Neg for RealParity {
    type Output = RealParity;
    fn neg(self) -> RealParity {
        self
    }
}

/// Weight of a unitary character of ℂ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ComplexWeight(i64);

impl ComplexWeight {
    pub fn new(nu: i64) -> Result<ComplexWeight> {
        if nu.abs() > MAX_COMPLEX_WEIGHT {
            return Err(AdelicError::Domain(format!("complex weight {nu} exceeds the bound {MAX_COMPLEX_WEIGHT}")));
        }
        Ok(ComplexWeight(nu))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> i64 {
        self.0.abs()
    }
}

/// `G_∞(α) = π^{−α/2} Γ(α/2)`.
pub fn g_infty(alpha: ComplexValue) -> Result<ComplexValue> {
    let half = alpha / 2.0;
    Ok(real_pow(PI, -half) * complex_gamma(half)?)
}

/// `G_{−∞}(α) = (2π)^{1−α} Γ(α)`.
pub fn g_minus_infty(alpha: ComplexValue) -> Result<ComplexValue> {
    Ok(real_pow(2.0 * PI, 1.0 - alpha) * complex_gamma(alpha)?)
}

/// `Γ_∞(α;ν) = i^{−ν} π^{1/2−α} Γ((α+ν)/2) / Γ((1−α+ν)/2)`.
///
/// Zeros of the ratio (poles of the denominator) give an exact zero.
pub fn gamma_real(alpha: ComplexValue, nu: RealParity) -> Result<ComplexValue> {
    let nu_f = nu.value() as f64;
    let num = (alpha + nu_f) / 2.0;
    if is_gamma_pole(num) {
        return Err(AdelicError::Pole(format!("Γ_∞(α;{}) has a pole at α = {alpha}", nu.value())));
    }
    let den = (1.0 - alpha + nu_f) / 2.0;
    let ratio = complex_gamma(num)? * reciprocal_gamma(den);
    Ok(i_pow(-(nu.value() as i64)) * real_pow(PI, 0.5 - alpha) * ratio)
}

/// `Γ_{−∞}(α;ν) = i^{−|ν|} (2π)^{1−2α} Γ(α+|ν|/2) / Γ(1−α+|ν|/2)`.
pub fn gamma_complex_field(alpha: ComplexValue, nu: ComplexWeight) -> Result<ComplexValue> {
    let half = nu.abs() as f64 / 2.0;
    let num = alpha + half;
    if is_gamma_pole(num) {
        return Err(AdelicError::Pole(format!("Γ_{{−∞}}(α;{}) has a pole at α = {alpha}", nu.value())));
    }
    let ratio = complex_gamma(num)? * reciprocal_gamma(1.0 - alpha + half);
    Ok(i_pow(-nu.abs()) * real_pow(2.0 * PI, 1.0 - 2.0 * alpha) * ratio)
}

/// `B_∞(α,ν;β,μ) = Γ_∞(α;ν) Γ_∞(β;μ) Γ_∞(1−α−β;−ν−μ)`.
pub fn beta_real(alpha: ComplexValue, nu: RealParity, beta: ComplexValue, mu: RealParity) -> Result<ComplexValue> {
    let gamma = 1.0 - alpha - beta;
    let eta = -(nu + mu);
    Ok(gamma_real(alpha, nu)? * gamma_real(beta, mu)? * gamma_real(gamma, eta)?)
}

/// `B_{−∞}(α,ν;β,μ) = Γ_{−∞}(α;ν) Γ_{−∞}(β;μ) Γ_{−∞}(1−α−β;−ν−μ)`.
pub fn beta_complex_field(
    alpha: ComplexValue,
    nu: ComplexWeight,
    beta: ComplexValue,
    mu: ComplexWeight,
) -> Result<ComplexValue> {
    let gamma = 1.0 - alpha - beta;
    let eta = ComplexWeight::new(-(nu.value() + mu.value()))?;
    Ok(gamma_complex_field(alpha, nu)? * gamma_complex_field(beta, mu)? * gamma_complex_field(gamma, eta)?)
}

/// Distance, measured in α, from the pole set of `Γ_∞(α;ν)`.
pub fn gamma_real_pole_distance(alpha: ComplexValue, nu: RealParity) -> f64 {
    2.0 * distance_to_nonpositive_integer((alpha + nu.value() as f64) / 2.0)
}

/// Distance, measured in α, from the pole set of `Γ_{−∞}(α;ν)`.
pub fn gamma_complex_pole_distance(alpha: ComplexValue, nu: ComplexWeight) -> f64 {
    distance_to_nonpositive_integer(alpha + nu.abs() as f64 / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn g_functions() {
        assert!(rel(g_infty(c(1.0, 0.0)).unwrap(), c(1.0, 0.0)) < 1e-14);
        assert!(rel(g_infty(c(2.0, 0.0)).unwrap(), c(1.0 / PI, 0.0)) < 1e-14);
        assert!(matches!(g_infty(c(0.0, 0.0)), Err(AdelicError::Pole(_))));
        assert!(matches!(g_infty(c(-4.0, 0.0)), Err(AdelicError::Pole(_))));
        assert!(rel(g_minus_infty(c(1.0, 0.0)).unwrap(), c(1.0, 0.0)) < 1e-14);
        assert!(rel(g_minus_infty(c(2.0, 0.0)).unwrap(), c(1.0 / (2.0 * PI), 0.0)) < 1e-14);
        assert!(matches!(g_minus_infty(c(-1.0, 0.0)), Err(AdelicError::Pole(_))));
    }

    #[test]
    fn gamma_real_examples() {
        assert!(rel(gamma_real(c(0.5, 0.0), RealParity::EVEN).unwrap(), c(1.0, 0.0)) < 1e-14);
        assert!(rel(gamma_real(c(0.5, 0.0), RealParity::ODD).unwrap(), c(0.0, -1.0)) < 1e-14);
        let v = gamma_real(c(-1.0, 0.0), RealParity::EVEN).unwrap();
        assert!(rel(v, c(-2.0 * PI * PI, 0.0)) < 1e-13, "{v}");
        assert!(matches!(gamma_real(c(0.0, 0.0), RealParity::EVEN), Err(AdelicError::Pole(_))));
        assert!(matches!(gamma_real(c(-1.0, 0.0), RealParity::ODD), Err(AdelicError::Pole(_))));
        // denominator pole at α = 1 (ν=0): an exact zero
        assert_eq!(gamma_real(c(1.0, 0.0), RealParity::EVEN).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn gamma_complex_examples() {
        let w = |n| ComplexWeight::new(n).unwrap();
        assert!(rel(gamma_complex_field(c(0.5, 0.0), w(0)).unwrap(), c(1.0, 0.0)) < 1e-14);
        assert!(rel(gamma_complex_field(c(0.5, 0.0), w(2)).unwrap(), c(-1.0, 0.0)) < 1e-14);
        assert!(rel(gamma_complex_field(c(0.5, 0.0), w(-2)).unwrap(), c(-1.0, 0.0)) < 1e-14);
        assert!(ComplexWeight::new(65).is_err());
    }

    #[test]
    fn beta_examples() {
        let (a, b) = (c(0.5, 0.0), c(0.25, 0.0));
        let e = RealParity::EVEN;
        let want = gamma_real(a, e).unwrap() * gamma_real(b, e).unwrap() * gamma_real(c(0.25, 0.0), e).unwrap();
        assert!(rel(beta_real(a, e, b, e).unwrap(), want) < 1e-14);

        let m1 = c(-1.0, 0.0);
        let want = gamma_real(m1, e).unwrap().powi(2) * gamma_real(c(3.0, 0.0), e).unwrap();
        assert!(rel(beta_real(m1, e, m1, e).unwrap(), want) < 1e-13);

        let w = |n| ComplexWeight::new(n).unwrap();
        let want = gamma_complex_field(a, w(0)).unwrap()
            * gamma_complex_field(b, w(0)).unwrap()
            * gamma_complex_field(c(0.25, 0.0), w(0)).unwrap();
        assert!(rel(beta_complex_field(a, w(0), b, w(0)).unwrap(), want) < 1e-14);

        // ν + μ + η = 0 leaves η = 0 for (1, −1)
        let want = gamma_complex_field(a, w(1)).unwrap()
            * gamma_complex_field(b, w(-1)).unwrap()
            * gamma_complex_field(c(0.25, 0.0), w(0)).unwrap();
        assert!(rel(beta_complex_field(a, w(1), b, w(-1)).unwrap(), want) < 1e-14);
    }

    fn strip_point() -> impl Strategy<Value = ComplexValue> {
        (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(re, im)| ComplexValue::new(re, im))
    }

    proptest! {
        #[test]
        fn real_reflection(a in strip_point(), nu in 0i64..2) {
            let nu = RealParity::new(nu);
            prop_assume!(gamma_real_pole_distance(a, nu) >= 0.1 && gamma_real_pole_distance(1.0 - a, nu) >= 0.1);
            let p = gamma_real(a, nu).unwrap() * gamma_real(1.0 - a, nu).unwrap();
            prop_assert!(rel(p, c(nu.sign(), 0.0)) < 1e-10);
        }

        #[test]
        fn real_ratio_form(a in strip_point(), nu in 0i64..2) {
            let par = RealParity::new(nu);
            prop_assume!(gamma_real_pole_distance(a, par) >= 0.1 && gamma_real_pole_distance(1.0 - a, par) >= 0.1);
            let ratio = i_pow(-nu) * g_infty(a + nu as f64).unwrap() / g_infty(1.0 - a + nu as f64).unwrap();
            prop_assert!(rel(gamma_real(a, par).unwrap(), ratio) < 1e-10);
        }

        #[test]
        fn complex_weight_symmetry(a in strip_point(), nu in -6i64..7) {
            let w = ComplexWeight::new(nu).unwrap();
            prop_assume!(gamma_complex_pole_distance(a, w) >= 0.1);
            let lhs = gamma_complex_field(a, w).unwrap();
            let rhs = gamma_complex_field(a, ComplexWeight::new(-nu).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn complex_ratio_form(a in strip_point(), nu in -6i64..7) {
            let w = ComplexWeight::new(nu).unwrap();
            let h = nu.abs() as f64 / 2.0;
            prop_assume!(gamma_complex_pole_distance(a, w) >= 0.1 && gamma_complex_pole_distance(1.0 - a, w) >= 0.1);
            let ratio = i_pow(-nu.abs()) * g_minus_infty(a + h).unwrap() / g_minus_infty(1.0 - a + h).unwrap();
            prop_assert!(rel(gamma_complex_field(a, w).unwrap(), ratio) < 1e-10);
        }
    }
}
