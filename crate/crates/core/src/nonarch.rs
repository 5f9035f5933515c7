//! Local gamma- and beta-functions of p-adic fields.
//!
//! For an unramified character the local gamma-function reduces to
//! `Γ_q(α) = (1 − q^{α−1}) / (1 − q^{−α})`, which satisfies
//! `Γ_q(α) Γ_q(1−α) = 1`. A ramified character of rank ρ contributes the
//! monomial `κ(θ) q^{(α−1/2)(r+ρ)}`, with κ a normalized Gauss sum.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::angle::turn_to_complex;
use crate::arith::{gcd, is_prime};
use crate::gamma::POLE_TOLERANCE;
use crate::{real_pow, AdelicError, Angle, ComplexValue, Result};

/// Residue field size `q = p^f` of a finite place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ResidueModule {
    p: u64,
    f: u32,
}

impl ResidueModule {
    pub fn new(p: u64, f: u32) -> Result<ResidueModule> {
        if !is_prime(p) || f == 0 {
            return Err(AdelicError::Domain(format!("{p}^{f} is not a residue field size")));
        }
        Ok(ResidueModule { p, f })
    }

    /// For `p` already known to be prime, e.g. from a sieve.
    pub(crate) fn new_unchecked(p: u64, f: u32) -> ResidueModule {
        debug_assert!(f > 0);
        ResidueModule { p, f }
    }

    /// Reads `q` as a prime power.
    pub fn from_q(q: u64) -> Result<ResidueModule> {
        let (p, f) =
            crate::arith::prime_power(q).ok_or_else(|| AdelicError::Parse(format!("q = {q} is not a prime power")))?;
        ResidueModule::new(p, f)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// `q = p^f`, if it fits in 128 bits.
    pub fn q(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.f)
    }

    pub fn ln_q(&self) -> f64 {
        self.f as f64 * (self.p as f64).ln()
    }

    /// `q^s`.
    pub fn pow(&self, s: ComplexValue) -> ComplexValue {
        (s * self.ln_q()).exp()
    }
}

/// Distance, in α, from the zero set of `1 − λ q^{−α}` (λ unimodular).
///
/// That set is the lattice `(i arg λ + 2πik) / ln q`, periodic in `Im α`.
pub fn euler_factor_zero_distance(alpha: ComplexValue, q: &ResidueModule, lambda: ComplexValue) -> f64 {
    let ln_q = q.ln_q();
    let period = TAU / ln_q;
    let shifted = alpha.im - lambda.arg() / ln_q;
    let k = (shifted / period).round();
    ComplexValue::new(alpha.re, shifted - k * period).norm()
}

/// Reduced gamma-function `Γ_q(α)`.
pub fn gamma_q(alpha: ComplexValue, q: &ResidueModule) -> Result<ComplexValue> {
    gamma_q_twisted(alpha, q, ComplexValue::new(1.0, 0.0))
}

/// `Γ_q(α + iα_v)` where the unramified twist is given by its Frobenius
/// value `λ = q^{−iα_v}`: `(1 − λ̄ q^{α−1}) / (1 − λ q^{−α})`.
pub fn gamma_q_twisted(alpha: ComplexValue, q: &ResidueModule, lambda: ComplexValue) -> Result<ComplexValue> {
    if euler_factor_zero_distance(alpha, q, lambda) < POLE_TOLERANCE {
        return Err(AdelicError::Pole(format!("Γ_q has a pole at α = {alpha} (p = {}, f = {})", q.p, q.f)));
    }
    let num = 1.0 - lambda.conj() * q.pow(alpha - 1.0);
    let den = 1.0 - lambda * q.pow(-alpha);
    Ok(num / den)
}

/// `B_q(α,β) = Γ_q(α) Γ_q(β) Γ_q(1−α−β)`.
pub fn beta_q(alpha: ComplexValue, beta: ComplexValue, q: &ResidueModule) -> Result<ComplexValue> {
    Ok(gamma_q(alpha, q)? * gamma_q(beta, q)? * gamma_q(1.0 - alpha - beta, q)?)
}

/// Unit-group character of `ℤ_p` of conductor exponent ρ, tabulated on
/// residues mod `p^ρ`; normalized by `θ(p) = 1`, so only units carry values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamifiedLocalCharacter {
    p: u64,
    rank: u32,
    additive_rank: i32,
    values: Vec<Option<Angle>>,
}

impl RamifiedLocalCharacter {
    /// `values[x]` is `θ(x)` for every unit residue `x` mod `p^rank` and
    /// `None` elsewhere.
    pub fn new(p: u64, rank: u32, additive_rank: i32, values: Vec<Option<Angle>>) -> Result<Self> {
        if !is_prime(p) || rank == 0 {
            return Err(AdelicError::Domain(format!("bad ramified data p = {p}, ρ = {rank}")));
        }
        let modulus = p.pow(rank);
        if values.len() as u64 != modulus {
            return Err(AdelicError::Domain(format!("table has {} entries, expected {modulus}", values.len())));
        }
        for (x, v) in values.iter().enumerate() {
            if v.is_some() != (gcd(x as u64, p) == 1) {
                return Err(AdelicError::Domain(format!("value table is wrong at residue {x}")));
            }
        }
        if values[1 % modulus as usize] != Some(Angle::ZERO) {
            return Err(AdelicError::Domain("θ(1) must be 1".into()));
        }
        let chi = RamifiedLocalCharacter { p, rank, additive_rank, values };
        if !chi.is_primitive() {
            return Err(AdelicError::NotPrimitive(format!(
                "local character is induced from a modulus below {p}^{rank}"
            )));
        }
        Ok(chi)
    }

    /// θ is primitive iff it is nontrivial on `1 + p^{ρ−1} ℤ_p`
    /// (on all units when ρ = 1).
    fn is_primitive(&self) -> bool {
        let step = self.p.pow(self.rank - 1);
        let modulus = self.modulus();
        (0..self.p)
            .map(|k| (1 + k * step) % modulus)
            .filter(|&x| gcd(x, self.p) == 1)
            .any(|x| self.values[x as usize] != Some(Angle::ZERO))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn additive_rank(&self) -> i32 {
        self.additive_rank
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.rank)
    }

    /// `θ(x)` for a unit `x`; `None` when `p | x`.
    pub fn angle(&self, x: i64) -> Option<Angle> {
        let m = self.modulus() as i64;
        self.values[x.rem_euclid(m) as usize]
    }

    pub fn value(&self, x: i64) -> ComplexValue {
        self.angle(x).map_or(ComplexValue::new(0.0, 0.0), Angle::to_complex)
    }

    pub fn conj(&self) -> RamifiedLocalCharacter {
        RamifiedLocalCharacter { values: self.values.iter().map(|v| v.map(|a| -a)).collect(), ..self.clone() }
    }
}

/// Local root number `κ(θ) = p^{−ρ/2} Σ_{x ∈ (ℤ/p^ρ)^×} θ(x) e^{2πi x/p^ρ}`.
///
/// Each summand's phase is formed as an exact fraction before conversion.
pub fn kappa_local(chi: &RamifiedLocalCharacter) -> Result<ComplexValue> {
    if chi.additive_rank != 0 {
        return Err(AdelicError::UnsupportedField(format!(
            "root numbers with additive rank r = {} (only r = 0 over ℚ)",
            chi.additive_rank
        )));
    }
    let m = chi.modulus();
    let mut sum = ComplexValue::new(0.0, 0.0);
    for x in 0..m {
        if let Some(theta) = chi.values[x as usize] {
            let den = theta.denominator() as u128 * m as u128;
            let num = theta.numerator() as u128 * m as u128 + x as u128 * theta.denominator() as u128;
            sum += turn_to_complex(num, den);
        }
    }
    Ok(sum / (m as f64).sqrt())
}

/// Value of the ramified local gamma-function, with its monomial data kept
/// separate: `value = kappa · base^{(α−1/2)·exponent}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RamifiedGamma {
    pub kappa: ComplexValue,
    pub base: u64,
    pub exponent: i64,
    pub value: ComplexValue,
}

/// `Γ(α;θ) = κ(θ) q^{(α−1/2)(r+ρ)}` with `q = p` (ℚ_p has residue degree 1).
pub fn gamma_ramified(alpha: ComplexValue, chi: &RamifiedLocalCharacter) -> Result<RamifiedGamma> {
    let kappa = kappa_local(chi)?;
    let exponent = chi.additive_rank as i64 + chi.rank as i64;
    let value = kappa * real_pow(chi.p as f64, (alpha - 0.5) * exponent as f64);
    Ok(RamifiedGamma { kappa, base: chi.p, exponent, value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn q(n: u64) -> ResidueModule {
        ResidueModule::from_q(n).unwrap()
    }

    fn chi_mod4() -> RamifiedLocalCharacter {
        RamifiedLocalCharacter::new(2, 2, 0, vec![None, Some(Angle::ZERO), None, Some(Angle::new(1, 2))]).unwrap()
    }

    fn chi_mod3() -> RamifiedLocalCharacter {
        RamifiedLocalCharacter::new(3, 1, 0, vec![None, Some(Angle::ZERO), Some(Angle::new(1, 2))]).unwrap()
    }

    #[test]
    fn gamma_q_examples() {
        assert!((gamma_q(c(0.5, 0.0), &q(2)).unwrap() - 1.0).norm() < 1e-15);
        assert!((gamma_q(c(-1.0, 0.0), &q(2)).unwrap() - c(-0.75, 0.0)).norm() < 1e-15);
        assert!((gamma_q(c(2.0, 0.0), &q(3)).unwrap() - c(-2.25, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn gamma_q_pole_lattice_is_periodic() {
        let q5 = q(5);
        let period = TAU / q5.ln_q();
        for k in -3..=3 {
            let a = c(0.0, k as f64 * period);
            assert!(matches!(gamma_q(a, &q5), Err(AdelicError::Pole(_))), "k = {k}");
        }
        assert!(gamma_q(c(0.0, 0.5 * period), &q5).is_ok());
        // the twist moves the lattice: λ = −1 puts poles at Im α = π/ln q
        let minus = c(-1.0, 0.0);
        assert!(matches!(gamma_q_twisted(c(0.0, 0.5 * period), &q5, minus), Err(AdelicError::Pole(_))));
        assert!(gamma_q_twisted(c(0.0, 0.0), &q5, minus).is_ok());
    }

    #[test]
    fn gamma_q_half_is_one() {
        for n in [2u64, 3, 4, 5, 7, 8, 9, 25, 49, 121, 1024] {
            assert!((gamma_q(c(0.5, 0.0), &q(n)).unwrap() - 1.0).norm() < 1e-14);
        }
    }

    #[test]
    fn beta_q_examples() {
        let q2 = q(2);
        let v = beta_q(c(-1.0, 0.0), c(0.5, 0.0), &q2).unwrap();
        // (−3/4) · 1 · Γ_2(3/2) = (−3/4)(1 − 2^{1/2})/(1 − 2^{−3/2})
        let want = -0.75 * (1.0 - 2f64.sqrt()) / (1.0 - 2f64.powf(-1.5));
        assert!((v - want).norm() < 1e-15);
        assert!((v.re - 0.480_565_9).abs() < 1e-7);
        let (a, b) = (c(-0.3, 0.2), c(0.7, -1.1));
        assert!((beta_q(a, b, &q(7)).unwrap() - beta_q(b, a, &q(7)).unwrap()).norm() < 1e-14);
        // γ = 1/2 leaves Γ_q(α)Γ_q(β)
        let (a, b) = (c(0.2, 0.3), c(0.3, -0.3));
        let want = gamma_q(a, &q(3)).unwrap() * gamma_q(b, &q(3)).unwrap();
        assert!((beta_q(a, b, &q(3)).unwrap() - want).norm() < 1e-14);
    }

    #[test]
    fn kappa_examples() {
        let k4 = kappa_local(&chi_mod4()).unwrap();
        assert!((k4 - c(0.0, 1.0)).norm() < 1e-15);
        let k3 = kappa_local(&chi_mod3()).unwrap();
        assert!((k3 - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn ramified_gamma_examples() {
        let g = gamma_ramified(c(0.5, 0.0), &chi_mod4()).unwrap();
        assert!((g.value - c(0.0, 1.0)).norm() < 1e-15);
        let g = gamma_ramified(c(1.5, 0.0), &chi_mod4()).unwrap();
        assert_eq!((g.base, g.exponent), (2, 2));
        assert!((g.value - c(0.0, 4.0)).norm() < 1e-14);
        let a = c(-0.7, 2.0);
        let g = gamma_ramified(a, &chi_mod3()).unwrap();
        assert!((g.value.norm() - 3f64.powf(a.re - 0.5)).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_local_data() {
        let trivial3 = vec![None, Some(Angle::ZERO), Some(Angle::ZERO)];
        assert!(matches!(RamifiedLocalCharacter::new(3, 1, 0, trivial3), Err(AdelicError::NotPrimitive(_))));
        // χ mod 4 pulled back to mod 8 is not primitive
        let induced = (0..8)
            .map(|x| {
                if x % 2 == 0 {
                    None
                } else if x % 4 == 1 {
                    Some(Angle::ZERO)
                } else {
                    Some(Angle::new(1, 2))
                }
            })
            .collect();
        assert!(matches!(RamifiedLocalCharacter::new(2, 3, 0, induced), Err(AdelicError::NotPrimitive(_))));
        let with_r =
            RamifiedLocalCharacter::new(3, 1, 1, vec![None, Some(Angle::ZERO), Some(Angle::new(1, 2))]).unwrap();
        assert!(matches!(kappa_local(&with_r), Err(AdelicError::UnsupportedField(_))));
        assert!(matches!(gamma_ramified(c(0.0, 0.0), &with_r), Err(AdelicError::UnsupportedField(_))));
    }
}
