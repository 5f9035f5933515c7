//! Truncated Euler products, regularized products of local gamma- and
//! beta-functions over the unramified places, and checks of the identities
//! they satisfy.
//!
//! The regularized gamma product at cutoff V is computed as
//! `L(α;ω) · Π_{v ∈ F_V} Γ_{q_v}(α;λ_v)(1 − λ_v q_v^{−α})`, with `F_V` the
//! unramified places above primes `p < V`. Each place factor equals
//! `1 − \bar λ_v q_v^{α−1}` and tends to 1, so the product is accumulated as a
//! sum of principal logarithms without overflow, even though `Π Γ_q` and
//! `L_V(α;ω)` separately grow like `e^{c V}` when `Re α < 0`.

use std::str::FromStr;

use crate::archimedean::{
    beta_complex_field, beta_real, gamma_complex_field, gamma_complex_pole_distance, gamma_real,
    gamma_real_pole_distance, ComplexWeight,
};
use crate::characters::{beta_constant, gamma_constant, ArchimedeanComponent, IdeleClassCharacter};
use crate::nonarch::gamma_q_twisted;
use crate::oracle::LFunctionHandle;
use crate::places::{enumerate_finite_places, FinitePlace};
use crate::reduce::{ordered_map, ordered_sum, prefix_sums_at};
use crate::report::{ReportRecord, VerificationReport, DEFAULT_TOLERANCE};
use crate::{ensure_finite, real_pow, AdelicError, ComplexValue, Result};

/// Minimum distance of α from the archimedean pole lattices in the
/// regularized identities.
pub const ARCHIMEDEAN_POLE_MARGIN: f64 = 0.1;

/// Minimum distance from poles for the finite-V identity.
pub const FINITE_V_POLE_MARGIN: f64 = 1e-6;

/// Tolerance of the finite-V identity report.
pub const FINITE_V_TOLERANCE: f64 = 1e-8;

/// Strictly increasing list of prime bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncationSchedule {
    cutoffs: Vec<u64>,
}

impl TruncationSchedule {
    pub fn new(cutoffs: Vec<u64>) -> Result<TruncationSchedule> {
        if cutoffs.is_empty() {
            return Err(AdelicError::InvalidSchedule("schedule is empty".into()));
        }
        if cutoffs[0] < 2 {
            return Err(AdelicError::InvalidSchedule("cutoffs must be at least 2".into()));
        }
        if cutoffs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AdelicError::InvalidSchedule(format!("cutoffs {cutoffs:?} are not strictly increasing")));
        }
        Ok(TruncationSchedule { cutoffs })
    }

    /// `2^a, 2^{a+1}, …, 2^b`.
    pub fn powers_of_two(a: u32, b: u32) -> Result<TruncationSchedule> {
        if b < a || b > 40 {
            return Err(AdelicError::InvalidSchedule(format!("bad exponent range {a}..{b}")));
        }
        TruncationSchedule::new((a..=b).map(|k| 1u64 << k).collect())
    }

    pub fn cutoffs(&self) -> &[u64] {
        &self.cutoffs
    }

    pub fn final_cutoff(&self) -> u64 {
        *self.cutoffs.last().expect("nonempty")
    }

    /// Every cutoff must exceed the ramified primes of the characters.
    fn check_for(&self, characters: &[&IdeleClassCharacter]) -> Result<()> {
        let largest = characters.iter().filter_map(|w| w.largest_ramified_prime()).max();
        match largest {
            Some(p) if self.cutoffs[0] <= p => Err(AdelicError::InvalidSchedule(format!(
                "first cutoff {} does not exceed the ramified prime {p}",
                self.cutoffs[0]
            ))),
            _ => Ok(()),
        }
    }
}

impl Default for TruncationSchedule {
    fn default() -> Self {
        TruncationSchedule::powers_of_two(8, 17).expect("valid default")
    }
}

impl FromStr for TruncationSchedule {
    type Err = AdelicError;

    /// `2^a..2^b`, or a comma-separated list of integers and `2^k` terms.
    fn from_str(s: &str) -> Result<TruncationSchedule> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || AdelicError::InvalidSchedule(format!("cannot read schedule {s:?}"));
        let exponent = |t: &str| -> Result<u32> {
            t.strip_prefix("2^").and_then(|e| e.parse().ok()).filter(|&e| e <= 40).ok_or_else(bad)
        };
        if let Some((lo, hi)) = compact.split_once("..") {
            return TruncationSchedule::powers_of_two(exponent(lo)?, exponent(hi)?);
        }
        let cutoffs = compact
            .split(',')
            .map(|t| if t.starts_with("2^") { exponent(t).map(|e| 1u64 << e) } else { t.parse().map_err(|_| bad()) })
            .collect::<Result<Vec<u64>>>()?;
        TruncationSchedule::new(cutoffs)
    }
}

/// Values of a regularized product at each cutoff of a schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizedProduct {
    pub cutoffs: Vec<u64>,
    pub values: Vec<ComplexValue>,
}

impl RegularizedProduct {
    pub fn final_value(&self) -> ComplexValue {
        *self.values.last().expect("nonempty schedule")
    }
}

/// Places of `ω.field()` above `p < bound` at which ω is unramified,
/// in ascending `(p, q)` order.
pub fn unramified_places(omega: &IdeleClassCharacter, bound: u64) -> Vec<FinitePlace> {
    enumerate_finite_places(omega.field(), bound).into_iter().filter(|v| !omega.is_ramified_at(v.prime)).collect()
}

fn check_log(z: ComplexValue, what: &str) -> Result<ComplexValue> {
    if z.norm() == 0.0 {
        return Err(AdelicError::Domain(format!("{what} vanishes")));
    }
    ensure_finite(z.ln(), what)
}

/// `ln(1 − λ q^{−α})`.
fn ln_euler_inverse(alpha: ComplexValue, place: &FinitePlace, lambda: ComplexValue) -> Result<ComplexValue> {
    check_log(1.0 - lambda * place.module.pow(-alpha), "Euler factor")
}

fn sum_over(
    places: &[FinitePlace],
    term: impl Fn(&FinitePlace) -> Result<ComplexValue> + Sync + Send,
) -> Result<ComplexValue> {
    Ok(ordered_sum(&ordered_map(places, term)?))
}

/// `Π_{v unramified, V ≤ p < tail_bound} (1 − λ(v) q_v^{−α})^{−1}` for `Re α > 1`.
pub fn l_truncated_tail(
    alpha: ComplexValue,
    omega: &IdeleClassCharacter,
    cutoff: u64,
    tail_bound: u64,
) -> Result<ComplexValue> {
    if alpha.re <= 1.0 {
        return Err(AdelicError::Domain(format!("tail product needs Re α > 1, got α = {alpha}")));
    }
    if cutoff >= tail_bound {
        return Ok(ComplexValue::new(1.0, 0.0));
    }
    let places: Vec<FinitePlace> =
        unramified_places(omega, tail_bound).into_iter().filter(|v| v.prime >= cutoff).collect();
    let log = sum_over(&places, |v| ln_euler_inverse(alpha, v, omega.lambda(v)))?;
    ensure_finite((-log).exp(), "truncated L-function")
}

/// `ln L_V(α;ω) = ln L(α;ω) + Σ_{v unramified, p < V} ln(1 − λ(v) q_v^{−α})`,
/// valid at every α where the oracle L-value is nonzero.
pub fn ln_l_truncated_via_oracle(
    alpha: ComplexValue,
    omega: &IdeleClassCharacter,
    cutoff: u64,
) -> Result<ComplexValue> {
    let l = LFunctionHandle::for_character(omega)?.eval(alpha)?;
    let places = unramified_places(omega, cutoff);
    Ok(check_log(l, "L-function")? + sum_over(&places, |v| ln_euler_inverse(alpha, v, omega.lambda(v)))?)
}

/// `L_V(α;ω) = L(α;ω) · Π_{v unramified, p < V} (1 − λ(v) q_v^{−α})`.
pub fn l_truncated_via_oracle(alpha: ComplexValue, omega: &IdeleClassCharacter, cutoff: u64) -> Result<ComplexValue> {
    ensure_finite(ln_l_truncated_via_oracle(alpha, omega, cutoff)?.exp(), "truncated L-function")
}

/// `Π_{v ∈ F_V} Γ_{q_v}(α;λ_v) · L_V(α;ω)` at every cutoff, for `Re α < 0`.
pub fn reg_gamma_product(
    omega: &IdeleClassCharacter,
    alpha: ComplexValue,
    schedule: &TruncationSchedule,
) -> Result<RegularizedProduct> {
    if alpha.re >= 0.0 {
        return Err(AdelicError::Domain(format!(
            "regularized product needs Re α < 0, got α = {alpha}; use the continued value instead"
        )));
    }
    schedule.check_for(&[omega])?;
    let l = LFunctionHandle::for_character(omega)?.eval(alpha)?;
    let places = unramified_places(omega, schedule.final_cutoff());
    let terms = ordered_map(&places, |v| {
        let lambda = omega.lambda(v);
        let factor = gamma_q_twisted(alpha, &v.module, lambda)? * (1.0 - lambda * v.module.pow(-alpha));
        check_log(factor, "local gamma factor")
    })?;
    finish_product(l, &places, &terms, schedule)
}

fn finish_product(
    scale: ComplexValue,
    places: &[FinitePlace],
    terms: &[ComplexValue],
    schedule: &TruncationSchedule,
) -> Result<RegularizedProduct> {
    let keys: Vec<u64> = places.iter().map(|v| v.prime).collect();
    let values = prefix_sums_at(&keys, terms, schedule.cutoffs())
        .into_iter()
        .map(|s| ensure_finite(scale * s.exp(), "regularized product"))
        .collect::<Result<_>>()?;
    Ok(RegularizedProduct { cutoffs: schedule.cutoffs().to_vec(), values })
}

fn pole_error(alpha: ComplexValue, distance: f64, margin: f64) -> Result<()> {
    if distance < margin {
        Err(AdelicError::Pole(format!("α = {alpha} is within {distance:.3e} of an archimedean pole (margin {margin})")))
    } else {
        Ok(())
    }
}

/// `Π_v Γ_v(α;ν_v)` over the archimedean places, rejecting α closer than
/// `margin` to a pole.
pub fn archimedean_gamma_factor(omega: &IdeleClassCharacter, alpha: ComplexValue, margin: f64) -> Result<ComplexValue> {
    let mut value = ComplexValue::new(1.0, 0.0);
    for a in omega.archimedean() {
        value *= match *a {
            ArchimedeanComponent::Real(nu) => {
                pole_error(alpha, gamma_real_pole_distance(alpha, nu), margin)?;
                gamma_real(alpha, nu)?
            }
            ArchimedeanComponent::Complex(nu) => {
                pole_error(alpha, gamma_complex_pole_distance(alpha, nu), margin)?;
                gamma_complex_field(alpha, nu)?
            }
        };
    }
    Ok(value)
}

/// Right-hand side `κ ω(C) [|D| N(J)]^{1/2−α}` of the gamma identity; for
/// `Re α ≥ 0` this is the analytic continuation of the regularized side.
pub fn continued_gamma_value(omega: &IdeleClassCharacter, alpha: ComplexValue) -> Result<ComplexValue> {
    let norm = omega.field().abs_discriminant() as f64 * omega.conductor_norm() as f64;
    Ok(gamma_constant(omega)? * real_pow(norm, 0.5 - alpha))
}

/// Regularized adelic gamma identity: LHS `Π Γ_∞ Π Γ_{−∞} · reg Π Γ_q` at
/// each cutoff against its constant right-hand side.
pub fn verify_gamma_identity(
    omega: &IdeleClassCharacter,
    alpha: ComplexValue,
    schedule: &TruncationSchedule,
) -> Result<VerificationReport> {
    if alpha.re >= 0.0 {
        return Err(AdelicError::Domain(format!("gamma identity is checked for Re α < 0, got α = {alpha}")));
    }
    let arch = archimedean_gamma_factor(omega, alpha, ARCHIMEDEAN_POLE_MARGIN)?;
    let reg = reg_gamma_product(omega, alpha, schedule)?;
    let rhs = continued_gamma_value(omega, alpha)?;
    let records =
        reg.cutoffs.iter().zip(&reg.values).map(|(&v, &value)| ReportRecord::new(v, arch * value, rhs)).collect();
    Ok(VerificationReport::new("gamma", records, DEFAULT_TOLERANCE))
}

/// The key identity at a single finite cutoff:
/// `Π Γ_∞ Π Γ_{−∞} · Π_{v ∈ F_V} Γ_{q_v}(α) · L_V(α;ω) = κ ω(C) [|D|N(J)]^{1/2−α} L_V(1−α;\bar ω)`,
/// with both truncated L-functions taken from the oracle. Holds at every α
/// away from poles, including the critical strip.
pub fn finite_v_identity_check(
    omega: &IdeleClassCharacter,
    alpha: ComplexValue,
    cutoff: u64,
) -> Result<VerificationReport> {
    let schedule = TruncationSchedule::new(vec![cutoff])?;
    schedule.check_for(&[omega])?;
    let arch = archimedean_gamma_factor(omega, alpha, FINITE_V_POLE_MARGIN)?;
    let places = unramified_places(omega, cutoff);
    let ln_gammas = sum_over(&places, |v| check_log(gamma_q_twisted(alpha, &v.module, omega.lambda(v))?, "Γ_q"))?;
    let ln_lhs = ln_gammas + ln_l_truncated_via_oracle(alpha, omega, cutoff)?;
    let lhs = ensure_finite(arch * ln_lhs.exp(), "finite-V left side")?;
    let ln_dual = ln_l_truncated_via_oracle(1.0 - alpha, &omega.conj(), cutoff)?;
    let rhs = ensure_finite(continued_gamma_value(omega, alpha)? * ln_dual.exp(), "finite-V right side")?;
    Ok(VerificationReport::new("finite", vec![ReportRecord::new(cutoff, lhs, rhs)], FINITE_V_TOLERANCE))
}

/// `ω'' = ω ω'` after checking that ω, ω' and ω'' have the same local
/// ranks, the hypothesis of the beta identity.
pub fn beta_third_character(omega: &IdeleClassCharacter, omega2: &IdeleClassCharacter) -> Result<IdeleClassCharacter> {
    let omega3 = omega.product(omega2)?;
    let ranks = omega.local_ranks();
    if omega2.local_ranks() != ranks || omega3.local_ranks() != ranks {
        return Err(AdelicError::RankMismatch(format!(
            "local ranks {:?}, {:?}, {:?} differ",
            ranks,
            omega2.local_ranks(),
            omega3.local_ranks()
        )));
    }
    Ok(omega3)
}

/// `Π_{v ∈ F_V} B_{q_v}(α, β) · L_V(α;ω) L_V(β;ω') / L_V(α+β;ω'')` at every
/// cutoff, for `Re α < 0`, `Re β < 0`.
pub fn reg_beta_product(
    omega: &IdeleClassCharacter,
    omega2: &IdeleClassCharacter,
    alpha: ComplexValue,
    beta: ComplexValue,
    schedule: &TruncationSchedule,
) -> Result<RegularizedProduct> {
    if alpha.re >= 0.0 || beta.re >= 0.0 {
        return Err(AdelicError::Domain(format!(
            "regularized beta product needs Re α, Re β < 0, got ({alpha}, {beta})"
        )));
    }
    let omega3 = beta_third_character(omega, omega2)?;
    schedule.check_for(&[omega, omega2, &omega3])?;
    let sum = alpha + beta;
    let l1 = LFunctionHandle::for_character(omega)?.eval(alpha)?;
    let l2 = LFunctionHandle::for_character(omega2)?.eval(beta)?;
    let l3 = LFunctionHandle::for_character(&omega3)?.eval(sum)?;
    if l3.norm() == 0.0 {
        return Err(AdelicError::Domain(format!("L(α+β;ω'') vanishes at α+β = {sum}")));
    }
    let places = unramified_places(omega, schedule.final_cutoff());
    let terms = ordered_map(&places, |v| {
        let (a, b, c) = (omega.lambda(v), omega2.lambda(v), omega3.lambda(v));
        let q = &v.module;
        let local =
            gamma_q_twisted(alpha, q, a)? * gamma_q_twisted(beta, q, b)? * gamma_q_twisted(1.0 - sum, q, c.conj())?;
        let euler = (1.0 - a * q.pow(-alpha)) * (1.0 - b * q.pow(-beta)) / (1.0 - c * q.pow(-sum));
        check_log(local * euler, "local beta factor")
    })?;
    finish_product(l1 * l2 / l3, &places, &terms, schedule)
}

/// `Π_v B_v(α,ν_v; β,μ_v)` over the archimedean places, rejecting points
/// where any of the three gamma factors is within `margin` of a pole.
pub fn archimedean_beta_factor(
    omega: &IdeleClassCharacter,
    omega2: &IdeleClassCharacter,
    alpha: ComplexValue,
    beta: ComplexValue,
    margin: f64,
) -> Result<ComplexValue> {
    let gamma = 1.0 - alpha - beta;
    let mut value = ComplexValue::new(1.0, 0.0);
    for (a, b) in omega.archimedean().iter().zip(omega2.archimedean()) {
        value *= match (*a, *b) {
            (ArchimedeanComponent::Real(nu), ArchimedeanComponent::Real(mu)) => {
                pole_error(alpha, gamma_real_pole_distance(alpha, nu), margin)?;
                pole_error(beta, gamma_real_pole_distance(beta, mu), margin)?;
                pole_error(gamma, gamma_real_pole_distance(gamma, -(nu + mu)), margin)?;
                beta_real(alpha, nu, beta, mu)?
            }
            (ArchimedeanComponent::Complex(nu), ArchimedeanComponent::Complex(mu)) => {
                let eta = ComplexWeight::new(-(nu.value() + mu.value()))?;
                pole_error(alpha, gamma_complex_pole_distance(alpha, nu), margin)?;
                pole_error(beta, gamma_complex_pole_distance(beta, mu), margin)?;
                pole_error(gamma, gamma_complex_pole_distance(gamma, eta), margin)?;
                beta_complex_field(alpha, nu, beta, mu)?
            }
            _ => return Err(AdelicError::Domain("characters disagree on archimedean places".into())),
        };
    }
    Ok(value)
}

/// Regularized adelic beta identity against `𝛋 √(|D| N(J))`.
pub fn verify_beta_identity(
    omega: &IdeleClassCharacter,
    omega2: &IdeleClassCharacter,
    alpha: ComplexValue,
    beta: ComplexValue,
    schedule: &TruncationSchedule,
) -> Result<VerificationReport> {
    let omega3 = beta_third_character(omega, omega2)?;
    let arch = archimedean_beta_factor(omega, omega2, alpha, beta, ARCHIMEDEAN_POLE_MARGIN)?;
    let reg = reg_beta_product(omega, omega2, alpha, beta, schedule)?;
    let norm = omega.field().abs_discriminant() as f64 * omega.conductor_norm() as f64;
    let rhs = beta_constant(omega, omega2, &omega3)? * norm.sqrt();
    let records =
        reg.cutoffs.iter().zip(&reg.values).map(|(&v, &value)| ReportRecord::new(v, arch * value, rhs)).collect();
    Ok(VerificationReport::new("beta", records, DEFAULT_TOLERANCE))
}

/// Points of the evaluation grid `Re α ∈ [−3, −0.3]`, `|Im α| ≤ 2` (with
/// `n_re × n_im` nodes) that keep the margin from every archimedean pole of ω.
pub fn compliant_grid(omega: &IdeleClassCharacter, n_re: usize, n_im: usize) -> Vec<ComplexValue> {
    let node =
        |k: usize, n: usize, lo: f64, hi: f64| if n <= 1 { lo } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 };
    let mut out = Vec::new();
    for i in 0..n_re {
        for j in 0..n_im {
            let alpha = ComplexValue::new(node(i, n_re, -3.0, -0.3), node(j, n_im, -2.0, 2.0));
            if archimedean_gamma_factor(omega, alpha, ARCHIMEDEAN_POLE_MARGIN).is_ok() {
                out.push(alpha);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{trivial_character, CharacterGroup, IdeleClassCharacter};
    use crate::oracle::zeta;
    use crate::places::NumberFieldDescriptor;

    fn z(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn trivial_q() -> IdeleClassCharacter {
        trivial_character(NumberFieldDescriptor::rationals())
    }

    fn dirichlet(m: u64, k: u64) -> IdeleClassCharacter {
        IdeleClassCharacter::from_dirichlet(&CharacterGroup::new(m).unwrap().character(k).unwrap()).unwrap()
    }

    #[test]
    fn schedules() {
        let d = TruncationSchedule::default();
        assert_eq!(d.cutoffs().len(), 10);
        assert_eq!((d.cutoffs()[0], d.final_cutoff()), (256, 131_072));
        assert_eq!("2^8..2^17".parse::<TruncationSchedule>().unwrap(), d);
        assert_eq!("100, 1000,2^12".parse::<TruncationSchedule>().unwrap().cutoffs(), &[100, 1000, 4096]);
        for bad in ["", "10,5", "2^9..2^8", "1", "x", "3,3"] {
            assert!(matches!(bad.parse::<TruncationSchedule>(), Err(AdelicError::InvalidSchedule(_))), "{bad}");
        }
        assert!(TruncationSchedule::new(vec![]).is_err());
        let s = TruncationSchedule::new(vec![3, 10]).unwrap();
        assert!(matches!(reg_gamma_product(&dirichlet(5, 1), z(-1.5, 0.0), &s), Err(AdelicError::InvalidSchedule(_))));
    }

    #[test]
    fn tail_products() {
        let t = trivial_q();
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        let full = l_truncated_tail(z(2.0, 0.0), &t, 2, 1_000_000).unwrap();
        assert!((full - zeta2).norm() < 1e-6);
        let no_two = l_truncated_tail(z(2.0, 0.0), &t, 3, 1_000_000).unwrap();
        assert!((no_two - zeta2 * 0.75).norm() < 1e-6);
        assert_eq!(l_truncated_tail(z(2.0, 0.0), &t, 100, 100).unwrap(), z(1.0, 0.0));
        assert!(matches!(l_truncated_tail(z(1.0, 0.0), &t, 2, 100), Err(AdelicError::Domain(_))));
    }

    #[test]
    fn oracle_truncation() {
        let t = trivial_q();
        let s = z(2.0, 0.0);
        let via = l_truncated_via_oracle(s, &t, 3).unwrap();
        let tail = l_truncated_tail(s, &t, 3, 10_000_000).unwrap();
        assert!((via - tail).norm() < 1e-7 * via.norm());
        assert_eq!(l_truncated_via_oracle(s, &t, 2).unwrap(), zeta(s).unwrap());
        // cancellation of the tail against the oracle is exact up to the tail
        let exact = l_truncated_via_oracle(s, &t, 1000).unwrap();
        let tail = l_truncated_tail(s, &t, 1000, 10_000_000).unwrap();
        assert!((exact - tail).norm() < 1e-8);
        let cont = l_truncated_via_oracle(z(-1.5, 0.0), &t, 100).unwrap();
        assert!(cont.re.is_finite() && cont.norm() > 0.0);
    }

    #[test]
    fn reg_gamma_examples() {
        let t = trivial_q();
        let s = TruncationSchedule::powers_of_two(8, 16).unwrap();
        let r = reg_gamma_product(&t, z(-1.0, 0.0), &s).unwrap();
        let expected = -1.0 / (2.0 * std::f64::consts::PI.powi(2));
        assert!((r.final_value() - expected).norm() < 1e-5 * expected.abs());
        assert!(matches!(reg_gamma_product(&t, z(0.0, 0.0), &s), Err(AdelicError::Domain(_))));
        assert!(matches!(verify_gamma_identity(&t, z(0.2, 0.0), &s), Err(AdelicError::Domain(_))));
        assert!(matches!(verify_gamma_identity(&t, z(-2.05, 0.0), &s), Err(AdelicError::Pole(_))));
    }

    #[test]
    fn finite_v_is_independent_of_v() {
        for (omega, alpha) in
            [(trivial_q(), z(-1.5, 0.0)), (dirichlet(3, 1), z(0.25, 0.0)), (dirichlet(5, 1), z(-0.7, 0.4))]
        {
            let a = finite_v_identity_check(&omega, alpha, 100).unwrap();
            let b = finite_v_identity_check(&omega, alpha, 1000).unwrap();
            assert!(a.passed && b.passed, "{a:?} {b:?}");
            let ratio = |r: &VerificationReport| r.records[0].lhs / r.records[0].rhs;
            assert!((ratio(&a) - ratio(&b)).norm() <= 1e-8, "{} vs {}", ratio(&a), ratio(&b));
        }
        assert!(matches!(
            finite_v_identity_check(&dirichlet(5, 1), z(-1.5, 0.0), 5),
            Err(AdelicError::InvalidSchedule(_))
        ));
    }

    #[test]
    fn beta_rank_checks() {
        let s = TruncationSchedule::new(vec![100]).unwrap();
        let err = verify_beta_identity(&dirichlet(4, 1), &dirichlet(3, 1), z(-1.2, 0.0), z(-1.5, 0.0), &s);
        assert!(matches!(err, Err(AdelicError::RankMismatch(_))));
        let err = verify_beta_identity(&trivial_q(), &dirichlet(3, 1), z(-1.2, 0.0), z(-1.5, 0.0), &s);
        assert!(matches!(err, Err(AdelicError::RankMismatch(_))));
        assert!(beta_third_character(&dirichlet(5, 1), &dirichlet(5, 1)).is_ok());
    }

    #[test]
    fn grid_avoids_poles() {
        let g = compliant_grid(&trivial_q(), 28, 5);
        assert!(!g.is_empty());
        assert!(g.iter().all(|a| gamma_real_pole_distance(*a, crate::archimedean::RealParity::EVEN) >= 0.1));
        assert!(g.len() < 28 * 5);
    }
}
