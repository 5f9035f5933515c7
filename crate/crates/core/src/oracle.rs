//! Reference values of ζ, Hurwitz ζ, Dirichlet L-functions and Dedekind zeta
//! functions of quadratic and cyclotomic fields, with analytic continuation.
//!
//! Nothing here evaluates an Euler product, so the regularization engine can
//! be checked against these values independently.
//!
//! * ζ(s): Borwein's accelerated alternating series for `Re s ≥ 0`, the
//!   functional equation for `Re s < 0`.
//! * ζ(s, x): Euler–Maclaurin with eight Bernoulli corrections.
//! * L(s, χ) = m^{−s} Σ_a χ(a) ζ(s, a/m) for `Re s ≥ −1/4`; further left,
//!   Hurwitz's formula expresses each ζ(s, a/m) through ζ(1−s, k/m).

use std::f64::consts::{PI, TAU};

use crate::characters::{CharacterGroup, DirichletCharacter, IdeleClassCharacter};
use crate::gamma::complex_gamma;
use crate::places::{FieldKind, NumberFieldDescriptor};
use crate::{real_pow, AdelicError, ComplexValue, Result};

/// Distance from `s = 1` inside which the pole of ζ is reported.
pub const ZETA_POLE_TOLERANCE: f64 = 1e-8;

const BORWEIN_TERMS: usize = 64;
const LEFT_THRESHOLD: f64 = -0.25;

// B_2, B_4, …, B_16 divided by their factorials.
const BERNOULLI_OVER_FACTORIAL: [f64; 8] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
];

fn c(re: f64) -> ComplexValue {
    ComplexValue::new(re, 0.0)
}

fn borwein_weights() -> &'static [f64; BORWEIN_TERMS + 1] {
    use std::sync::OnceLock;
    static WEIGHTS: OnceLock<[f64; BORWEIN_TERMS + 1]> = OnceLock::new();
    WEIGHTS.get_or_init(|| {
        let n = BORWEIN_TERMS;
        let mut d = [0.0; BORWEIN_TERMS + 1];
        let mut term = 1.0 / n as f64;
        let mut acc = term;
        d[0] = n as f64 * acc;
        for i in 1..=n {
            let (nf, fi) = (n as f64, i as f64);
            term *= 4.0 * (nf + fi - 1.0) * (nf - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
            acc += term;
            d[i] = nf * acc;
        }
        d
    })
}

/// Dirichlet eta function by Borwein's algorithm.
fn eta(s: ComplexValue) -> ComplexValue {
    let d = borwein_weights();
    let dn = d[BORWEIN_TERMS];
    let mut sum = c(0.0);
    for k in 0..BORWEIN_TERMS {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (d[k] - dn) / dn * real_pow((k + 1) as f64, -s);
    }
    -sum
}

/// Riemann zeta function.
pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    if (s - 1.0).norm() < ZETA_POLE_TOLERANCE {
        return Err(AdelicError::Pole(format!("ζ has a pole at s = {s}")));
    }
    if s.re < 0.0 {
        // ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s)
        let one_minus = c(1.0) - s;
        let factor = real_pow(2.0, s) * real_pow(PI, s - 1.0) * (s * PI / 2.0).sin() * complex_gamma(one_minus)?;
        return Ok(factor * zeta(one_minus)?);
    }
    let denom = c(1.0) - real_pow(2.0, c(1.0) - s);
    if denom.norm() < 0.1 {
        return hurwitz_zeta(s, 1.0);
    }
    Ok(eta(s) / denom)
}

fn expm1(u: ComplexValue) -> ComplexValue {
    if u.norm() < 1e-5 {
        u * (1.0 + u / 2.0 * (1.0 + u / 3.0))
    } else {
        u.exp() - 1.0
    }
}

/// `ζ(s, x) − 1/(s−1)`, entire in s; `x ∈ (0, 1]`.
pub fn hurwitz_zeta_regular(s: ComplexValue, x: f64) -> ComplexValue {
    assert!(x > 0.0 && x <= 1.0, "Hurwitz parameter {x} outside (0, 1]");
    let n = (4.0 * s.norm()).ceil().max(32.0) as usize;
    let mut sum = c(0.0);
    for k in 0..n {
        sum += real_pow(k as f64 + x, -s);
    }
    let big = n as f64 + x;
    let ln_big = big.ln();
    // (big^{1−s} − 1)/(s − 1), stable at s = 1
    let u = (c(1.0) - s) * ln_big;
    let integral = if u.norm() == 0.0 { c(-ln_big) } else { -ln_big * expm1(u) / u };
    sum += integral;
    let mut power = real_pow(big, -s);
    sum += power / 2.0;
    // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · big^{−s−2j+1}
    let mut rising = s;
    power /= big;
    for (j, b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        sum += *b * rising * power;
        let k = 2 * j as u32 + 1;
        rising *= (s + k as f64) * (s + (k + 1) as f64);
        power /= big * big;
    }
    sum
}

/// Hurwitz zeta `ζ(s, x) = Σ_{k ≥ 0} (k + x)^{−s}`, `x ∈ (0, 1]`.
pub fn hurwitz_zeta(s: ComplexValue, x: f64) -> Result<ComplexValue> {
    if (s - 1.0).norm() < ZETA_POLE_TOLERANCE {
        return Err(AdelicError::Pole(format!("ζ(s, x) has a pole at s = {s}")));
    }
    Ok(hurwitz_zeta_regular(s, x) + 1.0 / (s - 1.0))
}

/// Dirichlet L-function of any character (principal ones have the pole of ζ).
pub fn dirichlet_l(s: ComplexValue, chi: &DirichletCharacter) -> Result<ComplexValue> {
    let m = chi.modulus();
    if m == 1 {
        return zeta(s);
    }
    let principal = chi.is_principal();
    if principal && (s - 1.0).norm() < ZETA_POLE_TOLERANCE {
        return Err(AdelicError::Pole(format!("principal L-function has a pole at s = {s}")));
    }
    let units: Vec<(u64, ComplexValue)> =
        (1..=m).filter_map(|a| chi.angle(a as i64).map(|t| (a, t.to_complex()))).collect();
    let mf = m as f64;
    let sum: ComplexValue = if s.re >= LEFT_THRESHOLD {
        let mut acc: ComplexValue = units.iter().map(|&(a, v)| v * hurwitz_zeta_regular(s, a as f64 / mf)).sum();
        if principal {
            acc += units.len() as f64 / (s - 1.0);
        }
        acc
    } else {
        // ζ(s, a/m) = 2Γ(w)/(2πm)^w Σ_k cos(πw/2 − 2πka/m) ζ(w, k/m), w = 1 − s
        let w = c(1.0) - s;
        let prefactor = 2.0 * complex_gamma(w)? / real_pow(TAU * mf, w);
        let inner: Vec<ComplexValue> = (1..=m).map(|k| hurwitz_zeta(w, k as f64 / mf)).collect::<Result<_>>()?;
        units
            .iter()
            .map(|&(a, v)| {
                let z: ComplexValue = inner
                    .iter()
                    .enumerate()
                    .map(|(j, zk)| {
                        let k = (j + 1) as u64;
                        let phase = TAU * ((k * a) % m) as f64 / mf;
                        (w * PI / 2.0 - phase).cos() * zk
                    })
                    .sum();
                v * prefactor * z
            })
            .sum()
    };
    Ok(real_pow(mf, -s) * sum)
}

/// Dedekind zeta function of a supported field.
pub fn dedekind_zeta(s: ComplexValue, field: &NumberFieldDescriptor) -> Result<ComplexValue> {
    match field.kind {
        FieldKind::Rationals => zeta(s),
        FieldKind::Quadratic(_) => {
            let disc = i64::try_from(field.discriminant).expect("quadratic discriminant fits in i64");
            Ok(zeta(s)? * dirichlet_l(s, &DirichletCharacter::kronecker(disc)?)?)
        }
        FieldKind::Cyclotomic(m) => {
            let mut value = zeta(s)?;
            for chi in CharacterGroup::new(m)?.iter().skip(1) {
                value *= dirichlet_l(s, &chi.primitive_inducing())?;
            }
            Ok(value)
        }
    }
}

/// An L-function the oracle can evaluate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LFunctionHandle {
    RiemannZeta,
    Dirichlet(DirichletCharacter),
    DedekindQuadratic(i64),
    DedekindCyclotomic(u64),
}

impl LFunctionHandle {
    /// `L(s; ω)` over the ramified-and-archimedean-free Euler product of ω.
    pub fn for_character(omega: &IdeleClassCharacter) -> Result<LFunctionHandle> {
        if let Some(chi) = omega.dirichlet() {
            return Ok(LFunctionHandle::Dirichlet(chi.clone()));
        }
        if !omega.ramified().is_empty() {
            return Err(AdelicError::OracleUnavailable("ramified character without Dirichlet data".into()));
        }
        let field = omega.field();
        Ok(match field.kind {
            FieldKind::Rationals => LFunctionHandle::RiemannZeta,
            FieldKind::Quadratic(_) => LFunctionHandle::DedekindQuadratic(
                i64::try_from(field.discriminant).expect("quadratic discriminant fits in i64"),
            ),
            FieldKind::Cyclotomic(m) => LFunctionHandle::DedekindCyclotomic(m),
        })
    }

    pub fn eval(&self, s: ComplexValue) -> Result<ComplexValue> {
        match self {
            LFunctionHandle::RiemannZeta => zeta(s),
            LFunctionHandle::Dirichlet(chi) => dirichlet_l(s, chi),
            LFunctionHandle::DedekindQuadratic(d) => {
                let k = if d.rem_euclid(4) == 1 { *d } else { d / 4 };
                dedekind_zeta(s, &crate::places::describe_field(FieldKind::Quadratic(k))?)
            }
            LFunctionHandle::DedekindCyclotomic(m) => {
                dedekind_zeta(s, &crate::places::describe_field(FieldKind::Cyclotomic(*m))?)
            }
        }
    }
}
