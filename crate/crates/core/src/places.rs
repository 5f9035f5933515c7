//! Supported number fields and their places.
//!
//! Fields are ℚ, quadratic fields ℚ(√d) and cyclotomic fields ℚ(ζ_m). For each
//! rational prime the splitting into places (ramification index e, residue
//! degree f, count g with e·f·g = n) is given by the Kronecker symbol in the
//! quadratic case and by the order of p modulo the prime-to-p part of m in the
//! cyclotomic case.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{euler_phi, factorize, is_prime, is_squarefree, kronecker, multiplicative_order, primes_below};
use crate::nonarch::ResidueModule;
use crate::{AdelicError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FieldKind {
    Rationals,
    /// ℚ(√d), `d` squarefree, `d ∉ {0, 1}`.
    Quadratic(i64),
    /// ℚ(ζ_m), `m ≥ 3`, `m ≢ 2 (mod 4)`.
    Cyclotomic(u64),
}

impl FromStr for FieldKind {
    type Err = AdelicError;

    /// Accepts `Q`, `Q(sqrt,d)` and `Q(zeta,m)`.
    fn from_str(s: &str) -> Result<FieldKind> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Q" {
            return Ok(FieldKind::Rationals);
        }
        let inner = compact
            .strip_prefix("Q(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| AdelicError::InvalidFieldSpec(format!("cannot read field spec {s:?}")))?;
        let (tag, arg) = inner
            .split_once(',')
            .ok_or_else(|| AdelicError::InvalidFieldSpec(format!("cannot read field spec {s:?}")))?;
        let bad = || AdelicError::InvalidFieldSpec(format!("bad integer in field spec {s:?}"));
        match tag {
            "sqrt" => Ok(FieldKind::Quadratic(arg.parse().map_err(|_| bad())?)),
            "zeta" => Ok(FieldKind::Cyclotomic(arg.parse().map_err(|_| bad())?)),
            _ => Err(AdelicError::InvalidFieldSpec(format!("unknown field family {tag:?}"))),
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Quadratic(d) => write!(f, "Q(sqrt,{d})"),
            FieldKind::Cyclotomic(m) => write!(f, "Q(zeta,{m})"),
        }
    }
}

/// A number field with its signature and discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NumberFieldDescriptor {
    pub kind: FieldKind,
    /// Number of real places σ.
    pub real_places: u32,
    /// Number of complex places τ.
    pub complex_places: u32,
    pub discriminant: i128,
}

impl NumberFieldDescriptor {
    pub fn rationals() -> Self {
        describe_field(FieldKind::Rationals).expect("ℚ is always valid")
    }

    pub fn degree(&self) -> u32 {
        self.real_places + 2 * self.complex_places
    }

    pub fn abs_discriminant(&self) -> u128 {
        self.discriminant.unsigned_abs()
    }

    pub fn is_rationals(&self) -> bool {
        self.kind == FieldKind::Rationals
    }
}

impl FromStr for NumberFieldDescriptor {
    type Err = AdelicError;
    fn from_str(s: &str) -> Result<Self> {
        describe_field(s.parse()?)
    }
}

pub fn describe_field(kind: FieldKind) -> Result<NumberFieldDescriptor> {
    match kind {
        FieldKind::Rationals => Ok(NumberFieldDescriptor { kind, real_places: 1, complex_places: 0, discriminant: 1 }),
        FieldKind::Quadratic(d) => {
            if d == 1 || !is_squarefree(d) {
                return Err(AdelicError::InvalidFieldSpec(format!("d = {d} is not a squarefree integer ≠ 0, 1")));
            }
            let disc = if d.rem_euclid(4) == 1 { d as i128 } else { 4 * d as i128 };
            let (real, complex) = if d > 0 { (2, 0) } else { (0, 1) };
            Ok(NumberFieldDescriptor { kind, real_places: real, complex_places: complex, discriminant: disc })
        }
        FieldKind::Cyclotomic(m) => {
            if m < 3 || m % 4 == 2 {
                return Err(AdelicError::InvalidFieldSpec(format!("m = {m} must be ≥ 3 and ≢ 2 mod 4")));
            }
            let phi = euler_phi(m);
            // |D| = m^φ / Π_{p|m} p^{φ/(p−1)}, sign (−1)^{φ/2}
            let mut abs: i128 = 1;
            for (p, a) in factorize(m) {
                let exp = phi * a as u64 - phi / (p - 1);
                let term = (p as i128)
                    .checked_pow(exp as u32)
                    .ok_or_else(|| AdelicError::InvalidFieldSpec(format!("discriminant of Q(zeta,{m}) overflows")))?;
                abs = abs
                    .checked_mul(term)
                    .ok_or_else(|| AdelicError::InvalidFieldSpec(format!("discriminant of Q(zeta,{m}) overflows")))?;
            }
            let sign = if (phi / 2).is_multiple_of(2) { 1 } else { -1 };
            Ok(NumberFieldDescriptor {
                kind,
                real_places: 0,
                complex_places: (phi / 2) as u32,
                discriminant: sign * abs,
            })
        }
    }
}

/// A finite place of a field: a prime ideal above `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FinitePlace {
    pub prime: u64,
    pub residue_degree: u32,
    pub ramification_index: u32,
    pub module: ResidueModule,
}

impl FinitePlace {
    fn new(prime: u64, residue_degree: u32, ramification_index: u32) -> FinitePlace {
        let module = ResidueModule::new_unchecked(prime, residue_degree);
        FinitePlace { prime, residue_degree, ramification_index, module }
    }

    /// Ramified in the field extension (e > 1). Independent of any character.
    pub fn is_ramified(&self) -> bool {
        self.ramification_index > 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Place {
    Real,
    ComplexPair,
    Finite(FinitePlace),
}

pub fn infinite_places(field: &NumberFieldDescriptor) -> Vec<Place> {
    let mut out = vec![Place::Real; field.real_places as usize];
    out.extend(std::iter::repeat_n(Place::ComplexPair, field.complex_places as usize));
    out
}

/// The places of `field` above the rational prime `p`.
pub fn places_above(field: &NumberFieldDescriptor, p: u64) -> Vec<FinitePlace> {
    assert!(is_prime(p), "{p} is not prime");
    split_prime(field, p)
}

fn split_prime(field: &NumberFieldDescriptor, p: u64) -> Vec<FinitePlace> {
    match field.kind {
        FieldKind::Rationals => vec![FinitePlace::new(p, 1, 1)],
        FieldKind::Quadratic(_) => {
            let disc = i64::try_from(field.discriminant).expect("quadratic discriminants fit in i64");
            match kronecker(disc, p as i64) {
                1 => vec![FinitePlace::new(p, 1, 1); 2],
                -1 => vec![FinitePlace::new(p, 2, 1)],
                _ => vec![FinitePlace::new(p, 1, 2)],
            }
        }
        FieldKind::Cyclotomic(m) => {
            let mut prime_to_p = m;
            let mut p_part = 1;
            while prime_to_p % p == 0 {
                prime_to_p /= p;
                p_part *= p;
            }
            let f = multiplicative_order(p % prime_to_p.max(1), prime_to_p);
            let e = euler_phi(p_part);
            let count = euler_phi(prime_to_p) / f;
            vec![FinitePlace::new(p, f as u32, e as u32); count as usize]
        }
    }
}

/// All finite places above primes `p < prime_bound`, ordered by `(p, q)`.
pub fn enumerate_finite_places(field: &NumberFieldDescriptor, prime_bound: u64) -> Vec<FinitePlace> {
    let mut out: Vec<FinitePlace> = primes_below(prime_bound).into_iter().flat_map(|p| split_prime(field, p)).collect();
    out.sort_by_key(|v| (v.prime, v.module));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(s: &str) -> NumberFieldDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn describes_fields() {
        let q = field("Q");
        assert_eq!((q.real_places, q.complex_places, q.discriminant), (1, 0, 1));
        let gi = field("Q(sqrt,-1)");
        assert_eq!((gi.real_places, gi.complex_places, gi.discriminant), (0, 1, -4));
        let r5 = field("Q(sqrt,5)");
        assert_eq!((r5.real_places, r5.complex_places, r5.discriminant), (2, 0, 5));
        let z5 = field("Q(zeta,5)");
        assert_eq!((z5.real_places, z5.complex_places, z5.abs_discriminant()), (0, 2, 125));
        assert_eq!(field("Q(zeta,8)").discriminant, 256);
        assert_eq!(field("Q(zeta,3)").discriminant, -3);
        assert_eq!(field("Q(zeta,12)").discriminant, 144);
        assert_eq!(field("Q(zeta, 7)").discriminant, -16807);
    }

    #[test]
    fn rejects_bad_specs() {
        for s in ["Q(sqrt,4)", "Q(sqrt,1)", "Q(sqrt,0)", "Q(zeta,6)", "Q(zeta,2)", "Q(cubic,2)", "R", "Q(sqrt,x)"] {
            assert!(matches!(s.parse::<NumberFieldDescriptor>(), Err(AdelicError::InvalidFieldSpec(_))), "{s}");
        }
    }

    #[test]
    fn splitting_examples() {
        let gi = field("Q(sqrt,-1)");
        let above5 = places_above(&gi, 5);
        assert_eq!(above5.len(), 2);
        assert!(above5.iter().all(|v| v.module.q() == Some(5)));
        let above3 = places_above(&gi, 3);
        assert_eq!(above3.len(), 1);
        assert_eq!(above3[0].module.q(), Some(9));
        let z5 = field("Q(zeta,5)");
        let above2 = places_above(&z5, 2);
        assert_eq!(above2.len(), 1);
        assert_eq!(above2[0].module.q(), Some(16));
        let above5 = places_above(&z5, 5);
        assert_eq!((above5.len(), above5[0].ramification_index), (1, 4));
    }

    #[test]
    fn enumeration_is_ordered() {
        let q: Vec<_> = enumerate_finite_places(&field("Q"), 10).iter().map(|v| v.prime).collect();
        assert_eq!(q, vec![2, 3, 5, 7]);
        let gi = enumerate_finite_places(&field("Q(sqrt,-1)"), 10);
        let qs: Vec<_> = gi.iter().map(|v| v.module.q().unwrap()).collect();
        assert_eq!(qs, vec![2, 9, 5, 5, 49]);
        assert!(gi[0].is_ramified());
        assert!(gi[1..].iter().all(|v| !v.is_ramified()));
        assert_eq!(gi, enumerate_finite_places(&field("Q(sqrt,-1)"), 10));
    }

    #[test]
    fn degree_sum_and_ramification() {
        for s in ["Q(sqrt,-1)", "Q(sqrt,5)", "Q(zeta,5)", "Q(zeta,8)", "Q(sqrt,-3)", "Q(zeta,12)"] {
            let k = field(s);
            let d = k.abs_discriminant();
            for p in primes_below(10_000) {
                let places = places_above(&k, p);
                let sum: u32 = places.iter().map(|v| v.ramification_index * v.residue_degree).sum();
                assert_eq!(sum, k.degree(), "{s}, p = {p}");
                let ramified = places.iter().any(FinitePlace::is_ramified);
                assert_eq!(ramified, d.is_multiple_of(p as u128), "{s}, p = {p}");
            }
        }
    }

    #[test]
    fn cyclotomic_three_is_quadratic_minus_three() {
        let a = field("Q(zeta,3)");
        let b = field("Q(sqrt,-3)");
        assert_eq!(a.abs_discriminant(), b.abs_discriminant());
        assert_eq!((a.real_places, a.complex_places), (b.real_places, b.complex_places));
        for p in primes_below(10_000) {
            let pa: Vec<_> = places_above(&a, p).iter().map(|v| (v.module, v.ramification_index)).collect();
            let pb: Vec<_> = places_above(&b, p).iter().map(|v| (v.module, v.ramification_index)).collect();
            assert_eq!(pa, pb, "p = {p}");
        }
    }
}
