//! Dirichlet characters and the idele-class characters they define.
//!
//! A primitive Dirichlet character χ mod m gives an idele-class character of
//! ℚ with archimedean component `sgn^ν`, `χ(−1) = (−1)^ν`, and for each
//! `p^ρ ‖ m` a ramified component `θ_p = \bar χ_(p)` on `ℤ_p^×`, where `χ_(p)`
//! is the factor of χ on `(ℤ/p^ρ)^×` in the Chinese-remainder splitting. The
//! normalization `θ_p(p) = 1` together with triviality on `ℚ^×` forces the
//! unramified eigenvalues `λ(p) = χ(p)` and, at ramified p, `ω_p(p) =
//! Π_{p' ≠ p} χ_(p')(p)`. These conventions make `i^ν κ ω(C)` equal to the
//! classical root number `τ(χ)/(i^ν √m)`.
//!
//! Characters mod m are indexed by `k` in mixed radix over the standard
//! generators of `(ℤ/m)^×`, listed by ascending prime: a primitive root for
//! odd `p^e`, `−1` for `4`, and `−1` then `5` for `2^e`, `e ≥ 3`; the digit for
//! the first generator is least significant and `χ(g_j) = e^{2πi d_j/n_j}`.
//! So `chi(m=4,k=1)` is the nontrivial character mod 4 and `chi(m=5,k=1)`
//! sends `2 ↦ i`.

use std::fmt;
use std::str::FromStr;

use crate::archimedean::{ComplexWeight, RealParity};
use crate::arith::{crt_pair, factorize, gcd, kronecker, primitive_root_odd_prime_power};
use crate::nonarch::{kappa_local, RamifiedLocalCharacter};
use crate::places::{FieldKind, FinitePlace, NumberFieldDescriptor};
use crate::{i_pow, AdelicError, Angle, ComplexValue, Result};

/// A generator of `(ℤ/m)^×` lifted from a prime-power factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Generator {
    element: u64,
    order: u64,
    /// A character is primitive at this prime iff its digit is not
    /// divisible by `primitive_step` (0: the generator imposes nothing).
    primitive_step: u64,
}

/// The group of Dirichlet characters modulo `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterGroup {
    modulus: u64,
    generators: Vec<Generator>,
}

impl CharacterGroup {
    pub fn new(modulus: u64) -> Result<CharacterGroup> {
        if modulus == 0 {
            return Err(AdelicError::Domain("modulus must be positive".into()));
        }
        let mut generators = Vec::new();
        for (p, e) in factorize(modulus) {
            let pe = p.pow(e);
            let rest = modulus / pe;
            let lift = |g: u64| crt_pair(g % pe, pe, 1 % rest, rest);
            if p == 2 {
                // mod 4 the sign digit must be odd; mod 2^e, e ≥ 3, the digit of 5
                if e == 2 {
                    generators.push(Generator { element: lift(pe - 1), order: 2, primitive_step: 2 });
                }
                if e >= 3 {
                    generators.push(Generator { element: lift(pe - 1), order: 2, primitive_step: 0 });
                    generators.push(Generator { element: lift(5), order: pe / 4, primitive_step: 2 });
                }
            } else {
                let g = primitive_root_odd_prime_power(p, e);
                let order = pe / p * (p - 1);
                // trivial on 1 + p^{e−1} iff the digit is divisible by p (or is 0 when e = 1)
                let primitive_step = if e == 1 { order } else { p };
                generators.push(Generator { element: lift(g), order, primitive_step });
            }
        }
        Ok(CharacterGroup { modulus, generators })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of characters, `φ(m)`.
    pub fn order(&self) -> u64 {
        self.generators.iter().map(|g| g.order).product()
    }

    /// The character with index `k`, `0 ≤ k < φ(m)`; `k = 0` is principal.
    pub fn character(&self, k: u64) -> Result<DirichletCharacter> {
        if k >= self.order() {
            return Err(AdelicError::Parse(format!(
                "character index {k} out of range for modulus {} ({} characters)",
                self.modulus,
                self.order()
            )));
        }
        let m = self.modulus;
        // exponents accumulate as numerators over the group exponent
        let exponent = self.generators.iter().fold(1, |acc, g| acc / gcd(acc, g.order) * g.order);
        let mut orbit: Vec<(u64, u64)> = Vec::with_capacity(self.order() as usize);
        orbit.push((1 % m, 0));
        let mut rest = k;
        for g in &self.generators {
            let digit = rest % g.order;
            rest /= g.order;
            let step = digit * (exponent / g.order);
            let len = orbit.len();
            for _ in 1..g.order {
                let start = orbit.len() - len;
                for i in start..start + len {
                    let (x, a) = orbit[i];
                    orbit.push(((x as u128 * g.element as u128 % m as u128) as u64, (a + step) % exponent));
                }
            }
        }
        let mut values: Vec<Option<Angle>> = vec![None; m as usize];
        for (x, a) in orbit {
            values[x as usize] = Some(Angle::new(a as i64, exponent));
        }
        Ok(DirichletCharacter { modulus: m, values })
    }

    pub fn iter(&self) -> impl Iterator<Item = DirichletCharacter> + '_ {
        (0..self.order()).map(move |k| self.character(k).expect("index in range"))
    }

    /// Whether the character with index `k` is primitive, read from its digits.
    pub fn is_primitive_index(&self, k: u64) -> bool {
        if self.modulus % 4 == 2 {
            return false;
        }
        let mut rest = k;
        self.generators.iter().all(|g| {
            let digit = rest % g.order;
            rest /= g.order;
            g.primitive_step == 0 || !digit.is_multiple_of(g.primitive_step)
        })
    }

    pub fn primitive_characters(&self) -> impl Iterator<Item = DirichletCharacter> + '_ {
        (0..self.order())
            .filter(move |&k| self.is_primitive_index(k))
            .map(move |k| self.character(k).expect("index in range"))
    }
}

/// A Dirichlet character mod m with exact root-of-unity values on units.
#[derive(Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    values: Vec<Option<Angle>>,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirichletCharacter(mod {}, conductor {})", self.modulus, self.conductor())
    }
}

impl DirichletCharacter {
    pub fn principal(modulus: u64) -> Result<DirichletCharacter> {
        CharacterGroup::new(modulus)?.character(0)
    }

    /// The Kronecker character `a ↦ (D/a)` modulo `|D|`, `D` a fundamental
    /// discriminant.
    pub fn kronecker(disc: i64) -> Result<DirichletCharacter> {
        let modulus = disc.unsigned_abs();
        if modulus == 0 {
            return Err(AdelicError::Domain("discriminant must be nonzero".into()));
        }
        let values = (0..modulus)
            .map(|a| match kronecker(disc, a as i64) {
                _ if gcd(a, modulus) != 1 => None,
                1 => Some(Angle::ZERO),
                -1 => Some(Angle::new(1, 2)),
                _ => None,
            })
            .collect::<Vec<_>>();
        if values.iter().enumerate().any(|(a, v)| v.is_none() && gcd(a as u64, modulus) == 1) {
            return Err(AdelicError::Domain(format!("{disc} is not a fundamental discriminant")));
        }
        Ok(DirichletCharacter { modulus, values })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `χ(a)` as an angle, `None` if `gcd(a, m) > 1`.
    pub fn angle(&self, a: i64) -> Option<Angle> {
        self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    /// `χ(a)`, zero off the units.
    pub fn value(&self, a: i64) -> ComplexValue {
        self.angle(a).map_or(ComplexValue::new(0.0, 0.0), Angle::to_complex)
    }

    pub fn is_principal(&self) -> bool {
        self.values.iter().flatten().all(|a| a.is_zero())
    }

    pub fn parity(&self) -> RealParity {
        match self.angle(-1) {
            Some(a) if !a.is_zero() => RealParity::ODD,
            _ => RealParity::EVEN,
        }
    }

    /// The factor `χ_(p)` on units mod `p^{v_p(m)}`: `χ_(p)(x) = χ(y)` with
    /// `y ≡ x (p^e)`, `y ≡ 1 (m/p^e)`.
    pub fn component(&self, p: u64) -> Vec<Option<Angle>> {
        let mut pe = 1;
        while self.modulus.is_multiple_of(pe * p) {
            pe *= p;
        }
        let rest = self.modulus / pe;
        let m = self.modulus as u128;
        // y = x·e_p + e_rest with idempotents e_p ≡ (1, 0), e_rest ≡ (0, 1)
        let e_p = crt_pair(1 % pe, pe, 0, rest) as u128;
        let e_rest = crt_pair(0, pe, 1 % rest, rest) as u128;
        (0..pe)
            .map(
                |x| {
                    if gcd(x, p) != 1 && pe > 1 {
                        None
                    } else {
                        self.values[((x as u128 * e_p + e_rest) % m) as usize]
                    }
                },
            )
            .collect()
    }

    /// Smallest `c | m` such that χ is trivial on units `≡ 1 (mod c)`.
    pub fn conductor(&self) -> u64 {
        factorize(self.modulus)
            .into_iter()
            .map(|(p, e)| {
                let table = self.component(p);
                let pe = p.pow(e);
                (0..=e)
                    .map(|j| p.pow(j))
                    .find(|&pj| {
                        (0..pe / pj)
                            .map(|t| (1 + t * pj) % pe)
                            .filter(|&x| gcd(x, p) == 1)
                            .all(|x| table[x as usize] == Some(Angle::ZERO))
                    })
                    .expect("trivial on 1 + p^e")
            })
            .product()
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// The primitive character mod the conductor inducing χ.
    pub fn primitive_inducing(&self) -> DirichletCharacter {
        let c = self.conductor();
        let values = (0..c)
            .map(|a| {
                if gcd(a, c) != 1 {
                    return None;
                }
                let lift = (0..).map(|t| a + t * c).find(|&y| gcd(y, self.modulus) == 1).expect("units lift");
                self.values[(lift % self.modulus) as usize]
            })
            .collect();
        DirichletCharacter { modulus: c, values }
    }

    pub fn conj(&self) -> DirichletCharacter {
        DirichletCharacter { modulus: self.modulus, values: self.values.iter().map(|v| v.map(|a| -a)).collect() }
    }

    /// Pointwise product of two characters with the same modulus.
    pub fn mul(&self, other: &DirichletCharacter) -> Result<DirichletCharacter> {
        if self.modulus != other.modulus {
            return Err(AdelicError::Domain(format!(
                "cannot multiply characters mod {} and mod {}",
                self.modulus, other.modulus
            )));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| Some(*a.as_ref()? + *b.as_ref()?)).collect();
        Ok(DirichletCharacter { modulus: self.modulus, values })
    }

    /// Gauss sum `τ(χ) = Σ_a χ(a) e^{2πi a/m}`.
    pub fn gauss_sum(&self) -> ComplexValue {
        let m = self.modulus;
        (0..m).filter_map(|a| Some((self.values[a as usize]? + Angle::new(a as i64, m)).to_complex())).sum()
    }

    /// Classical root number `τ(χ)/(i^ν √m)` of a primitive character.
    pub fn root_number(&self) -> ComplexValue {
        self.gauss_sum() / (i_pow(self.parity().value() as i64) * (self.modulus as f64).sqrt())
    }

    /// Order of χ in the character group.
    pub fn order(&self) -> u64 {
        self.values.iter().flatten().fold(1, |acc, a| acc / gcd(acc, a.denominator()) * a.denominator())
    }
}

/// Local character data at an archimedean place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArchimedeanComponent {
    Real(RealParity),
    Complex(ComplexWeight),
}

/// A ramified place of an idele-class character over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamifiedComponent {
    /// `θ_p` on `ℤ_p^×`.
    pub local: RamifiedLocalCharacter,
    /// `ω_p(p)`.
    pub eigenvalue: Angle,
}

/// An idele-class character of finite order and zero global twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdeleClassCharacter {
    field: NumberFieldDescriptor,
    archimedean: Vec<ArchimedeanComponent>,
    ramified: Vec<RamifiedComponent>,
    dirichlet: Option<DirichletCharacter>,
}

pub fn trivial_character(field: NumberFieldDescriptor) -> IdeleClassCharacter {
    IdeleClassCharacter::trivial(field)
}

pub fn from_dirichlet(chi: &DirichletCharacter) -> Result<IdeleClassCharacter> {
    IdeleClassCharacter::from_dirichlet(chi)
}

impl IdeleClassCharacter {
    pub fn trivial(field: NumberFieldDescriptor) -> IdeleClassCharacter {
        let mut archimedean = vec![ArchimedeanComponent::Real(RealParity::EVEN); field.real_places as usize];
        archimedean.extend(std::iter::repeat_n(
            ArchimedeanComponent::Complex(ComplexWeight::default()),
            field.complex_places as usize,
        ));
        IdeleClassCharacter { field, archimedean, ramified: Vec::new(), dirichlet: None }
    }

    pub fn from_dirichlet(chi: &DirichletCharacter) -> Result<IdeleClassCharacter> {
        if !chi.is_primitive() {
            return Err(AdelicError::NotPrimitive(format!(
                "character mod {} has conductor {}",
                chi.modulus(),
                chi.conductor()
            )));
        }
        let field = NumberFieldDescriptor::rationals();
        if chi.modulus() == 1 {
            return Ok(IdeleClassCharacter::trivial(field));
        }
        let factors = factorize(chi.modulus());
        let components: Vec<Vec<Option<Angle>>> = factors.iter().map(|&(p, _)| chi.component(p)).collect();
        let mut ramified = Vec::with_capacity(factors.len());
        for (i, &(p, e)) in factors.iter().enumerate() {
            let theta: Vec<Option<Angle>> = components[i].iter().map(|v| v.map(|a| -a)).collect();
            let local = RamifiedLocalCharacter::new(p, e, 0, theta)?;
            let eigenvalue =
                factors.iter().enumerate().filter(|&(j, _)| j != i).fold(Angle::ZERO, |acc, (j, &(q, f))| {
                    let qf = q.pow(f);
                    acc + components[j][(p % qf) as usize].expect("p is a unit mod q^f")
                });
            ramified.push(RamifiedComponent { local, eigenvalue });
        }
        Ok(IdeleClassCharacter {
            field,
            archimedean: vec![ArchimedeanComponent::Real(chi.parity())],
            ramified,
            dirichlet: Some(chi.clone()),
        })
    }

    pub fn field(&self) -> &NumberFieldDescriptor {
        &self.field
    }

    pub fn archimedean(&self) -> &[ArchimedeanComponent] {
        &self.archimedean
    }

    pub fn ramified(&self) -> &[RamifiedComponent] {
        &self.ramified
    }

    /// The underlying primitive Dirichlet character, for characters of ℚ
    /// built by [`IdeleClassCharacter::from_dirichlet`].
    pub fn dirichlet(&self) -> Option<&DirichletCharacter> {
        self.dirichlet.as_ref()
    }

    pub fn is_trivial(&self) -> bool {
        self.dirichlet.is_none()
    }

    /// `(p, ρ_p)` over the ramified set, ascending in p.
    pub fn local_ranks(&self) -> Vec<(u64, u32)> {
        self.ramified.iter().map(|r| (r.local.prime(), r.local.rank())).collect()
    }

    pub fn largest_ramified_prime(&self) -> Option<u64> {
        self.ramified.last().map(|r| r.local.prime())
    }

    pub fn is_ramified_at(&self, p: u64) -> bool {
        self.ramified.iter().any(|r| r.local.prime() == p)
    }

    /// `N(J) = Π p^{ρ_p}`.
    pub fn conductor_norm(&self) -> u64 {
        self.ramified.iter().map(|r| r.local.modulus()).product()
    }

    /// `λ(v) = ω_v(π_v)` at a place where ω is unramified, as an angle.
    pub fn lambda_angle(&self, place: &FinitePlace) -> Angle {
        match &self.dirichlet {
            None => Angle::ZERO,
            Some(chi) => {
                debug_assert!(!self.is_ramified_at(place.prime));
                chi.angle(place.prime as i64).expect("unramified prime is a unit")
            }
        }
    }

    pub fn lambda(&self, place: &FinitePlace) -> ComplexValue {
        self.lambda_angle(place).to_complex()
    }

    pub fn conj(&self) -> IdeleClassCharacter {
        match &self.dirichlet {
            None => self.clone(),
            Some(chi) => IdeleClassCharacter::from_dirichlet(&chi.conj()).expect("conjugate stays primitive"),
        }
    }

    /// `ω ω'`, required to have the same field. For Dirichlet characters
    /// the product must again be primitive of the same modulus.
    pub fn product(&self, other: &IdeleClassCharacter) -> Result<IdeleClassCharacter> {
        if self.field != other.field {
            return Err(AdelicError::Domain("characters live over different fields".into()));
        }
        match (&self.dirichlet, &other.dirichlet) {
            (None, None) => Ok(self.clone()),
            (Some(a), None) | (None, Some(a)) => IdeleClassCharacter::from_dirichlet(a),
            (Some(a), Some(b)) => {
                let prod = a.mul(b).map_err(|e| AdelicError::RankMismatch(e.to_string()))?;
                if prod.is_principal() && prod.modulus() > 1 {
                    return Err(AdelicError::RankMismatch(format!(
                        "product of the characters mod {} is principal",
                        a.modulus()
                    )));
                }
                IdeleClassCharacter::from_dirichlet(&prod).map_err(|_| {
                    AdelicError::RankMismatch(format!("product character mod {} is imprimitive", a.modulus()))
                })
            }
        }
    }
}

/// `κ = Π_v κ_v` with `κ_v = (−1)^{ν_v}` at real places, `i^{−(ν_v+|ν_v|)}` at
/// complex places, 1 at unramified finite places and `θ_v(−1) \bar κ(θ_v)` at
/// ramified places.
pub fn kappa_global(omega: &IdeleClassCharacter) -> Result<ComplexValue> {
    if !omega.ramified.is_empty() && omega.field.kind != FieldKind::Rationals {
        return Err(AdelicError::UnsupportedField("ramified characters over K ≠ ℚ".into()));
    }
    let mut kappa = ComplexValue::new(1.0, 0.0);
    for a in &omega.archimedean {
        kappa *= match a {
            ArchimedeanComponent::Real(nu) => ComplexValue::new(nu.sign(), 0.0),
            ArchimedeanComponent::Complex(nu) => i_pow(-(nu.value() + nu.abs())),
        };
    }
    for r in &omega.ramified {
        kappa *= r.local.value(-1) * kappa_local(&r.local)?.conj();
    }
    Ok(kappa)
}

/// `ω(C) = Π_{v ∈ R} ω_v(π_v)^{r_v+ρ_v}`.
pub fn omega_c(omega: &IdeleClassCharacter) -> Result<ComplexValue> {
    if !omega.ramified.is_empty() && omega.field.kind != FieldKind::Rationals {
        return Err(AdelicError::UnsupportedField("ramified characters over K ≠ ℚ".into()));
    }
    let phase = omega.ramified.iter().fold(Angle::ZERO, |acc, r| acc + r.eigenvalue.scale(r.local.rank() as i64));
    Ok(phase.to_complex())
}

/// Constant `κ ω(C)` of the gamma identity.
pub fn gamma_constant(omega: &IdeleClassCharacter) -> Result<ComplexValue> {
    Ok(kappa_global(omega)? * omega_c(omega)?)
}

/// Constant of the beta identity: `(−1)^η c c' \bar c''` with `c = κ ω(C)`
/// and `η = ν + ν'` at the real place (`(−1)^η` comes from reflecting the
/// third archimedean gamma factor). Over fields without ramified data it is
/// `Π_v` of the same expression place by place.
pub fn beta_constant(
    omega: &IdeleClassCharacter,
    omega2: &IdeleClassCharacter,
    omega3: &IdeleClassCharacter,
) -> Result<ComplexValue> {
    let mut sign = 1.0;
    for (a, b) in omega.archimedean.iter().zip(&omega2.archimedean) {
        if let (ArchimedeanComponent::Real(nu), ArchimedeanComponent::Real(mu)) = (a, b) {
            sign *= (*nu + *mu).sign();
        }
    }
    Ok(sign * gamma_constant(omega)? * gamma_constant(omega2)? * gamma_constant(omega3)?.conj())
}

/// Parsed character spec: `trivial` or `chi(m=M,k=K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacterSpec {
    Trivial,
    Dirichlet { modulus: u64, index: u64 },
}

impl FromStr for CharacterSpec {
    type Err = AdelicError;
    fn from_str(s: &str) -> Result<CharacterSpec> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "trivial" {
            return Ok(CharacterSpec::Trivial);
        }
        let bad = || AdelicError::Parse(format!("cannot read character spec {s:?}"));
        let inner = compact.strip_prefix("chi(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (mut modulus, mut index) = (None, None);
        for part in inner.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: u64 = value.parse().map_err(|_| bad())?;
            match key {
                "m" => modulus = Some(value),
                "k" => index = Some(value),
                _ => return Err(bad()),
            }
        }
        match (modulus, index) {
            (Some(modulus), Some(index)) if modulus > 0 => Ok(CharacterSpec::Dirichlet { modulus, index }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::Trivial => write!(f, "trivial"),
            CharacterSpec::Dirichlet { modulus, index } => write!(f, "chi(m={modulus},k={index})"),
        }
    }
}

impl CharacterSpec {
    pub fn build(&self, field: &NumberFieldDescriptor) -> Result<IdeleClassCharacter> {
        match *self {
            CharacterSpec::Trivial => Ok(IdeleClassCharacter::trivial(*field)),
            CharacterSpec::Dirichlet { modulus, index } => {
                if !field.is_rationals() {
                    return Err(AdelicError::UnsupportedField(format!(
                        "Dirichlet characters are only supported over Q, not {}",
                        field.kind
                    )));
                }
                let chi = CharacterGroup::new(modulus)?.character(index)?;
                IdeleClassCharacter::from_dirichlet(&chi)
            }
        }
    }
}
