use std::f64::consts::TAU;
use std::{fmt, ops};

use crate::arith::gcd;
use crate::ComplexValue;

/// A root of unity `exp(2πi·num/den)` held as an exact fraction of a turn.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Angle {
    num: u64,
    den: u64,
}

impl Angle {
    pub const ZERO: Angle = Angle { num: 0, den: 1 };

    pub fn new(num: i64, den: u64) -> Angle {
        assert!(den > 0, "angle denominator must be positive");
        let n = num.rem_euclid(den as i64) as u64;
        let g = gcd(n, den);
        Angle { num: n / g, den: den / g }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn scale(self, k: i64) -> Angle {
        let n = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        Angle::new(n as i64, self.den)
    }

    /// The root of unity. Quarter turns are returned exactly.
    pub fn to_complex(self) -> ComplexValue {
        turn_to_complex(self.num as u128, self.den as u128)
    }
}

impl ops::Add for Angle {
    type Output = Angle;

    fn add(self, other: Angle) -> Angle {
        let den = self.den / gcd(self.den, other.den) * other.den;
        let a =
            (self.num as u128 * (den / self.den) as u128 + other.num as u128 * (den / other.den) as u128) % den as u128;
        Angle::new(a as i64, den)
    }
}

impl ops::Neg for Angle {
    type Output = Angle;

    fn neg(self) -> Angle {
        Angle::new(-(self.num as i64), self.den)
    }
}

/// `exp(2πi·num/den)` for an unreduced fraction, exact at quarter turns.
pub(crate) fn turn_to_complex(num: u128, den: u128) -> ComplexValue {
    let num = num % den;
    if (4 * num).is_multiple_of(den) {
        return crate::i_pow((4 * num / den) as i64);
    }
    let t = TAU * (num as f64 / den as f64);
    ComplexValue::new(t.cos(), t.sin())
}

impl Angle {}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} turn", self.num, self.den)
    }
}
