//! Roots of unity tracked by their exact angle.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};

use super::cyclotomic::Cyclotomic;

/// e^{2πi·t} for a rational t normalized into [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    turn: Rational64,
}

impl RootOfUnity {
    pub fn new(turn: Rational64) -> Self {
        let f = turn - turn.floor();
        RootOfUnity { turn: f }
    }

    /// e^{2πi·k/n}
    pub fn from_fraction(k: i64, n: i64) -> Self {
        Self::new(Rational64::new(k, n))
    }

    pub fn one() -> Self {
        RootOfUnity { turn: Rational64::zero() }
    }

    pub fn turn(&self) -> Rational64 {
        self.turn
    }

    pub fn order(&self) -> u32 {
        *self.turn.denom() as u32
    }

    pub fn is_one(&self) -> bool {
        self.turn.is_zero()
    }

    pub fn inv(&self) -> Self {
        Self::new(-self.turn)
    }

    pub fn pow(&self, e: i64) -> Self {
        let d = *self.turn.denom();
        let k = (*self.turn.numer() as i128 * e as i128).rem_euclid(d as i128) as i64;
        Self::from_fraction(k, d)
    }

    /// Both square roots, the one with angle in [0, π) first.
    pub fn square_roots(&self) -> [Self; 2] {
        let half = self.turn / 2;
        [Self::new(half), Self::new(half + Rational64::new(1, 2))]
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.order(), *self.turn.numer())
    }

    /// Recovers the angle of a cyclotomic root of unity.
    pub fn from_cyclotomic(x: &Cyclotomic) -> Option<Self> {
        x.root_exponent()
            .map(|(k, m)| Self::from_fraction(k as i64, m as i64))
    }

    pub fn lcm_order(roots: &[RootOfUnity]) -> u32 {
        roots.iter().fold(1u32, |acc, r| acc.lcm(&r.order()))
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, o: RootOfUnity) -> RootOfUnity {
        RootOfUnity::new(self.turn + o.turn)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.turn.is_zero() {
            write!(f, "1")
        } else if self.turn == Rational64::new(1, 2) {
            write!(f, "-1")
        } else if self.turn.numer().is_one() {
            write!(f, "z{}", self.turn.denom())
        } else {
            write!(f, "z{}^{}", self.turn.denom(), self.turn.numer())
        }
    }
}
