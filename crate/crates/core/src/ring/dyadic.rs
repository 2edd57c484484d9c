use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An element n / 2^k of Z[1/2], kept with n odd whenever k > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic { num: BigInt::from(v), exp: 0 }
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        if self.exp == 0 {
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp as u64) as u32;
        if tz > 0 {
            self.num >>= tz;
            self.exp -= tz;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        Dyadic::new(a + b, e)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { num: -&self.num, exp: self.exp }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &other.num, self.exp + other.exp)
    }

    pub fn half(&self) -> Dyadic {
        Dyadic::new(self.num.clone(), self.exp + 1)
    }

    /// Units of Z[1/2] are ±2^t.
    pub fn inverse(&self) -> Option<Dyadic> {
        if self.num.is_zero() {
            return None;
        }
        let t = self.num.trailing_zeros().unwrap_or(0);
        let odd = self.num.abs() >> t;
        if !odd.is_one() {
            return None;
        }
        let sign = if self.num.is_negative() { -1 } else { 1 };
        Some(Dyadic::new(BigInt::from(sign) << self.exp, t as u32))
    }

    /// Odd part of the numerator; membership in a principal ideal (d) of Z[1/2]
    /// only depends on it.
    pub fn odd_part(&self) -> BigInt {
        if self.num.is_zero() {
            return BigInt::zero();
        }
        let t = self.num.trailing_zeros().unwrap_or(0);
        self.num.abs() >> t
    }

    pub fn is_divisible_by_odd(&self, d: &BigInt) -> bool {
        if d.is_zero() {
            return self.num.is_zero();
        }
        self.num.is_multiple_of(d)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}
