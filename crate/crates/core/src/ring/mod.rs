//! Exact commutative rings in which 2 is a unit: Z/m (m odd), GF(p), Z[1/2],
//! and polynomial rings over one of those.

mod dyadic;
mod ideal;
mod local;
mod parse;
mod poly;
mod sample;
pub(crate) mod scalar;

pub use dyadic::Dyadic;
pub use ideal::{Ideal, IdealShape};
pub use local::{crt_reconstruct, local_factors, localize_at_prime, Localization};
pub use poly::{Mono, Poly};
pub use sample::{sample_element, SampleBounds};
pub use scalar::{is_prime, prime_factors, radical, Base, Scalar};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum RingDesc {
    IntegersMod(u64),
    PrimeField(u64),
    Dyadic,
    Polynomial { base: Ring, vars: Vec<String> },
}

/// Cheap shared handle to a ring descriptor.
#[derive(Clone, Debug, Eq)]
pub struct Ring(Arc<RingDesc>);

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Ring {
    pub fn zmod(m: u64) -> Result<Ring> {
        if m < 3 || m % 2 == 0 {
            return Err(Error::InvalidRing(format!("zmod:{m} needs odd m >= 3")));
        }
        Ok(Ring(Arc::new(RingDesc::IntegersMod(m))))
    }

    pub fn gf(p: u64) -> Result<Ring> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidRing(format!("gf:{p} needs an odd prime")));
        }
        Ok(Ring(Arc::new(RingDesc::PrimeField(p))))
    }

    pub fn dyadic() -> Ring {
        Ring(Arc::new(RingDesc::Dyadic))
    }

    pub fn poly(base: &Ring, vars: &[&str]) -> Result<Ring> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        Ring::poly_owned(base, names)
    }

    pub fn poly_owned(base: &Ring, vars: Vec<String>) -> Result<Ring> {
        if base.is_polynomial() {
            return Err(Error::InvalidRing("polynomial base must not be polynomial".into()));
        }
        if vars.is_empty() {
            return Err(Error::InvalidRing("polynomial ring needs variables".into()));
        }
        for (k, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
            }
            if vars[..k].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable {v}")));
            }
        }
        Ok(Ring(Arc::new(RingDesc::Polynomial { base: base.clone(), vars })))
    }

    /// Parse `zmod:9`, `gf:5`, `dyadic`, `poly:dyadic:a,b,x`, `poly:zmod:9:X`.
    pub fn parse(s: &str) -> Result<Ring> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("poly:") {
            let (base, vars) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Parse(format!("bad polynomial descriptor {s}")))?;
            let base = Ring::parse(base)?;
            let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
            return Ring::poly_owned(&base, vars);
        }
        if s == "dyadic" {
            return Ok(Ring::dyadic());
        }
        let parse_num = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad ring parameter in {s}")))
        };
        if let Some(m) = s.strip_prefix("zmod:") {
            return Ring::zmod(parse_num(m)?);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            return Ring::gf(parse_num(p)?);
        }
        Err(Error::Parse(format!("unknown ring descriptor {s}")))
    }

    pub fn desc(&self) -> &RingDesc {
        &self.0
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(*self.0, RingDesc::Polynomial { .. })
    }

    pub fn base(&self) -> Base {
        match &*self.0 {
            RingDesc::IntegersMod(m) | RingDesc::PrimeField(m) => Base::Mod(*m),
            RingDesc::Dyadic => Base::Dyadic,
            RingDesc::Polynomial { base, .. } => base.base(),
        }
    }

    /// The coefficient ring of a polynomial ring, or the ring itself.
    pub fn coefficient_ring(&self) -> Ring {
        match &*self.0 {
            RingDesc::Polynomial { base, .. } => base.clone(),
            _ => self.clone(),
        }
    }

    pub fn vars(&self) -> &[String] {
        match &*self.0 {
            RingDesc::Polynomial { vars, .. } => vars,
            _ => &[],
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars().len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name} in {self}")))
    }

    /// Modulus of Z/m or GF(p).
    pub fn modulus(&self) -> Option<u64> {
        match &*self.0 {
            RingDesc::IntegersMod(m) | RingDesc::PrimeField(m) => Some(*m),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    pub fn zero(&self) -> Elem {
        self.wrap_scalar(self.base().zero())
    }

    pub fn one(&self) -> Elem {
        self.wrap_scalar(self.base().one())
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.wrap_scalar(self.base().from_i64(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Elem {
        self.wrap_scalar(self.base().from_bigint(v))
    }

    pub fn from_dyadic(&self, d: Dyadic) -> Result<Elem> {
        match self.base() {
            Base::Dyadic => Ok(self.wrap_scalar(Scalar::Dy(d))),
            Base::Mod(_) => {
                let n = self.from_bigint(d.numerator());
                let two_k = self.from_i64(2).pow(d.exponent());
                let inv = two_k.inverse().expect("2 is a unit");
                Ok(&n * &inv)
            }
        }
    }

    /// Inverse of 2, which exists in every constructible ring.
    pub fn half(&self) -> Elem {
        self.one().half()
    }

    pub fn var(&self, name: &str) -> Result<Elem> {
        let idx = self.var_index(name)?;
        Ok(self.var_at(idx))
    }

    pub fn var_at(&self, idx: usize) -> Elem {
        Elem {
            ring: self.clone(),
            val: Value::P(Poly::var(self.base(), idx, self.nvars())),
        }
    }

    pub(crate) fn wrap_scalar(&self, s: Scalar) -> Elem {
        let val = if self.is_polynomial() {
            Value::P(Poly::constant(self.base(), s, self.nvars()))
        } else {
            Value::S(s)
        };
        Elem { ring: self.clone(), val }
    }

    pub fn from_poly(&self, p: Poly) -> Elem {
        assert!(self.is_polynomial());
        Elem { ring: self.clone(), val: Value::P(p) }
    }

    /// All elements of a finite ring in residue order.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        let m = self
            .modulus()
            .ok_or_else(|| Error::Precondition(format!("{self} is not finite")))?;
        Ok((0..m).map(|v| self.wrap_scalar(Scalar::Res(v))).collect())
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        parse::parse_expr(self, s)
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            RingDesc::IntegersMod(m) => write!(f, "zmod:{m}"),
            RingDesc::PrimeField(p) => write!(f, "gf:{p}"),
            RingDesc::Dyadic => write!(f, "dyadic"),
            RingDesc::Polynomial { base, vars } => write!(f, "poly:{base}:{}", vars.join(",")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Value {
    S(Scalar),
    P(Poly),
}

/// Element of a [`Ring`] in canonical form, so structural equality is ring equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem {
    ring: Ring,
    val: Value,
}

impl Elem {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    fn same(&self, other: &Elem) {
        if self.ring != other.ring {
            panic!("ring mismatch: {} vs {}", self.ring, other.ring);
        }
    }

    fn with(&self, val: Value) -> Elem {
        Elem { ring: self.ring.clone(), val }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match &self.val {
            Value::P(p) => Some(p),
            Value::S(_) => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        match &self.val {
            Value::S(s) => Some(s),
            Value::P(_) => None,
        }
    }

    /// Residue in [0, m) for Z/m and GF(p).
    pub fn residue(&self) -> Option<u64> {
        match &self.val {
            Value::S(Scalar::Res(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.val {
            Value::S(s) => self.ring.base().is_zero(s),
            Value::P(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn add_ref(&self, other: &Elem) -> Elem {
        self.same(other);
        let b = self.ring.base();
        match (&self.val, &other.val) {
            (Value::S(x), Value::S(y)) => self.with(Value::S(b.add(x, y))),
            (Value::P(x), Value::P(y)) => self.with(Value::P(x.add(b, y))),
            _ => unreachable!(),
        }
    }

    pub fn neg_ref(&self) -> Elem {
        let b = self.ring.base();
        match &self.val {
            Value::S(x) => self.with(Value::S(b.neg(x))),
            Value::P(x) => self.with(Value::P(x.neg(b))),
        }
    }

    pub fn sub_ref(&self, other: &Elem) -> Elem {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Elem) -> Elem {
        self.same(other);
        let b = self.ring.base();
        match (&self.val, &other.val) {
            (Value::S(x), Value::S(y)) => self.with(Value::S(b.mul(x, y))),
            (Value::P(x), Value::P(y)) => self.with(Value::P(x.mul(b, y))),
            _ => unreachable!(),
        }
    }

    pub fn pow(&self, e: u32) -> Elem {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn half(&self) -> Elem {
        let b = self.ring.base();
        let h = b.half(&b.one());
        self.scale(&h)
    }

    pub fn scale(&self, c: &Scalar) -> Elem {
        let b = self.ring.base();
        match &self.val {
            Value::S(x) => self.with(Value::S(b.mul(x, c))),
            Value::P(x) => self.with(Value::P(x.scale(b, c))),
        }
    }

    pub fn small(&self, v: i64) -> Elem {
        self.ring.from_i64(v)
    }

    /// Multiplicative inverse. Polynomials over Z/m are units when the constant
    /// term is a unit and every other coefficient is nilpotent.
    pub fn inverse(&self) -> Option<Elem> {
        let b = self.ring.base();
        match &self.val {
            Value::S(x) => b.inverse(x).map(|s| self.with(Value::S(s))),
            Value::P(p) => {
                let n = self.ring.nvars();
                let c0 = p.constant_term(b, n);
                let u = b.inverse(&c0)?;
                let mut rest = p.clone();
                rest.terms.remove(&Mono::one(n));
                if !rest.terms.values().all(|c| b.is_nilpotent(c)) {
                    return None;
                }
                // (c0 + r)^-1 = c0^-1 * sum (-r c0^-1)^k, finite since r is nilpotent.
                let t = rest.scale(b, &u).neg(b);
                let mut term = Poly::constant(b, b.one(), n);
                let mut acc = Poly::zero();
                for _ in 0..4096 {
                    if term.is_zero() {
                        return Some(self.with(Value::P(acc.scale(b, &u))));
                    }
                    acc = acc.add(b, &term);
                    term = term.mul(b, &t);
                }
                None
            }
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Exponent of the largest power of variable `v` dividing this element;
    /// `None` for zero.
    pub fn valuation(&self, v: usize) -> Option<u32> {
        match &self.val {
            Value::P(p) => p.valuation(v),
            Value::S(_) => {
                if self.is_zero() {
                    None
                } else {
                    Some(0)
                }
            }
        }
    }

    pub fn divide_var_power(&self, v: usize, k: u32) -> Result<Elem> {
        let p = self
            .as_poly()
            .ok_or_else(|| Error::Precondition("not a polynomial".into()))?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        if p.valuation(v).unwrap_or(0) < k {
            return Err(Error::Divisibility(format!(
                "{} is not divisible by {}^{k}",
                self, self.ring.vars()[v]
            )));
        }
        Ok(self.with(Value::P(p.divide_var_power(v, k))))
    }

    pub fn mul_var_power(&self, v: usize, k: u32) -> Elem {
        match &self.val {
            Value::P(p) => self.with(Value::P(p.mul_var_power(v, k))),
            Value::S(_) => panic!("not a polynomial"),
        }
    }

    /// Substitute variable `v` by `q` (same ring).
    pub fn substitute(&self, v: usize, q: &Elem) -> Elem {
        self.same(q);
        match (&self.val, &q.val) {
            (Value::P(p), Value::P(qq)) => {
                self.with(Value::P(p.substitute(self.ring.base(), v, qq, self.ring.nvars())))
            }
            _ => panic!("not a polynomial"),
        }
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.as_poly().map(|p| p.degree_in(v)).unwrap_or(0)
    }

    pub fn coefficient_in(&self, v: usize, d: u32) -> Elem {
        match &self.val {
            Value::P(p) => self.with(Value::P(p.coefficient_in(v, d))),
            Value::S(_) => panic!("not a polynomial"),
        }
    }

    /// Image of a constant polynomial in the coefficient ring.
    pub fn to_coefficient(&self) -> Option<Elem> {
        let p = self.as_poly()?;
        if !p.is_constant() {
            return None;
        }
        let base = self.ring.coefficient_ring();
        Some(base.wrap_scalar(p.constant_term(self.ring.base(), self.ring.nvars())))
    }

    /// Embed a coefficient-ring element into this polynomial ring.
    pub fn lift_into(&self, poly_ring: &Ring) -> Elem {
        self.ring.check_same(&poly_ring.coefficient_ring()).expect("coefficient ring");
        let s = self.as_scalar().expect("scalar").clone();
        poly_ring.wrap_scalar(s)
    }

    pub fn term_count(&self) -> usize {
        match &self.val {
            Value::P(p) => p.terms.len(),
            Value::S(_) => usize::from(!self.is_zero()),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.val {
            Value::S(s) => write!(f, "{s}"),
            Value::P(p) => write!(f, "{}", p.format(self.ring.vars())),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&Elem> for &Elem {
            type Output = Elem;
            fn $m(self, rhs: &Elem) -> Elem {
                self.$f(rhs)
            }
        }
        impl $tr<Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                self.$f(&rhs)
            }
        }
        impl $tr<&Elem> for Elem {
            type Output = Elem;
            fn $m(self, rhs: &Elem) -> Elem {
                self.$f(rhs)
            }
        }
        impl $tr<Elem> for &Elem {
            type Output = Elem;
            fn $m(self, rhs: Elem) -> Elem {
                self.$f(&rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

impl Neg for Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_even_characteristic() {
        assert!(Ring::zmod(4).is_err());
        assert!(Ring::zmod(1).is_err());
        assert!(Ring::gf(2).is_err());
        assert!(Ring::gf(9).is_err());
        assert!(Ring::zmod(9).is_ok());
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["zmod:9", "gf:5", "dyadic", "poly:dyadic:a,b,x", "poly:zmod:9:X"] {
            assert_eq!(Ring::parse(s).unwrap().to_string(), s);
        }
        assert!(Ring::parse("poly:poly:dyadic:a:b").is_err());
        assert!(Ring::parse("poly:dyadic:a,a").is_err());
    }

    #[test]
    fn half_times_two_is_one() {
        for s in ["zmod:9", "gf:7", "dyadic", "poly:zmod:15:x"] {
            let r = Ring::parse(s).unwrap();
            assert!((r.half() * r.from_i64(2)).is_one(), "{s}");
        }
    }

    #[test]
    fn polynomial_printing_is_canonical() {
        let r = Ring::parse("poly:dyadic:a,x").unwrap();
        let a = r.var("a").unwrap();
        let x = r.var("x").unwrap();
        let e = &a * &x + &x * &x - r.from_i64(3) + a.half();
        assert_eq!(e.to_string(), "a*x + x^2 + 1/2^1*a - 3");
        assert_eq!(r.parse_elem(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn nilpotent_perturbation_is_a_unit() {
        let r = Ring::parse("poly:zmod:9:X").unwrap();
        let x = r.var("X").unwrap();
        let u = r.from_i64(2) + r.from_i64(3) * &x;
        let inv = u.inverse().unwrap();
        assert!((&u * &inv).is_one());
        assert!((r.one() + &x).inverse().is_none());
    }

    #[test]
    fn substitution_and_valuation() {
        let r = Ring::parse("poly:dyadic:X,Y").unwrap();
        let x = r.var("X").unwrap();
        let y = r.var("Y").unwrap();
        let f = &x * &x + &x;
        let g = f.substitute(0, &(&y * &y * &x));
        assert_eq!(g.valuation(1), Some(2));
        assert_eq!(g.divide_var_power(1, 2).unwrap().valuation(1), Some(0));
        assert!(g.divide_var_power(1, 3).is_err());
    }
}
