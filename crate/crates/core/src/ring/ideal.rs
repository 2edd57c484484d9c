use super::{Base, Elem, Ring, Scalar};
use crate::error::{Error, Result};
use num_traits::Signed;
use num_integer::Integer;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealShape {
    Zero,
    Full,
    /// Principal ideal of a non-polynomial ring.
    Principal(Elem),
    /// Ideal generated by a set of variables of a polynomial ring (indices).
    Vars(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    shape: IdealShape,
}

impl Ideal {
    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), shape: IdealShape::Zero }
    }

    pub fn full(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), shape: IdealShape::Full }
    }

    /// Principal ideal, normalized: a unit generator gives the full ideal, zero
    /// the zero ideal, and over Z/m the generator becomes gcd(d, m).
    pub fn principal(g: &Elem) -> Result<Ideal> {
        let ring = g.ring().clone();
        if ring.is_polynomial() {
            return Err(Error::Precondition(
                "polynomial ideals must be variable-generated".into(),
            ));
        }
        if g.is_zero() {
            return Ok(Ideal::zero(&ring));
        }
        if g.is_unit() {
            return Ok(Ideal::full(&ring));
        }
        let g = match (ring.modulus(), g.residue()) {
            (Some(m), Some(r)) => ring.from_i64(r.gcd(&m) as i64),
            _ => match g.as_scalar() {
                Some(Scalar::Dy(d)) => ring.from_bigint(&d.odd_part().abs()),
                _ => g.clone(),
            },
        };
        Ok(Ideal { ring, shape: IdealShape::Principal(g) })
    }

    pub fn vars(ring: &Ring, names: &[&str]) -> Result<Ideal> {
        if !ring.is_polynomial() {
            return Err(Error::Precondition(format!("{ring} has no variables")));
        }
        let mut idx = names
            .iter()
            .map(|n| ring.var_index(n))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        if idx.is_empty() {
            return Ok(Ideal::zero(ring));
        }
        Ok(Ideal { ring: ring.clone(), shape: IdealShape::Vars(idx) })
    }

    /// Parse `ideal:3`, `ideal:vars:x,y`, `ideal:full`, `ideal:zero`; the
    /// `ideal:` prefix is optional.
    pub fn parse(ring: &Ring, s: &str) -> Result<Ideal> {
        let s = s.trim();
        let body = s.strip_prefix("ideal:").unwrap_or(s);
        match body {
            "full" => return Ok(Ideal::full(ring)),
            "zero" => return Ok(Ideal::zero(ring)),
            _ => {}
        }
        if let Some(vars) = body.strip_prefix("vars:") {
            let names: Vec<&str> = vars.split(',').map(str::trim).collect();
            return Ideal::vars(ring, &names);
        }
        Ideal::principal(&ring.parse_elem(body)?)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn shape(&self) -> &IdealShape {
        &self.shape
    }

    pub fn is_full(&self) -> bool {
        self.shape == IdealShape::Full
    }

    pub fn is_zero(&self) -> bool {
        self.shape == IdealShape::Zero
    }

    pub fn contains(&self, r: &Elem) -> Result<bool> {
        self.ring.check_same(r.ring())?;
        Ok(self.contains_unchecked(r))
    }

    pub(crate) fn contains_unchecked(&self, r: &Elem) -> bool {
        match &self.shape {
            IdealShape::Zero => r.is_zero(),
            IdealShape::Full => true,
            IdealShape::Principal(g) => match (self.ring.base(), g.as_scalar(), r.as_scalar()) {
                (Base::Mod(_), Some(Scalar::Res(d)), Some(Scalar::Res(v))) => v % d == 0,
                (Base::Dyadic, Some(Scalar::Dy(d)), Some(Scalar::Dy(v))) => {
                    v.is_divisible_by_odd(&d.odd_part())
                }
                _ => false,
            },
            IdealShape::Vars(vs) => r.as_poly().is_some_and(|p| {
                p.terms.keys().all(|m| vs.iter().any(|&v| m.0[v] > 0))
            }),
        }
    }

    /// Whether a ≡ b modulo this ideal.
    pub fn congruent(&self, a: &Elem, b: &Elem) -> bool {
        self.contains_unchecked(&(a - b))
    }

    /// Generators of the ideal as an additive group, for finite rings.
    pub fn additive_generators(&self) -> Result<Vec<Elem>> {
        if !self.ring.is_finite() {
            return Err(Error::Precondition(format!(
                "additive generators need a finite ring, got {}",
                self.ring
            )));
        }
        Ok(match &self.shape {
            IdealShape::Zero => vec![],
            IdealShape::Full => vec![self.ring.one()],
            IdealShape::Principal(g) => vec![g.clone()],
            IdealShape::Vars(_) => unreachable!(),
        })
    }

    /// All elements of the ideal of a finite ring.
    pub fn elements(&self) -> Result<Vec<Elem>> {
        Ok(self
            .ring
            .elements()?
            .into_iter()
            .filter(|e| self.contains_unchecked(e))
            .collect())
    }

    /// Generator over Z/m as an integer in [0, m]: 1 for the full ideal, m for zero.
    pub fn modular_generator(&self) -> Option<u64> {
        let m = self.ring.modulus()?;
        Some(match &self.shape {
            IdealShape::Zero => m,
            IdealShape::Full => 1,
            IdealShape::Principal(g) => g.residue()?,
            IdealShape::Vars(_) => return None,
        })
    }

    pub fn descriptor(&self) -> String {
        match &self.shape {
            IdealShape::Zero => "ideal:zero".into(),
            IdealShape::Full => "ideal:full".into(),
            IdealShape::Principal(g) => format!("ideal:{g}"),
            IdealShape::Vars(vs) => {
                let names: Vec<&str> = vs.iter().map(|&v| self.ring.vars()[v].as_str()).collect();
                format!("ideal:vars:{}", names.join(","))
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}
