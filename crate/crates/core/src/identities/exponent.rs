//! Least N with α(a^N X) = β(a^N X) for polynomial matrices agreeing at 0.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{prime_factors, Elem, Scalar};
use num_integer::Integer;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub exponent: Option<u32>,
    /// Over ℤ/m: whether α = β after inverting a, i.e. modulo the part of m
    /// coprime to a.
    pub equal_after_inverting: Option<bool>,
}

pub fn find_dilation_exponent(alpha: &Matrix, beta: &Matrix, var: &str, a: &Elem, bound: u32) -> Result<ExponentReport> {
    let ring = alpha.ring();
    ring.check_same(beta.ring())?;
    if alpha.n() != beta.n() {
        return Err(Error::Size("α and β differ in size".into()));
    }
    let v = ring.var_index(var)?;
    let x = ring.var_at(v);
    let at = |m: &Matrix, q: &Elem| m.map(|e| e.substitute(v, q));
    if at(alpha, &ring.zero()) != at(beta, &ring.zero()) {
        return Err(Error::Precondition("α(0) ≠ β(0)".into()));
    }
    let a = if a.ring() == ring { a.clone() } else { a.lift_into(ring) };
    let mut exponent = None;
    let mut scale = ring.one();
    for n in 0..=bound {
        let q = &scale * &x;
        if at(alpha, &q) == at(beta, &q) {
            exponent = Some(n);
            break;
        }
        scale = scale * &a;
    }
    Ok(ExponentReport { exponent, equal_after_inverting: localized_equal(alpha, beta, &a) })
}

fn localized_equal(alpha: &Matrix, beta: &Matrix, a: &Elem) -> Option<bool> {
    let m = alpha.ring().coefficient_ring().modulus()?;
    let av = a.to_coefficient().or_else(|| Some(a.clone()))?.residue()?;
    let mut coprime = m;
    for (p, _) in prime_factors(m) {
        if av % p == 0 {
            while coprime % p == 0 {
                coprime /= p;
            }
        }
    }
    let diff = alpha.sub(beta).ok()?;
    for e in diff.rows().into_iter().flatten() {
        let coeffs: Vec<u64> = match e.as_poly() {
            Some(p) => p.terms.values().filter_map(|c| if let Scalar::Res(r) = c { Some(*r) } else { None }).collect(),
            None => e.residue().into_iter().collect(),
        };
        if coeffs.iter().any(|c| !c.is_multiple_of(&coprime)) {
            return Some(false);
        }
    }
    Some(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn equal_maps_need_nothing() {
        let r = Ring::parse("poly:zmod:9:X").unwrap();
        let m = Matrix::identity(&r, 2);
        let rep = find_dilation_exponent(&m, &m, "X", &r.from_i64(3), 4).unwrap();
        assert_eq!(rep.exponent, Some(0));
    }

    #[test]
    fn nilpotent_difference_is_killed() {
        let r = Ring::parse("poly:zmod:9:X").unwrap();
        let x = r.var("X").unwrap();
        let alpha = Matrix::identity(&r, 2);
        let mut beta = Matrix::identity(&r, 2);
        beta.set(1, 2, r.from_i64(3) * &x);
        let rep = find_dilation_exponent(&alpha, &beta, "X", &r.from_i64(3), 4).unwrap();
        assert_eq!(rep.exponent, Some(1));
        assert_eq!(rep.equal_after_inverting, Some(true));
    }

    #[test]
    fn unit_difference_never_dies() {
        let r = Ring::parse("poly:zmod:9:X").unwrap();
        let x = r.var("X").unwrap();
        let alpha = Matrix::identity(&r, 2);
        let mut beta = Matrix::identity(&r, 2);
        beta.set(1, 2, x.clone());
        let rep = find_dilation_exponent(&alpha, &beta, "X", &r.from_i64(2), 6).unwrap();
        assert_eq!(rep, ExponentReport { exponent: None, equal_after_inverting: Some(false) });
        let rep = find_dilation_exponent(&alpha, &beta, "X", &r.from_i64(3), 6).unwrap();
        assert_eq!(rep.exponent, Some(2));
        beta.set(1, 1, r.from_i64(2));
        assert!(find_dilation_exponent(&alpha, &beta, "X", &r.one(), 1).is_err());
    }
}
