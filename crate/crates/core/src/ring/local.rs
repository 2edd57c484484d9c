use super::{prime_factors, Elem, Ring};
use crate::error::{Error, Result};

/// Local factor Z/p^k of Z/m together with the CRT projection.
#[derive(Clone, Debug)]
pub struct Localization {
    pub source: Ring,
    pub target: Ring,
    pub prime: u64,
    pub exponent: u32,
}

impl Localization {
    pub fn map(&self, x: &Elem) -> Result<Elem> {
        self.source.check_same(x.ring())?;
        let r = x.residue().expect("finite ring element");
        Ok(self.target.from_i64((r % self.target.modulus().unwrap()) as i64))
    }

    pub fn modulus(&self) -> u64 {
        self.target.modulus().unwrap()
    }
}

pub fn localize_at_prime(ring: &Ring, p: u64) -> Result<Localization> {
    let m = ring
        .modulus()
        .ok_or_else(|| Error::Precondition(format!("{ring} is not Z/m")))?;
    if p == 2 {
        return Err(Error::Precondition("p = 2 is excluded".into()));
    }
    let (_, k) = prime_factors(m)
        .into_iter()
        .find(|&(q, _)| q == p)
        .ok_or_else(|| Error::Precondition(format!("{p} does not divide {m}")))?;
    let pk = p.pow(k);
    let target = if pk == m { ring.clone() } else { Ring::zmod(pk)? };
    Ok(Localization { source: ring.clone(), target, prime: p, exponent: k })
}

/// All local factors of Z/m, in increasing order of the prime.
pub fn local_factors(ring: &Ring) -> Result<Vec<Localization>> {
    let m = ring
        .modulus()
        .ok_or_else(|| Error::Precondition(format!("{ring} is not Z/m")))?;
    prime_factors(m)
        .into_iter()
        .map(|(p, _)| localize_at_prime(ring, p))
        .collect()
}

/// Inverse of the joint projection to all local factors.
pub fn crt_reconstruct(factors: &[Localization], images: &[Elem]) -> Result<Elem> {
    let first = factors
        .first()
        .ok_or_else(|| Error::Precondition("no local factors".into()))?;
    let ring = first.source.clone();
    let m = ring.modulus().unwrap() as u128;
    let mut acc = 0u128;
    for (loc, img) in factors.iter().zip(images) {
        let pk = loc.modulus() as u128;
        let cof = m / pk;
        let inv = super::scalar::mod_inverse((cof % pk) as u64, pk as u64)
            .ok_or_else(|| Error::Construction("CRT cofactor not invertible".into()))?
            as u128;
        let r = img.residue().expect("finite") as u128;
        acc = (acc + r * inv % pk * cof) % m;
    }
    Ok(ring.from_i64(acc as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections() {
        let r = Ring::zmod(15).unwrap();
        let l = localize_at_prime(&r, 3).unwrap();
        assert_eq!(l.target.to_string(), "zmod:3");
        assert_eq!(l.map(&r.from_i64(7)).unwrap().residue(), Some(1));
        let r = Ring::zmod(45).unwrap();
        let l = localize_at_prime(&r, 3).unwrap();
        assert_eq!(l.target.to_string(), "zmod:9");
        assert_eq!(l.map(&r.from_i64(10)).unwrap().residue(), Some(1));
        let r = Ring::zmod(9).unwrap();
        let l = localize_at_prime(&r, 3).unwrap();
        assert_eq!(l.target, r);
        assert!(localize_at_prime(&r, 5).is_err());
        assert!(localize_at_prime(&r, 2).is_err());
    }

    #[test]
    fn reconstruction() {
        let r = Ring::zmod(45).unwrap();
        let fs = local_factors(&r).unwrap();
        for x in r.elements().unwrap() {
            let imgs: Vec<Elem> = fs.iter().map(|f| f.map(&x).unwrap()).collect();
            assert_eq!(crt_reconstruct(&fs, &imgs).unwrap(), x);
        }
    }
}
