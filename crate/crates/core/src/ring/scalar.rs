use super::dyadic::Dyadic;
use num_bigint::BigInt;
use std::fmt;

/// Coefficient arithmetic shared by the base rings and polynomial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Mod(u64),
    Dyadic,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Res(u64),
    Dy(Dyadic),
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

impl Base {
    pub fn zero(&self) -> Scalar {
        match self {
            Base::Mod(_) => Scalar::Res(0),
            Base::Dyadic => Scalar::Dy(Dyadic::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Base::Mod(m) => Scalar::Res(1 % m),
            Base::Dyadic => Scalar::Dy(Dyadic::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Base::Mod(m) => Scalar::Res((v as i128).rem_euclid(*m as i128) as u64),
            Base::Dyadic => Scalar::Dy(Dyadic::from_i64(v)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            Base::Mod(m) => {
                let r = v % BigInt::from(*m);
                let r = if r < BigInt::from(0) { r + BigInt::from(*m) } else { r };
                Scalar::Res(r.to_string().parse().unwrap())
            }
            Base::Dyadic => Scalar::Dy(Dyadic::new(v.clone(), 0)),
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Res(v) => *v == 0,
            Scalar::Dy(d) => d.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Base::Mod(m), Scalar::Res(x), Scalar::Res(y)) => {
                Scalar::Res(((*x as u128 + *y as u128) % *m as u128) as u64)
            }
            (Base::Dyadic, Scalar::Dy(x), Scalar::Dy(y)) => Scalar::Dy(x.add(y)),
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Base::Mod(m), Scalar::Res(x)) => Scalar::Res((m - x % m) % m),
            (Base::Dyadic, Scalar::Dy(x)) => Scalar::Dy(x.neg()),
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Base::Mod(m), Scalar::Res(x), Scalar::Res(y)) => {
                Scalar::Res(((*x as u128 * *y as u128) % *m as u128) as u64)
            }
            (Base::Dyadic, Scalar::Dy(x), Scalar::Dy(y)) => Scalar::Dy(x.mul(y)),
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn inverse(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Base::Mod(m), Scalar::Res(x)) => mod_inverse(*x, *m).map(Scalar::Res),
            (Base::Dyadic, Scalar::Dy(x)) => x.inverse().map(Scalar::Dy),
            _ => panic!("scalar kind mismatch"),
        }
    }

    pub fn half(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Base::Mod(m), Scalar::Res(_)) => {
                let h = mod_inverse(2, *m).expect("2 is a unit");
                self.mul(a, &Scalar::Res(h))
            }
            (Base::Dyadic, Scalar::Dy(x)) => Scalar::Dy(x.half()),
            _ => panic!("scalar kind mismatch"),
        }
    }

    /// Nilpotent elements: in Z/m those divisible by every prime factor of m.
    pub fn is_nilpotent(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Base::Mod(m), Scalar::Res(x)) => {
                let rad = radical(*m);
                x % rad == 0
            }
            (Base::Dyadic, Scalar::Dy(x)) => x.is_zero(),
            _ => panic!("scalar kind mismatch"),
        }
    }
}

pub fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn radical(m: u64) -> u64 {
    prime_factors(m).iter().map(|(p, _)| p).product()
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && prime_factors(p) == vec![(p, 1)]
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Res(v) => write!(f, "{v}"),
            Scalar::Dy(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(2, 9), Some(5));
        assert_eq!(mod_inverse(3, 9), None);
        assert_eq!(mod_inverse(7, 15), Some(13));
    }

    #[test]
    fn factors() {
        assert_eq!(prime_factors(45), vec![(3, 2), (5, 1)]);
        assert_eq!(radical(27), 3);
        assert!(is_prime(7) && !is_prime(9));
    }
}
