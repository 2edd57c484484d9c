use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ideal};
use std::fmt;

/// σ(2i−1) = 2i, σ(2i) = 2i−1.
pub fn sigma(i: usize) -> usize {
    assert!(i >= 1);
    if i % 2 == 1 { i + 1 } else { i - 1 }
}

/// (−1)^k as ±1.
pub fn sign(k: usize) -> i64 {
    if k % 2 == 0 { 1 } else { -1 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Linear,
    Symplectic,
}

impl Family {
    pub fn code(self) -> &'static str {
        match self {
            Family::Linear => "L",
            Family::Symplectic => "S",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s {
            "L" | "l" | "E" => Ok(Family::Linear),
            "S" | "s" => Ok(Family::Symplectic),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// E_ij(arg) or se_ij(arg). A formal inverse is the same atom with `-arg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub fam: Family,
    pub i: usize,
    pub j: usize,
    pub arg: Elem,
}

impl Atom {
    pub fn new(fam: Family, i: usize, j: usize, arg: Elem) -> Atom {
        Atom { fam, i, j, arg }
    }

    pub fn lin(i: usize, j: usize, arg: Elem) -> Atom {
        Atom::new(Family::Linear, i, j, arg)
    }

    pub fn sp(i: usize, j: usize, arg: Elem) -> Atom {
        Atom::new(Family::Symplectic, i, j, arg)
    }

    pub fn inverse(&self) -> Atom {
        Atom { arg: -&self.arg, ..self.clone() }
    }

    pub fn check(&self, size: usize) -> Result<()> {
        if self.i == self.j || self.i == 0 || self.j == 0 || self.i > size || self.j > size {
            return Err(Error::Index(format!("({}, {}) in size {size}", self.i, self.j)));
        }
        if self.fam == Family::Symplectic && size % 2 == 1 {
            return Err(Error::Size(format!("symplectic atom in odd size {size}")));
        }
        Ok(())
    }

    /// Whether the atom is a long-root symplectic generator (i = σ(j)).
    pub fn is_long(&self) -> bool {
        self.fam == Family::Symplectic && self.i == sigma(self.j)
    }

    /// First-row atoms take any argument; first-column atoms need an argument in `ideal`.
    pub fn is_first_rowcol(&self, ideal: &Ideal) -> bool {
        self.i == 1 || (self.j == 1 && ideal.contains(&self.arg).unwrap_or(false))
    }

    pub fn matrix(&self, size: usize) -> Result<Matrix> {
        self.check(size)?;
        let mut m = Matrix::identity(self.arg.ring(), size);
        self.apply_right(&mut m);
        Ok(m)
    }

    /// `m ← m · atom`, as column operations.
    pub fn apply_right(&self, m: &mut Matrix) {
        let n = m.n();
        let z = &self.arg;
        if z.is_zero() {
            return;
        }
        for r in 1..=n {
            let v = m.get(r, self.j) + &(m.get(r, self.i) * z);
            m.set(r, self.j, v);
        }
        if self.fam == Family::Symplectic && self.i != sigma(self.j) {
            let (a, b) = (sigma(self.j), sigma(self.i));
            let c = z.small(-sign(self.i + self.j)) * z;
            for r in 1..=n {
                let v = m.get(r, b) + &(m.get(r, a) * &c);
                m.set(r, b, v);
            }
        }
    }

    /// `v ← v · atom` for a row vector (0-based storage).
    pub fn apply_row(&self, v: &mut [Elem]) {
        let z = &self.arg;
        if z.is_zero() {
            return;
        }
        v[self.j - 1] = &v[self.j - 1] + &(&v[self.i - 1] * z);
        if self.fam == Family::Symplectic && self.i != sigma(self.j) {
            let (a, b) = (sigma(self.j), sigma(self.i));
            let c = z.small(-sign(self.i + self.j)) * z;
            v[b - 1] = &v[b - 1] + &(&v[a - 1] * &c);
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{},{}:{}", self.fam.code(), self.i, self.j, self.arg)
    }
}

pub fn elem_linear(size: usize, i: usize, j: usize, arg: &Elem) -> Result<Matrix> {
    Atom::lin(i, j, arg.clone()).matrix(size)
}

/// se_ij(z) of size 2n.
pub fn elem_symplectic(n: usize, i: usize, j: usize, z: &Elem) -> Result<Matrix> {
    Atom::sp(i, j, z.clone()).matrix(2 * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::standard_form;
    use crate::ring::Ring;

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1), 2);
        assert_eq!(sigma(4), 3);
        for k in 1..=12 {
            assert_eq!(sigma(sigma(k)), k);
        }
    }

    #[test]
    fn linear_definition() {
        let r = Ring::zmod(9).unwrap();
        let m = elem_linear(2, 2, 1, &r.from_i64(5)).unwrap();
        assert_eq!(m, Matrix::from_i64(&r, &[&[1, 0], &[5, 1]]).unwrap());
        assert!(elem_linear(2, 1, 1, &r.one()).is_err());
        assert!(elem_linear(2, 1, 3, &r.one()).is_err());
    }

    #[test]
    fn symplectic_branches() {
        let r = Ring::parse("poly:dyadic:z").unwrap();
        let z = r.var("z").unwrap();
        let mut e12 = Matrix::identity(&r, 4);
        e12.set(1, 2, z.clone());
        assert_eq!(elem_symplectic(2, 1, 2, &z).unwrap(), e12);
        let mut e13 = Matrix::identity(&r, 4);
        e13.set(1, 3, z.clone());
        e13.set(4, 2, -z.clone());
        assert_eq!(elem_symplectic(2, 1, 3, &z).unwrap(), e13);
    }

    #[test]
    fn every_generator_is_symplectic() {
        let r = Ring::parse("poly:dyadic:z").unwrap();
        let z = r.var("z").unwrap();
        for n in 1..=3 {
            let psi = standard_form(&r, n);
            for i in 1..=2 * n {
                for j in 1..=2 * n {
                    if i != j {
                        let m = elem_symplectic(n, i, j, &z).unwrap();
                        assert!(m.is_symplectic(&psi).unwrap(), "se_{i}{j}");
                        let t = elem_symplectic(n, j, i, &z).unwrap();
                        assert_eq!(m.transpose(), t);
                    }
                }
            }
        }
    }

    #[test]
    fn linear_symplectic_membership() {
        let r = Ring::zmod(9).unwrap();
        let psi = standard_form(&r, 2);
        // E_12 coincides with the long-root generator se_12.
        assert!(elem_linear(4, 1, 2, &r.one()).unwrap().is_symplectic(&psi).unwrap());
        assert!(!elem_linear(4, 1, 3, &r.one()).unwrap().is_symplectic(&psi).unwrap());
    }
}
