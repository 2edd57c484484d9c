//! Dense square matrices over a [`Ring`], 1-based indices.

mod json;
mod minors;

pub use json::MatrixJson;

use crate::error::{Error, Result};
use crate::ring::Ideal;
use crate::ring::{Elem, Ring};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    ring: Ring,
    n: usize,
    entries: Vec<Elem>,
}

impl Matrix {
    pub fn zero(ring: &Ring, n: usize) -> Matrix {
        assert!(n >= 1, "matrix size must be positive");
        Matrix { ring: ring.clone(), n, entries: vec![ring.zero(); n * n] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Matrix::zero(ring, n);
        for i in 1..=n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Elem>>) -> Result<Matrix> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Size("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Size(format!("row of length {} in {n}x{n} matrix", row.len())));
            }
            for e in row {
                ring.check_same(e.ring())?;
                entries.push(e);
            }
        }
        Ok(Matrix { ring: ring.clone(), n, entries })
    }

    pub fn from_i64(ring: &Ring, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(
            ring,
            rows.iter().map(|r| r.iter().map(|&v| ring.from_i64(v)).collect()).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        let n = self.n;
        self.entries[(i - 1) * n + (j - 1)] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        (1..=self.n).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (1..=self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        (1..=self.n).map(|i| self.row(i)).collect()
    }

    fn check(&self, other: &Matrix) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        if self.n != other.n {
            return Err(Error::Size(format!("{} vs {}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other)?;
        let n = self.n;
        let mut out = Matrix::zero(&self.ring, n);
        for i in 1..=n {
            for k in 1..=n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 1..=n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn scale(&self, c: &Elem) -> Matrix {
        self.map(|e| e * c)
    }

    pub fn map(&self, f: impl Fn(&Elem) -> Elem) -> Matrix {
        Matrix { ring: self.ring.clone(), n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    /// Entrywise image in another ring.
    pub fn map_into(&self, ring: &Ring, f: impl Fn(&Elem) -> Elem) -> Matrix {
        Matrix { ring: ring.clone(), n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(&self.ring, self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| {
                let e = self.get(i, j);
                if i == j { e.is_one() } else { e.is_zero() }
            })
        })
    }

    /// Whether every entry is congruent to the identity modulo `ideal`.
    pub fn is_identity_mod(&self, ideal: &Ideal) -> bool {
        let one = self.ring.one();
        let zero = self.ring.zero();
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| {
                ideal.congruent(self.get(i, j), if i == j { &one } else { &zero })
            })
        })
    }

    /// Block-diagonal sum `self ⊥ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Result<Matrix> {
        self.ring.check_same(&other.ring)?;
        let n = self.n + other.n;
        let mut out = Matrix::zero(&self.ring, n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 1..=other.n {
            for j in 1..=other.n {
                out.set(self.n + i, self.n + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.n {
            return Err(Error::Size(format!("row of length {} vs {}", v.len(), self.n)));
        }
        Ok((1..=self.n)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(self.ring.zero(), |acc, (k, x)| acc + x * self.get(k + 1, j))
            })
            .collect())
    }

    pub fn det(&self) -> Elem {
        minors::det(self)
    }

    /// Inverse through the adjugate; the determinant must be a unit.
    pub fn inverse(&self) -> Result<Matrix> {
        let d = self.det();
        let di = d.inverse().ok_or_else(|| Error::NotUnit(d.to_string()))?;
        if self.n == 1 {
            return Matrix::from_rows(&self.ring, vec![vec![di]]);
        }
        let mut out = Matrix::zero(&self.ring, self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                let rows = (1..=self.n)
                    .filter(|&r| r != i)
                    .map(|r| (1..=self.n).filter(|&c| c != j).map(|c| self.get(r, c).clone()).collect())
                    .collect();
                let cof = Matrix::from_rows(&self.ring, rows)?.det();
                let cof = if (i + j) % 2 == 0 { cof } else { -cof };
                out.set(j, i, cof * &di);
            }
        }
        Ok(out)
    }

    pub fn is_alternating(&self) -> bool {
        (1..=self.n).all(|i| {
            self.get(i, i).is_zero()
                && (i + 1..=self.n).all(|j| (self.get(i, j) + self.get(j, i)).is_zero())
        })
    }

    pub fn pfaffian(&self) -> Result<Elem> {
        if self.n % 2 == 1 {
            return Err(Error::Size(format!("pfaffian of odd size {}", self.n)));
        }
        if self.n > 12 {
            return Err(Error::Size(format!("pfaffian size {} exceeds 12", self.n)));
        }
        if !self.is_alternating() {
            return Err(Error::Precondition("matrix is not alternating".into()));
        }
        Ok(minors::pfaffian(self))
    }

    /// `M^t φ M = φ`.
    pub fn is_symplectic(&self, form: &Matrix) -> Result<bool> {
        self.check(form)?;
        Ok(self.transpose().mul(form)?.mul(self)? == *form)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::from_matrix(self, false)
    }

    pub fn from_json(j: &MatrixJson) -> Result<Matrix> {
        j.to_matrix()
    }
}

/// The standard form ψ_n of size 2n.
pub fn standard_form(ring: &Ring, n: usize) -> Matrix {
    assert!(n >= 1);
    let mut m = Matrix::zero(ring, 2 * n);
    for i in 1..=n {
        m.set(2 * i - 1, 2 * i, ring.one());
        m.set(2 * i, 2 * i - 1, -ring.one());
    }
    m
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
