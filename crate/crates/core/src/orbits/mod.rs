//! Exhaustive orbit and subgroup computations over Z/m.

mod closure;
mod partition;

pub use closure::{
    kernel_membership_test, relative_symplectic_closure, square_ideal_inclusion_test, subgroup_closure, Closure, KernelReport,
    SquareIdealReport,
};
pub use partition::{
    check_dim0_transitivity, check_orbit_equality, orbit_partition, BfsStats, OrbitEqualityReport,
    OrbitPartition, TransitivityReport,
};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ideal, Ring};
use crate::words::{relative_generator, Atom, Family, Word};
use serde::{Deserialize, Serialize};

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_CAP: usize = 1_000_000;

/// Square matrix over Z/m with u32 entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub n: usize,
    pub m: u32,
    pub data: Vec<u32>,
}

impl IntMatrix {
    pub fn identity(n: usize, m: u32) -> IntMatrix {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1 % m;
        }
        IntMatrix { n, m, data }
    }

    pub fn from_matrix(a: &Matrix) -> Result<IntMatrix> {
        let m = a
            .ring()
            .modulus()
            .ok_or_else(|| Error::Precondition(format!("{} is not finite", a.ring())))? as u32;
        let data = a.rows().into_iter().flatten().map(|e| e.residue().unwrap() as u32).collect();
        Ok(IntMatrix { n: a.n(), m, data })
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let m = self.m as u64;
        let mut data = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.data[i * n + k] as u64 * o.data[k * n + j] as u64;
                }
                data[i * n + j] = (acc % m) as u32;
            }
        }
        IntMatrix { n, m: self.m, data }
    }

    /// v · M
    pub fn apply_row(&self, v: &[u32]) -> Vec<u32> {
        let n = self.n;
        let m = self.m as u64;
        (0..n)
            .map(|j| {
                let acc: u64 = (0..n).map(|k| v[k] as u64 * self.data[k * n + j] as u64).sum();
                (acc % m) as u32
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n, self.m)
    }

    /// Congruent to the identity modulo g (g | m).
    pub fn is_identity_mod(&self, g: u32) -> bool {
        let n = self.n;
        (0..n * n).all(|k| {
            let want = if k / n == k % n { 1 } else { 0 };
            (self.data[k] + g - want % g).is_multiple_of(g)
        })
    }

    pub fn key(&self) -> Vec<u8> {
        self.data.iter().map(|&x| x as u8).collect()
    }
}

/// Group families acting on rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupFamily {
    LinearE,
    SymplecticEsp,
    LinearERelative,
    SymplecticEspRelative,
    FirstRowcolE,
    FirstRowcolEsp,
}

impl GroupFamily {
    pub fn parse(s: &str) -> Result<GroupFamily> {
        Ok(match s {
            "e" | "linear" | "linear-e" => GroupFamily::LinearE,
            "esp" | "symplectic" | "symplectic-esp" => GroupFamily::SymplecticEsp,
            "e-rel" | "linear-e-relative" => GroupFamily::LinearERelative,
            "esp-rel" | "symplectic-esp-relative" => GroupFamily::SymplecticEspRelative,
            "e1" | "first-rowcol-e" => GroupFamily::FirstRowcolE,
            "esp1" | "first-rowcol-esp" => GroupFamily::FirstRowcolEsp,
            _ => return Err(Error::Parse(format!("unknown group family {s}"))),
        })
    }

    pub fn atom_family(self) -> Family {
        match self {
            GroupFamily::LinearE | GroupFamily::LinearERelative | GroupFamily::FirstRowcolE => Family::Linear,
            _ => Family::Symplectic,
        }
    }

    pub fn is_relative(self) -> bool {
        matches!(self, GroupFamily::LinearERelative | GroupFamily::SymplecticEspRelative)
    }
}

#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub size: usize,
    pub ring: Ring,
    pub ideal: Ideal,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, size: usize, ring: &Ring, ideal: Option<&Ideal>) -> Result<GroupSpec> {
        if !ring.is_finite() {
            return Err(Error::Precondition(format!("{ring} is not finite")));
        }
        if family.atom_family() == Family::Symplectic && size % 2 == 1 {
            return Err(Error::Size(format!("symplectic size {size} is odd")));
        }
        if size < 2 {
            return Err(Error::Size(format!("size {size}")));
        }
        let ideal = match ideal {
            Some(i) => {
                ring.check_same(i.ring())?;
                i.clone()
            }
            None => Ideal::full(ring),
        };
        Ok(GroupSpec { family, size, ring: ring.clone(), ideal })
    }
}

/// A generator as a word together with its evaluation and inverse.
#[derive(Clone, Debug)]
pub struct Generator {
    pub word: Word,
    pub matrix: IntMatrix,
    pub inverse: IntMatrix,
}

impl Generator {
    fn from_word(word: Word) -> Result<Generator> {
        let matrix = IntMatrix::from_matrix(&word.eval()?)?;
        let inverse = IntMatrix::from_matrix(&word.inverse().eval()?)?;
        Ok(Generator { word, matrix, inverse })
    }
}

fn pairs(size: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=size).flat_map(move |i| (1..=size).filter(move |&j| j != i).map(move |j| (i, j)))
}

fn ring_additive(ring: &Ring, reduced: bool) -> Result<Vec<Elem>> {
    if reduced {
        Ok(vec![ring.one()])
    } else {
        Ok(ring.elements()?.into_iter().filter(|e| !e.is_zero()).collect())
    }
}

fn ideal_additive(ideal: &Ideal, reduced: bool) -> Result<Vec<Elem>> {
    if reduced {
        ideal.additive_generators()
    } else {
        Ok(ideal.elements()?.into_iter().filter(|e| !e.is_zero()).collect())
    }
}

/// Generators of the group in `spec`. With `reduced`, arguments that enter
/// additively run over additive generators only.
pub fn generators_for(spec: &GroupSpec, reduced: bool) -> Result<Vec<Generator>> {
    let fam = spec.family.atom_family();
    let ring = &spec.ring;
    let size = spec.size;
    let single = |i, j, a: &Elem| -> Result<Generator> {
        Generator::from_word(Word::from_atoms(ring, size, vec![Atom::new(fam, i, j, a.clone())])?)
    };
    let mut out = Vec::new();
    match spec.family {
        GroupFamily::LinearE | GroupFamily::SymplecticEsp => {
            let args = ring_additive(ring, reduced)?;
            for (i, j) in pairs(size) {
                for a in &args {
                    out.push(single(i, j, a)?);
                }
            }
        }
        GroupFamily::LinearERelative | GroupFamily::SymplecticEspRelative => {
            let xs = ideal_additive(&spec.ideal, reduced)?;
            if xs.is_empty() {
                return Ok(out);
            }
            let all = ring.elements()?;
            for (i, j) in pairs(size) {
                for a in &all {
                    for x in &xs {
                        let w = relative_generator(fam, size, i, j, a, x, &spec.ideal)?;
                        out.push(Generator::from_word(w)?);
                    }
                }
            }
        }
        GroupFamily::FirstRowcolE | GroupFamily::FirstRowcolEsp => {
            let args = ring_additive(ring, reduced)?;
            let xs = ideal_additive(&spec.ideal, reduced)?;
            for j in 2..=size {
                for a in &args {
                    out.push(single(1, j, a)?);
                }
                for x in &xs {
                    out.push(single(j, 1, x)?);
                }
            }
        }
    }
    Ok(out)
}

/// Rows of Z/m^n whose entries generate the unit ideal, optionally ≡ e₁ mod I,
/// in lexicographic order.
pub fn enumerate_unimodular(ring: &Ring, n: usize, ideal: Option<&Ideal>, budget: u64) -> Result<Vec<Vec<u32>>> {
    let m = ring
        .modulus()
        .ok_or_else(|| Error::Precondition(format!("{ring} is not finite")))?;
    let total = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::Budget(format!("{m}^{n} rows exceed budget {budget}")));
    }
    let g = match ideal {
        Some(i) => i.modular_generator().ok_or_else(|| Error::Precondition("ideal of Z/m expected".into()))?,
        None => 1,
    };
    let mut out = Vec::new();
    let mut v = vec![0u64; n];
    for _ in 0..total {
        let gcd = v.iter().fold(m, |acc, &x| num_integer::gcd(acc, x));
        let congruent = g == 1 || (v[0] % g == 1 % g && v[1..].iter().all(|x| x % g == 0));
        if gcd == 1 && congruent {
            out.push(v.iter().map(|&x| x as u32).collect());
        }
        for k in (0..n).rev() {
            v[k] += 1;
            if v[k] < m {
                break;
            }
            v[k] = 0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
