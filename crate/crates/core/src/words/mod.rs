//! Generator atoms, words of atoms, and the transvection matrices built from them.

mod atom;
mod serial;
mod transvection;

pub use atom::{elem_linear, elem_symplectic, sigma, sign, Atom, Family};
pub use serial::{AtomJson, WordJson};
pub use transvection::{
    bass_inverse, bass_symplectic_transvection, decompose_mu, decompose_rho,
    elementary_linear_transvection, elementary_linear_transvection_word, extended_form, mu_matrix, pairing,
    rho_matrix, LinearTransvection,
};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ideal, Ring};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordClass {
    Plain,
    /// Concatenation of triples ge_ij(a) ge_ji(x) ge_ij(−a) with x in the ideal.
    Relative(Ideal),
    /// Every atom has i = 1, or j = 1 with argument in the ideal.
    FirstRowCol(Ideal),
}

/// Ordered product of atoms acting on matrices of a fixed size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub ring: Ring,
    pub size: usize,
    pub atoms: Vec<Atom>,
    pub class: WordClass,
}

impl Word {
    pub fn new(ring: &Ring, size: usize) -> Word {
        Word { ring: ring.clone(), size, atoms: Vec::new(), class: WordClass::Plain }
    }

    pub fn from_atoms(ring: &Ring, size: usize, atoms: Vec<Atom>) -> Result<Word> {
        let w = Word { ring: ring.clone(), size, atoms, class: WordClass::Plain };
        w.check()?;
        Ok(w)
    }

    pub fn check(&self) -> Result<()> {
        for a in &self.atoms {
            self.ring.check_same(a.arg.ring())?;
            a.check(self.size)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn push(&mut self, a: Atom) {
        self.atoms.push(a);
    }

    pub fn with_class(mut self, class: WordClass) -> Word {
        self.class = class;
        self
    }

    pub fn eval(&self) -> Result<Matrix> {
        self.check()?;
        let mut m = Matrix::identity(&self.ring, self.size);
        for a in &self.atoms {
            a.apply_right(&mut m);
        }
        Ok(m)
    }

    /// Row vector times the evaluated word.
    pub fn apply_row(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.check()?;
        if v.len() != self.size {
            return Err(Error::Size(format!("row of length {} vs {}", v.len(), self.size)));
        }
        let mut out = v.to_vec();
        for a in &self.atoms {
            a.apply_row(&mut out);
        }
        Ok(out)
    }

    /// Reversed word with negated arguments.
    pub fn inverse(&self) -> Word {
        Word {
            ring: self.ring.clone(),
            size: self.size,
            atoms: self.atoms.iter().rev().map(Atom::inverse).collect(),
            class: self.class.clone(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let class = if self.class == other.class { self.class.clone() } else { WordClass::Plain };
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Word { ring: self.ring.clone(), size: self.size, atoms, class }
    }

    /// `[g, h] = g h g⁻¹ h⁻¹`.
    pub fn commutator(g: &Word, h: &Word) -> Word {
        g.concat(h).concat(&g.inverse()).concat(&h.inverse()).with_class(WordClass::Plain)
    }

    /// `g h g⁻¹`.
    pub fn conjugate(g: &Word, h: &Word) -> Word {
        g.concat(h).concat(&g.inverse()).with_class(WordClass::Plain)
    }

    /// Drop zero-argument atoms and merge adjacent atoms with equal family and indices.
    pub fn simplified(&self) -> Word {
        let mut out: Vec<Atom> = Vec::with_capacity(self.atoms.len());
        for a in &self.atoms {
            if a.arg.is_zero() {
                continue;
            }
            if let Some(last) = out.last_mut() {
                if last.fam == a.fam && last.i == a.i && last.j == a.j {
                    last.arg = &last.arg + &a.arg;
                    if last.arg.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push(a.clone());
        }
        Word { atoms: out, ..self.clone() }
    }

    pub fn is_first_rowcol(&self, ideal: &Ideal) -> bool {
        self.atoms.iter().all(|a| a.is_first_rowcol(ideal))
    }

    /// Whether the word is literally a concatenation of relative triples.
    pub fn is_relative_shape(&self, ideal: &Ideal) -> bool {
        self.atoms.len() % 3 == 0
            && self.atoms.chunks(3).all(|t| {
                t[0].fam == t[1].fam
                    && t[1].fam == t[2].fam
                    && t[0].i == t[2].i
                    && t[0].j == t[2].j
                    && t[1].i == t[0].j
                    && t[1].j == t[0].i
                    && (&t[0].arg + &t[2].arg).is_zero()
                    && ideal.contains(&t[1].arg).unwrap_or(false)
            })
    }

    /// Check the class tag against the atoms.
    pub fn class_holds(&self) -> bool {
        match &self.class {
            WordClass::Plain => true,
            WordClass::Relative(i) => self.is_relative_shape(i),
            WordClass::FirstRowCol(i) => self.is_first_rowcol(i),
        }
    }

    /// Substitute variable `v` in every argument.
    pub fn substitute(&self, v: usize, q: &Elem) -> Word {
        Word {
            atoms: self
                .atoms
                .iter()
                .map(|a| Atom { arg: a.arg.substitute(v, q), ..a.clone() })
                .collect(),
            ..self.clone()
        }
    }

    /// Inline form `S:2,1:3;S:3,1:1`.
    pub fn to_inline(&self) -> String {
        self.atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(";")
    }

    pub fn parse_inline(ring: &Ring, size: usize, s: &str) -> Result<Word> {
        serial::parse_inline(ring, size, s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&self.to_inline())
    }
}

/// ge_ij(a) ge_ji(x) ge_ij(−a), with x in `ideal`.
pub fn relative_generator(
    fam: Family,
    size: usize,
    i: usize,
    j: usize,
    a: &Elem,
    x: &Elem,
    ideal: &Ideal,
) -> Result<Word> {
    if !ideal.contains(x)? {
        return Err(Error::Precondition(format!("{x} is not in {ideal}")));
    }
    let ring = a.ring();
    let atoms = vec![
        Atom::new(fam, i, j, a.clone()),
        Atom::new(fam, j, i, x.clone()),
        Atom::new(fam, i, j, -a),
    ];
    Ok(Word::from_atoms(ring, size, atoms)?.with_class(WordClass::Relative(ideal.clone())))
}
