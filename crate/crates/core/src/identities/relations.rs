//! The commutator relations among symplectic generators, in printed and
//! corrected form, checked by exact evaluation.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{sample_element, Elem, Ring};
use crate::words::{sigma, sign, Atom, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub const RELATION_IDS: std::ops::RangeInclusive<u8> = 3..=15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationForm {
    Printed,
    Corrected,
}

#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub id: u8,
    pub n: usize,
    pub indices: Vec<usize>,
    pub a: Elem,
    pub b: Elem,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub id: u8,
    pub indices: Vec<usize>,
    pub form: RelationForm,
    pub holds: bool,
    pub lhs: Matrix,
    pub rhs: Matrix,
}

#[derive(Clone, Copy, Debug)]
pub enum SuiteMode {
    Symbolic,
    Sampled { count: usize, seed: u64 },
}

/// Whether the printed and corrected forms differ.
pub fn has_correction(id: u8) -> bool {
    matches!(id, 6..=9 | 15)
}

/// Index tuples for which a relation is asserted.
pub fn admissible_tuples(id: u8, n: usize, form: RelationForm) -> Vec<Vec<usize>> {
    let idx = 1..=2 * n;
    let mut out = Vec::new();
    match id {
        3..=5 => {
            for i in idx.clone() {
                for j in idx.clone() {
                    for k in idx.clone() {
                        if i != j && j != k && k != i {
                            out.push(vec![i, j, k]);
                        }
                    }
                }
            }
        }
        6..=13 => {
            for i in idx.clone() {
                for j in idx.clone() {
                    if i != j && i != sigma(j) {
                        out.push(vec![i, j]);
                    }
                }
            }
        }
        14 => {
            for i in idx.clone() {
                for k in idx.clone() {
                    if k != i && k != sigma(i) {
                        out.push(vec![i, k]);
                    }
                }
            }
        }
        15 => {
            for i in idx.clone() {
                for j in idx.clone() {
                    for k in idx.clone() {
                        for l in idx.clone() {
                            let ok = i != j
                                && k != l
                                && i != sigma(k)
                                && i != l
                                && j != k
                                && j != sigma(k)
                                && (form == RelationForm::Printed || j != sigma(l));
                            if ok {
                                out.push(vec![i, j, k, l]);
                            }
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

fn check_indices(inst: &RelationInstance, form: RelationForm) -> Result<()> {
    if inst.n < 2 {
        return Err(Error::Precondition("relations need n >= 2".into()));
    }
    if !admissible_tuples(inst.id, inst.n, form).contains(&inst.indices) {
        return Err(Error::Index(format!(
            "indices {:?} not admissible for relation {} ({form:?})",
            inst.indices, inst.id
        )));
    }
    Ok(())
}

/// Both sides of a relation as words.
pub fn relation_words(inst: &RelationInstance, form: RelationForm) -> Result<(Word, Word)> {
    if !RELATION_IDS.contains(&inst.id) {
        return Err(Error::Precondition(format!("unknown relation id {}", inst.id)));
    }
    check_indices(inst, form)?;
    let ring = inst.a.ring().clone();
    let size = 2 * inst.n;
    let (a, b) = (&inst.a, &inst.b);
    let w = |atoms: Vec<Atom>| Word::from_atoms(&ring, size, atoms);
    let s = |i: usize, j: usize, z: Elem| Atom::sp(i, j, z);
    let c = |k: i64| ring.from_i64(k);
    let ab = a * b;
    // coefficient of the bilinear term in (6)–(9)
    let two = if form == RelationForm::Printed { c(2) } else { c(1) };
    let x = &inst.indices;
    let comm = |g: Atom, h: Atom| -> Result<Word> { Ok(Word::commutator(&w(vec![g])?, &w(vec![h])?)) };
    let (lhs, rhs) = match inst.id {
        3..=5 => {
            let (i, j, k) = (x[0], x[1], x[2]);
            let g = w(vec![s(i, j, a.clone())])?;
            let h = w(vec![s(j, k, b.clone())])?;
            let kk = w(vec![s(k, i, ab.clone())])?;
            match inst.id {
                3 => (
                    Word::commutator(&g.concat(&h), &kk),
                    Word::conjugate(&g, &Word::commutator(&h, &kk)).concat(&Word::commutator(&g, &kk)),
                ),
                4 => (
                    Word::commutator(&g, &h.concat(&kk)),
                    Word::commutator(&g, &h).concat(&Word::conjugate(&h, &Word::commutator(&g, &kk))),
                ),
                _ => (
                    Word::conjugate(&g, &Word::commutator(&h, &kk)),
                    Word::commutator(&Word::conjugate(&g, &h), &Word::conjugate(&g, &kk)),
                ),
            }
        }
        6..=13 => {
            let (i, j) = (x[0], x[1]);
            let (si, sj) = (sigma(i), sigma(j));
            let e = c(sign(i + j));
            match inst.id {
                6 => (
                    comm(s(i, j, a.clone()), s(si, i, b.clone()))?,
                    w(vec![s(si, j, -(&two * &ab)), s(sj, j, &e * &(a * &ab))])?,
                ),
                7 => (
                    comm(s(i, j, a.clone()), s(j, sj, b.clone()))?,
                    w(vec![s(i, si, &e * &(a * &ab)), s(i, sj, &two * &ab)])?,
                ),
                8 => (
                    comm(s(si, i, a.clone()), s(sj, si, b.clone()))?,
                    w(vec![s(sj, i, -(&two * &ab)), s(sj, j, -(&e * &(&ab * b)))])?,
                ),
                9 => (
                    comm(s(si, i, a.clone()), s(i, j, b.clone()))?,
                    w(vec![s(si, j, &two * &ab), s(sj, j, -(&e * &(&ab * b)))])?,
                ),
                10 => (comm(s(i, j, a.clone()), s(j, si, b.clone()))?, w(vec![s(i, si, c(2) * &ab)])?),
                11 => (comm(s(i, j, a.clone()), s(sj, i, b.clone()))?, w(vec![s(sj, j, c(-2) * &ab)])?),
                12 => (comm(s(si, i, a.clone()), s(sj, j, b.clone()))?, w(vec![])?),
                _ => (comm(s(sj, j, a.clone()), s(si, j, b.clone()))?, w(vec![])?),
            }
        }
        14 => {
            let (i, k) = (x[0], x[1]);
            (w(vec![s(i, sigma(i), a.clone())])?, comm(s(i, k, a.half()), s(k, sigma(i), c(1)))?)
        }
        _ => {
            let (i, j, k, l) = (x[0], x[1], x[2], x[3]);
            (comm(s(i, j, a.clone()), s(k, l, b.clone()))?, w(vec![])?)
        }
    };
    Ok((lhs, rhs))
}

pub fn verify_relation(inst: &RelationInstance, form: RelationForm) -> Result<RelationReport> {
    let (l, r) = relation_words(inst, form)?;
    let (lhs, rhs) = (l.eval()?, r.eval()?);
    Ok(RelationReport {
        id: inst.id,
        indices: inst.indices.clone(),
        form,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// ℤ[1/2][a, b]-style ring over the given base, unless it already has `a` and `b`.
pub fn symbolic_ring(ring: &Ring) -> Result<Ring> {
    if ring.var_index("a").is_ok() && ring.var_index("b").is_ok() {
        return Ok(ring.clone());
    }
    if ring.is_polynomial() {
        return Err(Error::Precondition(format!("{ring} lacks variables a, b")));
    }
    Ring::poly(ring, &["a", "b"])
}

/// Every relation over every admissible tuple, in (id, tuple) order.
/// In sampled mode a tuple holds iff all of its samples hold.
pub fn verify_relation_suite(
    n: usize,
    ring: &Ring,
    mode: SuiteMode,
    form: RelationForm,
) -> Result<Vec<RelationReport>> {
    if n < 2 {
        return Err(Error::Precondition("relation suite needs n >= 2".into()));
    }
    let jobs: Vec<(u8, Vec<usize>)> = RELATION_IDS
        .flat_map(|id| admissible_tuples(id, n, form).into_iter().map(move |t| (id, t)))
        .collect();
    let ring = match mode {
        SuiteMode::Symbolic => symbolic_ring(ring)?,
        SuiteMode::Sampled { .. } => ring.clone(),
    };
    jobs.par_iter()
        .enumerate()
        .map(|(k, (id, t))| match mode {
            SuiteMode::Symbolic => {
                let inst = RelationInstance {
                    id: *id,
                    n,
                    indices: t.clone(),
                    a: ring.var("a")?,
                    b: ring.var("b")?,
                };
                verify_relation(&inst, form)
            }
            SuiteMode::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
                let mut first: Option<RelationReport> = None;
                for _ in 0..count.max(1) {
                    let inst = RelationInstance {
                        id: *id,
                        n,
                        indices: t.clone(),
                        a: sample_element(&ring, None, &mut rng)?,
                        b: sample_element(&ring, None, &mut rng)?,
                    };
                    let rep = verify_relation(&inst, form)?;
                    let failed = !rep.holds;
                    if first.is_none() || failed {
                        first = Some(rep);
                    }
                    if failed {
                        break;
                    }
                }
                Ok(first.unwrap())
            }
        })
        .collect()
}
