//! Elementary normal forms over local rings Z/p^k (p odd): completing
//! unimodular rows and reducing Pfaffian-one alternating forms to ψ_n.

use crate::error::{Error, Result};
use crate::matrix::{standard_form, Matrix};
use crate::ring::{local_factors, prime_factors, Elem, Ideal, Ring};
use crate::words::{relative_generator, Atom, Family, Word, WordClass};
use rand::Rng;

/// Z/p^k with p odd, carrying its maximal ideal (p).
#[derive(Clone, Debug)]
pub struct LocalRingWitness {
    pub ring: Ring,
    pub prime: u64,
    pub maximal: Ideal,
}

impl LocalRingWitness {
    pub fn new(ring: &Ring) -> Result<LocalRingWitness> {
        let m = ring
            .modulus()
            .ok_or_else(|| Error::Precondition(format!("{ring} is not a finite residue ring")))?;
        match prime_factors(m).as_slice() {
            [(p, _)] if *p != 2 => Ok(LocalRingWitness {
                ring: ring.clone(),
                prime: *p,
                maximal: Ideal::principal(&ring.from_i64(*p as i64))?,
            }),
            _ => Err(Error::Precondition(format!("{ring} is not local of odd characteristic"))),
        }
    }
}

fn relative_ideal<'a>(ring: &Ring, ideal: Option<&'a Ideal>) -> Result<Option<&'a Ideal>> {
    match ideal {
        Some(i) => {
            ring.check_same(i.ring())?;
            Ok(if i.is_full() { None } else { Some(i) })
        }
        None => Ok(None),
    }
}

fn unit_inv(x: &Elem) -> Result<Elem> {
    x.inverse().ok_or_else(|| Error::NotUnit(x.to_string()))
}

/// Single atom with argument in I written as the triple E_ji(0) E_ij(x) E_ji(0).
fn padded(size: usize, i: usize, j: usize, x: Elem, ideal: &Ideal) -> Result<Word> {
    let z = x.ring().zero();
    crate::words::relative_generator(crate::words::Family::Linear, size, j, i, &z, &x, ideal)
}

/// β with v = e₁·eval(β); relative to I when I is proper.
pub fn complete_unimodular_local(v: &[Elem], local: &LocalRingWitness, ideal: Option<&Ideal>) -> Result<Word> {
    let ring = &local.ring;
    let n = v.len();
    if n == 0 {
        return Err(Error::Size("empty row".into()));
    }
    for x in v {
        ring.check_same(x.ring())?;
    }
    let ideal = relative_ideal(ring, ideal)?;
    let mut w = v.to_vec();
    let mut gamma = Word::new(ring, n);
    let step = |gamma: &mut Word, w: &mut Vec<Elem>, a: Atom| {
        a.apply_row(w);
        gamma.push(a);
    };
    match ideal {
        None => {
            let p = w
                .iter()
                .position(Elem::is_unit)
                .ok_or_else(|| Error::Precondition("row is not unimodular".into()))?
                + 1;
            if !w[0].is_one() {
                if p > 1 {
                    let lam = (ring.one() - &w[0]) * unit_inv(&w[p - 1])?;
                    step(&mut gamma, &mut w, Atom::lin(p, 1, lam));
                } else if n == 1 {
                    return Err(Error::Precondition("a row of length 1 must be 1".into()));
                } else {
                    let mu = (ring.one() - &w[1]) * unit_inv(&w[0])?;
                    step(&mut gamma, &mut w, Atom::lin(1, 2, mu));
                    let nu = ring.one() - &w[0];
                    step(&mut gamma, &mut w, Atom::lin(2, 1, nu));
                }
            }
            for j in 2..=n {
                if !w[j - 1].is_zero() {
                    let x = -&w[j - 1];
                    step(&mut gamma, &mut w, Atom::lin(1, j, x));
                }
            }
        }
        Some(i) => {
            if !i.congruent(&w[0], &ring.one()) || w[1..].iter().any(|x| !i.contains_unchecked(x)) {
                return Err(Error::Precondition(format!("row is not congruent to e1 mod {i}")));
            }
            gamma = gamma.with_class(WordClass::Relative(i.clone()));
            if !w[0].is_one() {
                if n == 1 {
                    return Err(Error::Precondition("a row of length 1 must be 1".into()));
                }
                // E_21(1) E_12(z) E_21(−1) sends (u, w, ...) to (u − z(u+w), ...)
                let u = w[0].clone();
                let z = (&u - &ring.one()) * unit_inv(&(&u + &w[1]))?;
                let t = crate::words::relative_generator(crate::words::Family::Linear, n, 2, 1, &ring.one(), &z, i)?;
                for a in t.atoms {
                    step(&mut gamma, &mut w, a);
                }
            }
            for j in 2..=n {
                if !w[j - 1].is_zero() {
                    for a in padded(n, 1, j, -&w[j - 1], i)?.atoms {
                        step(&mut gamma, &mut w, a);
                    }
                }
            }
        }
    }
    let beta = gamma.inverse();
    let mut e1 = vec![ring.zero(); n];
    e1[0] = ring.one();
    if beta.apply_row(&e1)? != v {
        return Err(Error::Construction("unimodular completion failed its certificate".into()));
    }
    Ok(beta)
}

/// Word of size `size` shifted by `off` indices.
fn shifted(w: &Word, size: usize, off: usize) -> Word {
    let atoms = w.atoms.iter().map(|a| Atom { i: a.i + off, j: a.j + off, ..a.clone() }).collect();
    Word { ring: w.ring.clone(), size, atoms, class: w.class.clone() }
}

/// ε of size 2n−1 with (1 ⊥ eval ε)^t ψ_n (1 ⊥ eval ε) = φ.
pub fn reduce_alternating_local(phi: &Matrix, local: &LocalRingWitness, ideal: Option<&Ideal>) -> Result<Word> {
    let ring = &local.ring;
    ring.check_same(phi.ring())?;
    let size = phi.n();
    if size < 2 || size % 2 == 1 {
        return Err(Error::Size(format!("form of size {size}")));
    }
    if !phi.pfaffian()?.is_one() {
        return Err(Error::Precondition("Pfaffian is not 1".into()));
    }
    let ideal = relative_ideal(ring, ideal)?;
    let psi = standard_form(ring, size / 2);
    if let Some(i) = ideal {
        if !phi.sub(&psi)?.rows().iter().flatten().all(|x| i.contains_unchecked(x)) {
            return Err(Error::Precondition(format!("form is not congruent to ψ mod {i}")));
        }
    }
    let class = ideal.map_or(WordClass::Plain, |i| WordClass::Relative(i.clone()));
    let esize = size - 1;
    // N = product of applied congruences, kept as a word over indices 2..size
    let mut n_word = Word::new(ring, esize).with_class(class.clone());
    let mut cur = phi.clone();
    let apply = |cur: &Matrix, w: &Word| -> Result<Matrix> {
        let m = Matrix::identity(ring, 1).direct_sum(&w.eval()?)?;
        m.transpose().mul(cur)?.mul(&m)
    };
    for s in 0..size / 2 {
        let r0 = 2 * s + 1;
        // row r0 to e_{r0+1}
        let row: Vec<Elem> = (r0 + 1..=size).map(|j| cur.get(r0, j).clone()).collect();
        let beta = complete_unimodular_local(&row, local, ideal)?;
        let step = shifted(&beta.inverse(), esize, 2 * s);
        cur = apply(&cur, &step)?;
        n_word = n_word.concat(&step);
        if r0 + 1 == size {
            break;
        }
        // row r0+1 beyond the block via ∏ E_{k,r0+1}(x_k), x = −r B⁻¹
        let k0 = r0 + 2;
        let rows = (k0..=size).map(|a| (k0..=size).map(|b| cur.get(a, b).clone()).collect()).collect();
        let b_inv = Matrix::from_rows(ring, rows)?.inverse()?;
        let r: Vec<Elem> = (k0..=size).map(|j| -cur.get(r0 + 1, j)).collect();
        let x = row_times(&r, &b_inv);
        let mut step = Word::new(ring, esize).with_class(class.clone());
        for (t, xk) in x.into_iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            // full indices (k, r0+1) → ε indices shifted by one
            let (i, j) = (k0 + t - 1, r0);
            match ideal {
                Some(id) => step = step.concat(&padded(esize, i, j, xk, id)?),
                None => step.push(Atom::lin(i, j, xk)),
            }
        }
        cur = apply(&cur, &step)?;
        n_word = n_word.concat(&step);
    }
    if cur != psi {
        return Err(Error::Construction("reduction did not reach ψ".into()));
    }
    let eps = n_word.inverse();
    let m = Matrix::identity(ring, 1).direct_sum(&eps.eval()?)?;
    if m.transpose().mul(&psi)?.mul(&m)? != *phi {
        return Err(Error::Construction("form reduction failed its certificate".into()));
    }
    Ok(eps)
}

fn row_times(v: &[Elem], m: &Matrix) -> Vec<Elem> {
    m.apply_row(v).expect("sizes agree")
}

/// Local reduction at one prime of Z/m.
#[derive(Clone, Debug)]
pub struct LocalReduction {
    pub prime: u64,
    pub ring: Ring,
    pub phi: Matrix,
    pub epsilon: Word,
    pub verified: bool,
}

/// Reduce φ over Z/m (m odd) in each local factor Z/p^k.
pub fn reduce_alternating_semilocal(phi: &Matrix, ideal: Option<&Ideal>) -> Result<Vec<LocalReduction>> {
    let ring = phi.ring();
    if ring.modulus().is_none_or(|m| m % 2 == 0) {
        return Err(Error::Precondition(format!("{ring} is not Z/m with m odd")));
    }
    if !phi.pfaffian()?.is_one() {
        return Err(Error::Precondition("Pfaffian is not 1".into()));
    }
    let mut out = Vec::new();
    for loc in local_factors(ring)? {
        let target = loc.target.clone();
        let local = LocalRingWitness::new(&target)?;
        let image = phi.map_into(&target, |x| loc.map(x).expect("same ring"));
        let local_ideal = match ideal {
            Some(i) => {
                let g = i.modular_generator().ok_or_else(|| Error::Precondition("ideal of Z/m expected".into()))?;
                Some(Ideal::principal(&target.from_i64(g as i64))?)
            }
            None => None,
        };
        let epsilon = reduce_alternating_local(&image, &local, local_ideal.as_ref())?;
        out.push(LocalReduction { prime: loc.prime, ring: target, phi: image, epsilon, verified: true });
    }
    Ok(out)
}

/// Random product of `len` linear atoms (or relative triples with x ∈ I) over Z/m.
pub fn random_elementary_word<G: Rng + ?Sized>(
    ring: &Ring,
    size: usize,
    len: usize,
    ideal: Option<&Ideal>,
    rng: &mut G,
) -> Result<Word> {
    let m = ring.modulus().ok_or_else(|| Error::Precondition(format!("{ring} is not finite")))? as i64;
    if size < 2 {
        return Err(Error::Size(format!("size {size}")));
    }
    let mut w = Word::new(ring, size);
    for _ in 0..len {
        let i = rng.gen_range(1..=size);
        let mut j = rng.gen_range(1..=size);
        while j == i {
            j = rng.gen_range(1..=size);
        }
        let a = ring.from_i64(rng.gen_range(0..m));
        match ideal {
            Some(id) => {
                let g = id
                    .modular_generator()
                    .ok_or_else(|| Error::Precondition(format!("{id} is not an ideal of Z/m")))? as i64;
                let x = ring.from_i64(g * rng.gen_range(0..m));
                w = w.concat(&relative_generator(Family::Linear, size, i, j, &a, &x, id)?);
            }
            None => w.push(Atom::lin(i, j, a)),
        }
    }
    Ok(w)
}

/// (1 ⊥ eval ε)^t ψ (1 ⊥ eval ε) for ε of odd size.
pub fn form_from_word(eps: &Word) -> Result<Matrix> {
    let ring = &eps.ring;
    let m = Matrix::identity(ring, 1).direct_sum(&eps.eval()?)?;
    m.transpose().mul(&standard_form(ring, eps.size.div_ceil(2)))?.mul(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_eps(ring: &Ring, size: usize, ideal: Option<&Ideal>, rng: &mut ChaCha8Rng) -> Word {
        random_elementary_word(ring, size, 6, ideal, rng).unwrap()
    }

    fn form_of(eps: &Word) -> Matrix {
        form_from_word(eps).unwrap()
    }

    #[test]
    fn witness_rejects_non_local() {
        assert!(LocalRingWitness::new(&Ring::parse("zmod:15").unwrap()).is_err());
        assert_eq!(LocalRingWitness::new(&Ring::parse("zmod:27").unwrap()).unwrap().prime, 3);
    }

    #[test]
    fn completion_examples() {
        let r = Ring::parse("gf:3").unwrap();
        let l = LocalRingWitness::new(&r).unwrap();
        let e = |v: &[i64]| v.iter().map(|&x| r.from_i64(x)).collect::<Vec<_>>();
        assert!(complete_unimodular_local(&e(&[1, 0, 0]), &l, None).unwrap().is_empty());
        let b = complete_unimodular_local(&e(&[0, 1]), &l, None).unwrap();
        assert_eq!(b.apply_row(&e(&[1, 0])).unwrap(), e(&[0, 1]));
        assert!(complete_unimodular_local(&e(&[0, 0]), &l, None).is_err());

        let r = Ring::parse("zmod:9").unwrap();
        let l = LocalRingWitness::new(&r).unwrap();
        let i = Ideal::parse(&r, "3").unwrap();
        let v: Vec<Elem> = [4, 3, 0, 3].iter().map(|&x| r.from_i64(x)).collect();
        let b = complete_unimodular_local(&v, &l, Some(&i)).unwrap();
        assert!(b.class_holds());
        assert!(b.eval().unwrap().is_identity_mod(&i));
        assert!(complete_unimodular_local(&v[1..], &l, Some(&i)).is_err());
    }

    #[test]
    fn absolute_completion_is_short() {
        let r = Ring::parse("zmod:27").unwrap();
        let l = LocalRingWitness::new(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let v: Vec<Elem> = (0..n).map(|_| r.from_i64(rng.gen_range(0..27))).collect();
            match complete_unimodular_local(&v, &l, None) {
                Ok(b) => assert!(b.len() <= 2 * n),
                Err(_) => assert!(v.iter().all(|x| !x.is_unit()) || (n == 1 && !v[0].is_one())),
            }
        }
    }

    #[test]
    fn psi_reduces_to_empty_word() {
        let r = Ring::parse("zmod:15").unwrap();
        let l = LocalRingWitness::new(&Ring::parse("zmod:9").unwrap()).unwrap();
        assert!(reduce_alternating_local(&standard_form(&l.ring, 2), &l, None).unwrap().is_empty());
        let reps = reduce_alternating_semilocal(&standard_form(&r, 2), None).unwrap();
        assert_eq!(reps.iter().map(|x| x.prime).collect::<Vec<_>>(), vec![3, 5]);
        assert!(reps.iter().all(|x| x.epsilon.is_empty()));
    }

    #[test]
    fn round_trip_absolute_and_relative() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for ring in ["zmod:9", "gf:5", "zmod:27"] {
            let r = Ring::parse(ring).unwrap();
            let l = LocalRingWitness::new(&r).unwrap();
            for n in [2, 3] {
                for _ in 0..15 {
                    let phi = form_of(&random_eps(&r, 2 * n - 1, None, &mut rng));
                    let eps = reduce_alternating_local(&phi, &l, None).unwrap();
                    assert_eq!(form_of(&eps), phi);
                    if l.maximal.modular_generator() != r.modulus() {
                        let phi = form_of(&random_eps(&r, 2 * n - 1, Some(&l.maximal), &mut rng));
                        let eps = reduce_alternating_local(&phi, &l, Some(&l.maximal)).unwrap();
                        assert_eq!(form_of(&eps), phi);
                        assert!(eps.class_holds());
                    }
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        let r = Ring::parse("zmod:9").unwrap();
        let l = LocalRingWitness::new(&r).unwrap();
        let phi = standard_form(&r, 2).scale(&r.from_i64(2));
        assert!(reduce_alternating_local(&phi, &l, None).is_err());
        let eps = Word::from_atoms(&r, 3, vec![Atom::lin(1, 2, r.one())]).unwrap();
        let phi = form_of(&eps);
        assert!(reduce_alternating_local(&phi, &l, Some(&l.maximal)).is_err());
    }

    #[test]
    fn semilocal_factors() {
        let r = Ring::parse("zmod:45").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let phi = form_of(&random_eps(&r, 3, None, &mut rng));
        let reps = reduce_alternating_semilocal(&phi, None).unwrap();
        for rep in &reps {
            assert_eq!(form_of(&rep.epsilon), rep.phi);
        }
        let r = Ring::parse("zmod:7").unwrap();
        assert_eq!(reduce_alternating_semilocal(&standard_form(&r, 2), None).unwrap().len(), 1);
    }
}
