use super::{pairs, IntMatrix};
use crate::error::{Error, Result};
use crate::identities::square_ideal::conjugate_square_ideal;
use crate::ring::{Ideal, Ring};
use crate::words::{sigma, Atom, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::HashSet;

/// A finite matrix group given by its elements.
#[derive(Clone, Debug)]
pub struct Closure {
    pub n: usize,
    pub m: u32,
    elements: Vec<IntMatrix>,
    seen: HashSet<Vec<u8>>,
    /// Generator rounds needed to reach normality.
    pub rounds: usize,
}

impl Closure {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &IntMatrix) -> bool {
        self.seen.contains(&g.key())
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }
}

/// Subgroup generated by `gens`; with `conj` = [(c, c⁻¹)], its normal
/// closure under the c.
pub fn subgroup_closure(
    n: usize,
    m: u32,
    gens: &[IntMatrix],
    conj: Option<&[(IntMatrix, IntMatrix)]>,
    cap: usize,
) -> Result<Closure> {
    if m > 255 {
        return Err(Error::Precondition(format!("modulus {m} too large for closure keys")));
    }
    let id = IntMatrix::identity(n, m);
    let mut cl = Closure { n, m, elements: vec![id.clone()], seen: HashSet::from([id.key()]), rounds: 0 };
    let mut all_gens: Vec<IntMatrix> = Vec::new();
    let mut new_gens: Vec<IntMatrix> = gens.to_vec();
    let mut processed = 0usize;
    let push = |cl: &mut Closure, x: IntMatrix| -> Result<()> {
        if cl.seen.insert(x.key()) {
            cl.elements.push(x);
            if cl.elements.len() > cap {
                return Err(Error::Budget(format!("closure exceeded cap {cap} (partial size {})", cl.elements.len())));
            }
        }
        Ok(())
    };
    while !new_gens.is_empty() {
        cl.rounds += 1;
        for k in 0..processed {
            for s in &new_gens {
                let x = cl.elements[k].mul(s);
                push(&mut cl, x)?;
            }
        }
        all_gens.append(&mut new_gens);
        while processed < cl.elements.len() {
            for s in &all_gens {
                let x = cl.elements[processed].mul(s);
                push(&mut cl, x)?;
            }
            processed += 1;
        }
        if let Some(cs) = conj {
            let mut fresh: HashSet<Vec<u8>> = HashSet::new();
            for (c, ci) in cs {
                for s in &all_gens {
                    let t = c.mul(s).mul(ci);
                    if !cl.contains(&t) && fresh.insert(t.key()) {
                        new_gens.push(t);
                    }
                }
            }
        }
    }
    Ok(cl)
}

fn sp_atom(size: usize, i: usize, j: usize, a: &crate::ring::Elem) -> Result<IntMatrix> {
    IntMatrix::from_matrix(&Atom::sp(i, j, a.clone()).matrix(size)?)
}

fn finite_ideal(ring: &Ring, ideal: &Ideal) -> Result<u32> {
    ring.check_same(ideal.ring())?;
    ideal
        .modular_generator()
        .map(|g| g as u32)
        .ok_or_else(|| Error::Precondition(format!("{ring} is not Z/m")))
}

/// ESp_size(R, I): normal closure of the se_ij(x), x ∈ I, under the se_ij(1).
pub fn relative_symplectic_closure(ring: &Ring, size: usize, ideal: &Ideal, cap: usize) -> Result<Closure> {
    let m = ring.modulus().ok_or_else(|| Error::Precondition(format!("{ring} is not finite")))? as u32;
    let mut gens = Vec::new();
    for x in ideal.additive_generators()? {
        for (i, j) in pairs(size) {
            gens.push(sp_atom(size, i, j, &x)?);
        }
    }
    let mut conj = Vec::new();
    for (i, j) in pairs(size) {
        conj.push((sp_atom(size, i, j, &ring.one())?, sp_atom(size, i, j, &-ring.one())?));
    }
    subgroup_closure(size, m, &gens, Some(&conj), cap)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct KernelReport {
    pub ring: String,
    pub size: usize,
    pub ideal: String,
    pub closure_size: usize,
    pub samples: usize,
    /// Samples whose evaluation reduces to the identity mod I.
    pub tested: usize,
    pub members: usize,
    pub all_members: bool,
}

/// Random first-row/column words, closed up to reduce to the identity mod I,
/// tested for membership in ESp_size(R, I).
pub fn kernel_membership_test(
    ring: &Ring,
    size: usize,
    ideal: &Ideal,
    samples: usize,
    seed: u64,
    cap: usize,
) -> Result<KernelReport> {
    let g = finite_ideal(ring, ideal)?;
    let closure = relative_symplectic_closure(ring, size, ideal, cap)?;
    let all = ring.elements()?;
    let in_i = ideal.elements()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut tested, mut members) = (0, 0);
    for _ in 0..samples {
        let len = rng.gen_range(1..=8);
        let mut w = Word::new(ring, size);
        let mut rows = Word::new(ring, size);
        for _ in 0..len {
            let j = rng.gen_range(2..=size);
            if rng.gen_bool(0.5) {
                let a = Atom::sp(1, j, all.choose(&mut rng).unwrap().clone());
                rows.push(a.clone());
                w.push(a);
            } else {
                w.push(Atom::sp(j, 1, in_i.choose(&mut rng).unwrap().clone()));
            }
        }
        let w = w.concat(&rows.inverse());
        let x = IntMatrix::from_matrix(&w.eval()?)?;
        if x.is_identity_mod(g) {
            tested += 1;
            if closure.contains(&x) {
                members += 1;
            }
        }
    }
    Ok(KernelReport {
        ring: ring.to_string(),
        size,
        ideal: ideal.descriptor(),
        closure_size: closure.size(),
        samples,
        tested,
        members,
        all_members: tested == members,
    })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SquareIdealReport {
    pub ring: String,
    pub size: usize,
    pub ideal: String,
    pub closure_size: usize,
    pub samples: usize,
    pub members: usize,
    /// Samples where the explicit factorization evaluated to the conjugate
    /// with every argument in I.
    pub factorizations_verified: usize,
    /// I² = 0 makes every sample trivial.
    pub square_is_zero: bool,
    pub ok: bool,
}

/// se_kl(z) se_ij(ab) se_kl(−z) ∈ ESp_size(I) for a, b ∈ I.
pub fn square_ideal_inclusion_test(
    ring: &Ring,
    size: usize,
    ideal: &Ideal,
    samples: usize,
    seed: u64,
    cap: usize,
) -> Result<SquareIdealReport> {
    if size % 2 == 1 || size < 4 {
        return Err(Error::Size(format!("size {size}")));
    }
    let m = finite_ideal(ring, ideal)?;
    let n = size / 2;
    let mut gens = Vec::new();
    for x in ideal.additive_generators()? {
        for (i, j) in pairs(size) {
            gens.push(sp_atom(size, i, j, &x)?);
        }
    }
    let closure = subgroup_closure(size, ring.modulus().unwrap() as u32, &gens, None, cap)?;
    let all = ring.elements()?;
    let in_i = ideal.elements()?;
    let idx: Vec<(usize, usize)> = pairs(size).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut members, mut verified) = (0, 0);
    for _ in 0..samples {
        let (i, j) = *idx.choose(&mut rng).unwrap();
        let (k, l) = match rng.gen_range(0..3) {
            0 => (j, i),
            1 if j != sigma(i) => (sigma(i), sigma(j)),
            _ => *idx.choose(&mut rng).unwrap(),
        };
        let z = all.choose(&mut rng).unwrap().clone();
        let a = in_i.choose(&mut rng).unwrap().clone();
        let b = in_i.choose(&mut rng).unwrap().clone();
        let alpha = sp_atom(size, k, l, &z)?;
        let alpha_inv = sp_atom(size, k, l, &-&z)?;
        let x = alpha.mul(&sp_atom(size, i, j, &(&a * &b))?).mul(&alpha_inv);
        if closure.contains(&x) {
            members += 1;
        }
        let res = conjugate_square_ideal(n, (i, j), (k, l), &z, &[(a, b)], ideal)?;
        if res.valid() && IntMatrix::from_matrix(&res.rhs.eval()?)? == x {
            verified += 1;
        }
    }
    let square_is_zero = ((m as u64) * (m as u64)).is_multiple_of(ring.modulus().unwrap());
    Ok(SquareIdealReport {
        ring: ring.to_string(),
        size,
        ideal: ideal.descriptor(),
        closure_size: closure.size(),
        samples,
        members,
        factorizations_verified: verified,
        square_is_zero,
        ok: members == samples && verified == samples,
    })
}
