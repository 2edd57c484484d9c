use super::{sigma, sign, Atom, Word};
use crate::error::{Error, Result};
use crate::matrix::{standard_form, Matrix};
use crate::ring::{Elem, Ring};

fn ring_of(v: &[Elem]) -> Result<Ring> {
    v.first()
        .map(|e| e.ring().clone())
        .ok_or_else(|| Error::Size("empty vector".into()))
}

/// Row vector times matrix.
fn row_times(v: &[Elem], m: &Matrix) -> Result<Vec<Elem>> {
    m.apply_row(v)
}

/// ⟨x, y⟩ = y φ x^t.
pub fn pairing(x: &[Elem], y: &[Elem], phi: &Matrix) -> Result<Elem> {
    let yphi = row_times(y, phi)?;
    if yphi.len() != x.len() {
        return Err(Error::Size("pairing size".into()));
    }
    Ok(yphi.iter().zip(x).fold(phi.ring().zero(), |acc, (a, b)| acc + a * b))
}

fn check_form(q: &[Elem], phi: &Matrix) -> Result<()> {
    if q.len() != phi.n() || phi.n() % 2 == 1 {
        return Err(Error::Size(format!("q of length {} for form of size {}", q.len(), phi.n())));
    }
    for e in q {
        phi.ring().check_same(e.ring())?;
    }
    Ok(())
}

/// ρ_φ(q, α) = [[1,0,0],[α,1,−qφ],[q^t,0,I]] on R² ⊥ R^{2n}.
pub fn rho_matrix(q: &[Elem], alpha: &Elem, phi: &Matrix) -> Result<Matrix> {
    check_form(q, phi)?;
    let ring = phi.ring();
    let n = phi.n();
    let qphi = row_times(q, phi)?;
    let mut m = Matrix::identity(ring, n + 2);
    m.set(2, 1, alpha.clone());
    for k in 0..n {
        m.set(2, k + 3, -&qphi[k]);
        m.set(k + 3, 1, q[k].clone());
    }
    Ok(m)
}

/// μ_φ(q, β) = [[1,−β,qφ],[0,1,0],[0,q^t,I]] on R² ⊥ R^{2n}.
pub fn mu_matrix(q: &[Elem], beta: &Elem, phi: &Matrix) -> Result<Matrix> {
    check_form(q, phi)?;
    let ring = phi.ring();
    let n = phi.n();
    let qphi = row_times(q, phi)?;
    let mut m = Matrix::identity(ring, n + 2);
    m.set(1, 2, -beta);
    for k in 0..n {
        m.set(1, k + 3, qphi[k].clone());
        m.set(k + 3, 2, q[k].clone());
    }
    Ok(m)
}

/// Σ q_{2k−1} q_{2k}.
fn hyperbolic_sum(q: &[Elem], ring: &Ring) -> Elem {
    q.chunks(2).fold(ring.zero(), |acc, c| acc + &c[0] * &c[1])
}

/// Word for ρ_ψ(q, α): se_21(α + Σ q_{2k−1}q_{2k}) ∏_{i=3}^{2n+2} se_i1(q_{i−2}).
pub fn decompose_rho(q: &[Elem], alpha: &Elem) -> Result<Word> {
    let ring = alpha.ring().clone();
    if q.is_empty() || q.len() % 2 == 1 {
        return Err(Error::Size(format!("q of length {}", q.len())));
    }
    let size = q.len() + 2;
    let mut atoms = vec![Atom::sp(2, 1, alpha + &hyperbolic_sum(q, &ring))];
    for i in 3..=size {
        atoms.push(Atom::sp(i, 1, q[i - 3].clone()));
    }
    Word::from_atoms(&ring, size, atoms)
}

/// Word for μ_ψ(q, β): se_12(−β + Σ q_{2k−1}q_{2k}) ∏_{i=3}^{2n+2} se_1i((−1)^i q_{σ(i−2)}).
pub fn decompose_mu(q: &[Elem], beta: &Elem) -> Result<Word> {
    let ring = beta.ring().clone();
    if q.is_empty() || q.len() % 2 == 1 {
        return Err(Error::Size(format!("q of length {}", q.len())));
    }
    let size = q.len() + 2;
    let mut atoms = vec![Atom::sp(1, 2, hyperbolic_sum(q, &ring) - beta)];
    for i in 3..=size {
        let arg = ring.from_i64(sign(i)) * &q[sigma(i - 2) - 1];
        atoms.push(Atom::sp(1, i, arg));
    }
    Word::from_atoms(&ring, size, atoms)
}

/// Outer product x^t y.
fn outer(x: &[Elem], y: &[Elem], ring: &Ring) -> Matrix {
    let mut m = Matrix::zero(ring, x.len());
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            m.set(i + 1, j + 1, a * b);
        }
    }
    m
}

/// (I − v^t u φ − u^t v φ)(I − α u^t u φ), requiring ⟨u, v⟩ = 0.
pub fn bass_symplectic_transvection(
    u: &[Elem],
    v: &[Elem],
    alpha: &Elem,
    phi: &Matrix,
) -> Result<Matrix> {
    let ring = ring_of(u)?;
    if u.len() != phi.n() || v.len() != phi.n() {
        return Err(Error::Size("vector length differs from form size".into()));
    }
    if !pairing(u, v, phi)?.is_zero() {
        return Err(Error::Precondition("<u, v> != 0".into()));
    }
    let id = Matrix::identity(&ring, phi.n());
    let first = id
        .sub(&outer(v, u, &ring).mul(phi)?)?
        .sub(&outer(u, v, &ring).mul(phi)?)?;
    let second = id.sub(&outer(u, u, &ring).mul(phi)?.scale(alpha))?;
    first.mul(&second)
}

/// Inverse transvection: the same u with (v, α) negated.
pub fn bass_inverse(u: &[Elem], v: &[Elem], alpha: &Elem, phi: &Matrix) -> Result<Matrix> {
    let nv: Vec<Elem> = v.iter().map(|x| -x).collect();
    bass_symplectic_transvection(u, &nv, &-alpha, phi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearTransvection {
    /// (1, x; 0, I)
    Ex,
    /// (1, 0; y^t, I)
    EStar,
}

pub fn elementary_linear_transvection_word(kind: LinearTransvection, vec: &[Elem]) -> Result<Word> {
    let ring = ring_of(vec)?;
    let atoms = vec
        .iter()
        .enumerate()
        .map(|(k, x)| match kind {
            LinearTransvection::Ex => Atom::lin(1, k + 2, x.clone()),
            LinearTransvection::EStar => Atom::lin(k + 2, 1, x.clone()),
        })
        .collect();
    Word::from_atoms(&ring, vec.len() + 1, atoms)
}

pub fn elementary_linear_transvection(kind: LinearTransvection, vec: &[Elem]) -> Result<Matrix> {
    let ring = ring_of(vec)?;
    let mut m = Matrix::identity(&ring, vec.len() + 1);
    for (k, x) in vec.iter().enumerate() {
        match kind {
            LinearTransvection::Ex => m.set(1, k + 2, x.clone()),
            LinearTransvection::EStar => m.set(k + 2, 1, x.clone()),
        }
    }
    Ok(m)
}

/// ψ_1 ⊥ φ.
pub fn extended_form(phi: &Matrix) -> Result<Matrix> {
    standard_form(phi.ring(), 1).direct_sum(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_ring(n: usize) -> (Ring, Vec<Elem>, Elem) {
        let mut names: Vec<String> = (1..=2 * n).map(|k| format!("q{k}")).collect();
        names.push("t".into());
        let r = Ring::poly_owned(&Ring::dyadic(), names).unwrap();
        let q = (0..2 * n).map(|k| r.var_at(k)).collect();
        let t = r.var_at(2 * n);
        (r, q, t)
    }

    #[test]
    fn rho_mu_are_symplectic_and_decompose() {
        for n in 1..=2 {
            let (r, q, t) = sym_ring(n);
            let psi = standard_form(&r, n);
            let big = extended_form(&psi).unwrap();
            let rho = rho_matrix(&q, &t, &psi).unwrap();
            let mu = mu_matrix(&q, &t, &psi).unwrap();
            assert!(rho.is_symplectic(&big).unwrap());
            assert!(mu.is_symplectic(&big).unwrap());
            assert_eq!(decompose_rho(&q, &t).unwrap().eval().unwrap(), rho);
            assert_eq!(decompose_mu(&q, &t).unwrap().eval().unwrap(), mu);
        }
    }

    #[test]
    fn zero_parameters() {
        let r = Ring::zmod(9).unwrap();
        let psi = standard_form(&r, 2);
        let q = vec![r.zero(); 4];
        assert!(rho_matrix(&q, &r.zero(), &psi).unwrap().is_identity());
        let w = decompose_rho(&q, &r.from_i64(2)).unwrap().simplified();
        assert_eq!(w.atoms, vec![Atom::sp(2, 1, r.from_i64(2))]);
    }

    #[test]
    fn bass_matches_rho_and_mu() {
        let (r, q, t) = sym_ring(1);
        let psi = standard_form(&r, 1);
        let big = extended_form(&psi).unwrap();
        let z = r.zero();
        let o = r.one();
        let u = vec![z.clone(), o.clone(), z.clone(), z.clone()];
        let v = vec![z.clone(), z.clone(), q[0].clone(), q[1].clone()];
        let b = bass_symplectic_transvection(&u, &v, &t, &big).unwrap();
        assert_eq!(b, rho_matrix(&q, &t, &psi).unwrap());
        let u2 = vec![-o.clone(), z.clone(), z.clone(), z.clone()];
        let b2 = bass_symplectic_transvection(&u2, &v, &t, &big).unwrap();
        assert_eq!(b2, mu_matrix(&q, &t, &psi).unwrap());
        let inv = bass_inverse(&u, &v, &t, &big).unwrap();
        assert!(b.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn bass_requires_orthogonality() {
        let r = Ring::gf(5).unwrap();
        let psi = standard_form(&r, 1);
        let u = vec![r.one(), r.zero()];
        let v = vec![r.zero(), r.one()];
        assert!(bass_symplectic_transvection(&u, &v, &r.zero(), &psi).is_err());
        let id = bass_symplectic_transvection(&u, &[r.zero(), r.zero()], &r.zero(), &psi).unwrap();
        assert!(id.is_identity());
    }

    #[test]
    fn linear_transvection_blocks() {
        let r = Ring::zmod(9).unwrap();
        let x = vec![r.one(), r.from_i64(2)];
        let m = elementary_linear_transvection(LinearTransvection::Ex, &x).unwrap();
        assert_eq!(m, Matrix::from_i64(&r, &[&[1, 1, 2], &[0, 1, 0], &[0, 0, 1]]).unwrap());
        for kind in [LinearTransvection::Ex, LinearTransvection::EStar] {
            let w = elementary_linear_transvection_word(kind, &x).unwrap();
            assert_eq!(w.eval().unwrap(), elementary_linear_transvection(kind, &x).unwrap());
        }
    }
}
