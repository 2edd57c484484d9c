//! Transvections for congruent forms φ = (1 ⊥ ε)^t φ* (1 ⊥ ε).

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ideal};
use crate::words::{bass_symplectic_transvection, mu_matrix, pairing, rho_matrix, Family, Word};

#[derive(Clone, Debug)]
pub struct FormChangeInput {
    pub q: Vec<Elem>,
    pub alpha: Elem,
    pub beta: Elem,
    /// Bass data (u, v, γ) relative to φ; skipped unless ⟨u, v⟩_φ = 0.
    pub bass: Option<(Vec<Elem>, Vec<Elem>, Elem)>,
}

#[derive(Clone, Debug)]
pub struct FormChangeReport {
    pub phi: Matrix,
    /// q (1 ⊥ ε^t)⁻¹
    pub q_transformed: Vec<Elem>,
    pub rho_holds: bool,
    pub mu_holds: bool,
    pub bass_holds: Option<bool>,
    /// q_transformed ≡ q mod I, when an ideal is given.
    pub q_congruent: Option<bool>,
}

impl FormChangeReport {
    pub fn holds(&self) -> bool {
        self.rho_holds && self.mu_holds && self.bass_holds.unwrap_or(true) && self.q_congruent.unwrap_or(true)
    }
}

/// Checks (I₂ ⊥ E)⁻¹ ρ_{φ*}(q, α) (I₂ ⊥ E) = ρ_φ(q (E^t)⁻¹, α), the same for μ,
/// and E⁻¹ τ_{φ*}(ũ, ṽ, γ) E = τ_φ(u, v, γ) with ũ = u E^t, where E = 1 ⊥ ε.
pub fn form_change_conjugate(
    phi_star: &Matrix,
    eps: &Word,
    input: &FormChangeInput,
    ideal: Option<&Ideal>,
) -> Result<FormChangeReport> {
    let ring = phi_star.ring();
    let size = phi_star.n();
    if !phi_star.is_alternating() || size % 2 == 1 {
        return Err(Error::Precondition("φ* must be alternating of even size".into()));
    }
    if eps.size + 1 != size {
        return Err(Error::Size(format!("ε of size {} for form of size {size}", eps.size)));
    }
    if eps.atoms.iter().any(|a| a.fam != Family::Linear) {
        return Err(Error::Precondition("ε must be a linear word".into()));
    }
    if input.q.len() != size {
        return Err(Error::Size(format!("q of length {} for form of size {size}", input.q.len())));
    }
    let one = Matrix::identity(ring, 1);
    let e = one.direct_sum(&eps.eval()?)?;
    let e_inv = one.direct_sum(&eps.inverse().eval()?)?;
    let phi = e.transpose().mul(phi_star)?.mul(&e)?;
    let big = Matrix::identity(ring, 2).direct_sum(&e)?;
    let big_inv = Matrix::identity(ring, 2).direct_sum(&e_inv)?;
    let q_transformed = e_inv.transpose().apply_row(&input.q)?;

    let conj = |m: Matrix| -> Result<Matrix> { big_inv.mul(&m)?.mul(&big) };
    let rho_holds = conj(rho_matrix(&input.q, &input.alpha, phi_star)?)? == rho_matrix(&q_transformed, &input.alpha, &phi)?;
    let mu_holds = conj(mu_matrix(&input.q, &input.beta, phi_star)?)? == mu_matrix(&q_transformed, &input.beta, &phi)?;

    let bass_holds = match &input.bass {
        Some((u, v, g)) if pairing(u, v, &phi)?.is_zero() => {
            let et = e.transpose();
            let ut = et.apply_row(u)?;
            let vt = et.apply_row(v)?;
            let lhs = e_inv.mul(&bass_symplectic_transvection(&ut, &vt, g, phi_star)?)?.mul(&e)?;
            Some(lhs == bass_symplectic_transvection(u, v, g, &phi)?)
        }
        _ => None,
    };
    let q_congruent = match ideal {
        Some(i) => {
            let mut ok = true;
            for (a, b) in q_transformed.iter().zip(&input.q) {
                ok &= i.congruent(a, b);
            }
            Some(ok)
        }
        None => None,
    };
    Ok(FormChangeReport { phi, q_transformed, rho_holds, mu_holds, bass_holds, q_congruent })
}
