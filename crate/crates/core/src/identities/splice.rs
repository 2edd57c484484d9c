//! Telescoping splice α(X) = ∏ α(S_i) α(S_{i+1})⁻¹ with S_i = Σ_{k≥i} c_k b_k X.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Elem;

#[derive(Clone, Debug)]
pub struct SpliceResult {
    /// γ(c_i b_i X, T_i) = α(c_i b_i X + T_i) α(T_i)⁻¹, in order.
    pub factors: Vec<Matrix>,
    pub product_holds: bool,
}

fn substitute(m: &Matrix, v: usize, q: &Elem) -> Matrix {
    m.map(|e| e.substitute(v, q))
}

pub fn splice_telescoping(alpha: &Matrix, var: &str, pairs: &[(Elem, Elem)]) -> Result<SpliceResult> {
    let ring = alpha.ring();
    let v = ring.var_index(var)?;
    let x = ring.var_at(v);
    if pairs.is_empty() {
        return Err(Error::Precondition("no (c, b) pairs".into()));
    }
    let total = pairs.iter().fold(ring.zero(), |acc, (c, b)| acc + c * b);
    if !total.is_one() {
        return Err(Error::Precondition(format!("Σ c_i b_i = {total}, not 1")));
    }
    if !substitute(alpha, v, &ring.zero()).is_identity() {
        return Err(Error::Precondition("α(0) is not the identity".into()));
    }
    // S_i for i = 1..=k+1
    let mut s = vec![ring.zero()];
    for (c, b) in pairs.iter().rev() {
        let next = s.last().unwrap() + &(c * b * &x);
        s.push(next);
    }
    s.reverse();
    let values: Vec<Matrix> = s.iter().map(|t| substitute(alpha, v, t)).collect();
    let mut factors = Vec::with_capacity(pairs.len());
    for i in 0..pairs.len() {
        factors.push(values[i].mul(&values[i + 1].inverse()?)?);
    }
    let mut prod = Matrix::identity(ring, alpha.n());
    for f in &factors {
        prod = prod.mul(f)?;
    }
    let product_holds = prod == *alpha;
    Ok(SpliceResult { factors, product_holds })
}
