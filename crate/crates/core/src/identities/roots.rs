//! Root bookkeeping for the symplectic generators: se_ij is the root element
//! of w(i) − w(j), where w(2k−1) = ε_k and w(2k) = −ε_k.

use crate::matrix::Matrix;
use crate::ring::{Dyadic, Elem, Ring, Scalar};
use crate::words::{sigma, sign, Atom, Family};
use std::collections::HashMap;
use std::sync::Mutex;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i8>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootClass {
    /// Positive ε1 coefficient: first-row generators.
    Upper,
    /// Negative ε1 coefficient: first-column generators.
    Lower,
    /// No ε1 component.
    Levi,
}

fn weight(i: usize, n: usize) -> Root {
    let mut v = vec![0i8; n];
    let k = (i - 1) / 2;
    v[k] = if i % 2 == 1 { 1 } else { -1 };
    Root(v)
}

impl Root {
    pub fn of(i: usize, j: usize, n: usize) -> Root {
        weight(i, n).sub(&weight(j, n))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i8) -> Root {
        Root(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// ±ε_a ± ε_b (a ≠ b) or ±2ε_a.
    pub fn is_root(&self) -> bool {
        let nz: Vec<i8> = self.0.iter().copied().filter(|&a| a != 0).collect();
        match nz.as_slice() {
            [x] => x.abs() == 2,
            [x, y] => x.abs() == 1 && y.abs() == 1,
            _ => false,
        }
    }

    pub fn is_long(&self) -> bool {
        self.0.iter().filter(|&&a| a != 0).count() == 1
    }

    pub fn class(&self) -> RootClass {
        match self.0[0].signum() {
            1 => RootClass::Upper,
            -1 => RootClass::Lower,
            _ => RootClass::Levi,
        }
    }

    /// Index pairs (i, j) with w(i) − w(j) equal to this root.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=2 * n {
            for j in 1..=2 * n {
                if i != j && Root::of(i, j, n) == *self {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Preferred pair: first row or column when possible, else the least pair.
    pub fn canonical_pair(&self) -> (usize, usize) {
        let ps = self.pairs();
        assert!(!ps.is_empty(), "not a root: {:?}", self.0);
        ps.iter()
            .copied()
            .find(|&(i, j)| i == 1 || j == 1)
            .unwrap_or(ps[0])
    }
}

/// x_γ(arg) := se_{canonical pair of γ}(arg).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootElem {
    pub root: Root,
    pub arg: Elem,
}

impl RootElem {
    pub fn new(root: Root, arg: Elem) -> RootElem {
        RootElem { root, arg }
    }

    pub fn from_atom(a: &Atom, n: usize) -> RootElem {
        assert_eq!(a.fam, Family::Symplectic, "root elements are symplectic");
        let root = Root::of(a.i, a.j, n);
        let (ci, cj) = root.canonical_pair();
        let arg = if (ci, cj) == (a.i, a.j) {
            a.arg.clone()
        } else {
            // se_ij(z) = se_{σ(j)σ(i)}(−(−1)^{i+j} z)
            debug_assert_eq!((ci, cj), (sigma(a.j), sigma(a.i)));
            a.arg.small(-sign(a.i + a.j)) * &a.arg
        };
        RootElem { root, arg }
    }

    pub fn to_atom(&self) -> Atom {
        let (i, j) = self.root.canonical_pair();
        Atom::sp(i, j, self.arg.clone())
    }

    pub fn inverse(&self) -> RootElem {
        RootElem { root: self.root.clone(), arg: -&self.arg }
    }

    pub fn class(&self) -> RootClass {
        self.root.class()
    }
}

/// One factor x_{pα+qβ}(c a^p b^q) of [x_α(a), x_β(b)].
#[derive(Clone, Debug)]
pub struct CommTerm {
    pub p: u32,
    pub q: u32,
    pub root: Root,
    pub coeff: Dyadic,
}

/// Structure constants of the commutator formula, computed by evaluation
/// at a = b = 1 and cached.
#[derive(Debug, Default)]
pub struct RootSystem {
    cache: Mutex<HashMap<(Root, Root), Vec<CommTerm>>>,
}

impl RootSystem {
    pub fn new() -> RootSystem {
        RootSystem::default()
    }

    /// Process-wide cache.
    pub fn shared() -> &'static RootSystem {
        static SHARED: std::sync::OnceLock<RootSystem> = std::sync::OnceLock::new();
        SHARED.get_or_init(RootSystem::new)
    }

    pub fn comm_terms(&self, alpha: &Root, beta: &Root) -> Vec<CommTerm> {
        let key = (alpha.clone(), beta.clone());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = compute_terms(alpha, beta);
        self.cache.lock().unwrap().insert(key, v.clone());
        v
    }

    /// Factors of [x_α(a), x_β(b)] for non-opposite α, β.
    pub fn commutator(&self, x: &RootElem, y: &RootElem) -> Vec<RootElem> {
        let ring = x.arg.ring();
        self.comm_terms(&x.root, &y.root)
            .into_iter()
            .map(|t| {
                let c = ring.from_dyadic(t.coeff).expect("dyadic constant");
                RootElem::new(t.root, c * x.arg.pow(t.p) * y.arg.pow(t.q))
            })
            .collect()
    }
}

fn compute_terms(alpha: &Root, beta: &Root) -> Vec<CommTerm> {
    assert!(!alpha.add(beta).is_zero(), "opposite roots have no commutator formula");
    let n = alpha.n();
    let ring = Ring::dyadic();
    let x = RootElem::new(alpha.clone(), ring.one());
    let y = RootElem::new(beta.clone(), ring.one());
    let size = 2 * n;
    let eval = |e: &RootElem| e.to_atom().matrix(size).unwrap();
    let m = commutator_matrix(&eval(&x), &eval(&y));
    let mut terms = Vec::new();
    for (p, q) in [(1u32, 1u32), (2, 1), (1, 2)] {
        let root = alpha.scale(p as i8).add(&beta.scale(q as i8));
        if !root.is_root() {
            continue;
        }
        let (i, j) = root.canonical_pair();
        let c = m.get(i, j).clone();
        if c.is_zero() {
            continue;
        }
        let coeff = match c.as_scalar() {
            Some(Scalar::Dy(d)) => d.clone(),
            _ => unreachable!(),
        };
        terms.push(CommTerm { p, q, root, coeff });
    }
    let mut check = Matrix::identity(&ring, size);
    for t in &terms {
        let c = ring.from_dyadic(t.coeff.clone()).unwrap();
        RootElem::new(t.root.clone(), c).to_atom().apply_right(&mut check);
    }
    assert_eq!(check, m, "commutator of {:?} and {:?} is not peelable", alpha.0, beta.0);
    terms
}

fn commutator_matrix(g: &Matrix, h: &Matrix) -> Matrix {
    // Root elements satisfy (g − I)² = 0, so g⁻¹ = 2I − g.
    let id = Matrix::identity(g.ring(), g.n());
    let gi = id.add(&id).unwrap().sub(g).unwrap();
    let hi = id.add(&id).unwrap().sub(h).unwrap();
    g.mul(h).unwrap().mul(&gi).unwrap().mul(&hi).unwrap()
}

pub fn atoms_of(elems: &[RootElem]) -> Vec<Atom> {
    elems.iter().map(RootElem::to_atom).collect()
}
