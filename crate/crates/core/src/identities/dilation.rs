//! Rewriting conjugates of first-row/column symplectic generators as products
//! of first-row/column generators with arguments divisible by a dilation
//! variable Y.

use super::roots::{Root, RootClass, RootElem, RootSystem};
use crate::error::{Error, Result};
use crate::ring::{Elem, Ideal, Ring};
use crate::words::{Atom, Family, Word, WordClass};
use serde::Serialize;

type Seq = Vec<RootElem>;

fn inv(w: &[RootElem]) -> Seq {
    w.iter().rev().map(RootElem::inverse).collect()
}

fn comm_seq(g: &[RootElem], h: &[RootElem]) -> Seq {
    let mut out = g.to_vec();
    out.extend_from_slice(h);
    out.extend(inv(g));
    out.extend(inv(h));
    out
}

/// Drop identity factors and merge adjacent factors on the same root.
fn simplify(w: Seq) -> Seq {
    let mut out: Seq = Vec::with_capacity(w.len());
    for e in w {
        if e.arg.is_zero() {
            continue;
        }
        if let Some(last) = out.last_mut() {
            if last.root == e.root {
                last.arg = &last.arg + &e.arg;
                if last.arg.is_zero() {
                    out.pop();
                }
                continue;
            }
        }
        out.push(e);
    }
    out
}

/// Which construction handles a (conjugator, target) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    SameRoot,
    Commuting,
    Bilinear,
    OppositeShort,
    OppositeShortRank2,
    OppositeLongRow,
    OppositeLongColumn,
}

impl CaseKind {
    pub fn name(self) -> &'static str {
        match self {
            CaseKind::SameRoot => "same-root",
            CaseKind::Commuting => "commuting",
            CaseKind::Bilinear => "bilinear",
            CaseKind::OppositeShort => "opposite-short",
            CaseKind::OppositeShortRank2 => "opposite-short-rank2",
            CaseKind::OppositeLongRow => "opposite-long-row",
            CaseKind::OppositeLongColumn => "opposite-long-column",
        }
    }
}

/// Polynomial setting for the rewriting: ring, half-size, Y and the ideal.
pub struct DilationContext {
    pub ring: Ring,
    pub n: usize,
    pub y: usize,
    pub ideal: Ideal,
    sys: RootSystem,
}

#[derive(Clone, Debug)]
pub struct RewriteResult {
    pub lhs: Word,
    pub rhs: Word,
    pub certificate: bool,
    pub first_rowcol: bool,
    pub y_divisible: bool,
    pub ideal_membership: bool,
    /// Y-exponent carried by the target on the left side.
    pub exponent: u32,
}

impl RewriteResult {
    pub fn valid(&self) -> bool {
        self.certificate && self.first_rowcol && self.y_divisible && self.ideal_membership
    }
}

impl DilationContext {
    pub fn new(ring: &Ring, n: usize, y: &str, ideal: &Ideal) -> Result<DilationContext> {
        if n < 2 {
            return Err(Error::Precondition("dilation needs size >= 4".into()));
        }
        ring.check_same(ideal.ring())?;
        Ok(DilationContext {
            ring: ring.clone(),
            n,
            y: ring.var_index(y)?,
            ideal: ideal.clone(),
            sys: RootSystem::new(),
        })
    }

    /// ℤ[1/2][vars..., X, Y, f, x1] with I = (x1).
    pub fn standard(n: usize, conj_vars: &[String]) -> Result<DilationContext> {
        let mut vars: Vec<String> = conj_vars.to_vec();
        for v in ["X", "Y", "f", "x1"] {
            vars.push(v.to_string());
        }
        let ring = Ring::poly_owned(&Ring::dyadic(), vars)?;
        let ideal = Ideal::vars(&ring, &["x1"])?;
        DilationContext::new(&ring, n, "Y", &ideal)
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    fn yval(&self, e: &Elem) -> u32 {
        e.valuation(self.y).unwrap_or(u32::MAX)
    }

    fn in_ideal(&self, e: &Elem) -> bool {
        self.ideal.contains(e).unwrap_or(false)
    }

    fn y_pow(&self, k: u32) -> Elem {
        self.ring.var_at(self.y).pow(k)
    }

    fn constant(&self, d: &crate::ring::Dyadic) -> Elem {
        self.ring.from_dyadic(d.clone()).expect("dyadic constant")
    }

    pub fn root_elem(&self, a: &Atom) -> Result<RootElem> {
        if a.fam != Family::Symplectic {
            return Err(Error::Precondition("dilation acts on symplectic generators".into()));
        }
        a.check(self.size())?;
        self.ring.check_same(a.arg.ring())?;
        Ok(RootElem::from_atom(a, self.n))
    }

    /// E¹-legal: first row with any argument, first column with argument in I.
    pub fn is_legal_atom(&self, a: &Atom) -> bool {
        a.i == 1 || (a.j == 1 && self.in_ideal(&a.arg))
    }

    fn check_legal(&self, e: &RootElem) -> Result<()> {
        match e.class() {
            RootClass::Upper => Ok(()),
            RootClass::Lower if self.in_ideal(&e.arg) => Ok(()),
            RootClass::Lower => Err(Error::Construction(format!(
                "first-column factor with argument {} outside {}",
                e.arg, self.ideal
            ))),
            RootClass::Levi => Err(Error::Construction("Levi factor left unsplit".into())),
        }
    }

    /// Make a factor first-row/column: Levi factors are split into a
    /// commutator of a column and a row generator.
    fn legalize(&self, e: RootElem) -> Result<Seq> {
        if e.arg.is_zero() {
            return Ok(vec![]);
        }
        match e.class() {
            RootClass::Levi => self.split_levi(&e),
            _ => {
                self.check_legal(&e)?;
                if self.yval(&e.arg) == 0 {
                    return Err(Error::Divisibility(format!("factor {} not divisible by Y", e.to_atom())));
                }
                Ok(vec![e])
            }
        }
    }

    /// x_λ(v) = [x_{ν⁻}(p), x_ν(q)] with ν⁻ + ν = λ, q = Y^⌊v_Y/2⌋, p ∈ I.
    fn split_levi(&self, e: &RootElem) -> Result<Seq> {
        if !self.in_ideal(&e.arg) {
            return Err(Error::Construction(format!("Levi argument {} outside {}", e.arg, self.ideal)));
        }
        let v = self.yval(&e.arg);
        if v < 2 {
            return Err(Error::Divisibility(format!("Levi argument {} needs Y^2", e.arg)));
        }
        let (upper, lower) = levi_halves(&e.root);
        let terms = self.sys.comm_terms(&lower, &upper);
        let kappa = match terms.as_slice() {
            [t] if t.root == e.root && t.p == 1 && t.q == 1 => self.constant(&t.coeff),
            _ => return Err(Error::Construction("unexpected Levi commutator".into())),
        };
        let k = v / 2;
        let p = e.arg.divide_var_power(self.y, k)? * kappa.inverse().expect("unit constant");
        let q = self.y_pow(k);
        Ok(comm_seq(&[RootElem::new(lower, p)], &[RootElem::new(upper, q)]))
    }

    /// ^l t for a Levi root element l; keeps the class of t.
    fn conj_levi(&self, l: &RootElem, t: &RootElem) -> Seq {
        let mut out = self.sys.commutator(l, t);
        out.push(t.clone());
        out
    }

    fn conj_levi_seq(&self, l: &RootElem, w: &[RootElem]) -> Seq {
        simplify(w.iter().flat_map(|t| self.conj_levi(l, t)).collect())
    }

    pub fn classify(&self, c: &RootElem, t: &RootElem) -> CaseKind {
        if c.root == t.root {
            return CaseKind::SameRoot;
        }
        if c.root.add(&t.root).is_zero() {
            return match (t.root.is_long(), t.class()) {
                (false, _) if self.n >= 3 => CaseKind::OppositeShort,
                (false, _) => CaseKind::OppositeShortRank2,
                (true, RootClass::Upper) => CaseKind::OppositeLongRow,
                (true, _) => CaseKind::OppositeLongColumn,
            };
        }
        if self.sys.comm_terms(&c.root, &t.root).is_empty() {
            CaseKind::Commuting
        } else {
            CaseKind::Bilinear
        }
    }

    /// c t c⁻¹ as first-row/column factors.
    pub fn conj(&self, c: &RootElem, t: &RootElem) -> Result<Seq> {
        if t.arg.is_zero() {
            return Ok(vec![]);
        }
        match self.classify(c, t) {
            CaseKind::SameRoot | CaseKind::Commuting => Ok(vec![t.clone()]),
            CaseKind::Bilinear => {
                let mut out = Vec::new();
                for f in self.sys.commutator(c, t) {
                    out.extend(self.legalize(f)?);
                }
                out.push(t.clone());
                Ok(out)
            }
            CaseKind::OppositeShort => self.opposite_short(c, t),
            CaseKind::OppositeShortRank2 => self.opposite_short_rank2(c, t),
            CaseKind::OppositeLongRow => self.opposite_long_row(c, t),
            CaseKind::OppositeLongColumn => self.opposite_long_column(c, t),
        }
    }

    pub fn conj_seq(&self, c: &RootElem, w: &[RootElem]) -> Result<Seq> {
        let mut out = Vec::new();
        for t in w {
            out.extend(self.conj(c, t)?);
        }
        Ok(simplify(out))
    }

    /// t = [x_μ(s1), x_λ(Y^k)] with λ a short Levi root through a third
    /// coordinate; then c t c⁻¹ = A · V · ^ℓ(A⁻¹) · V⁻¹.
    fn opposite_short(&self, c: &RootElem, t: &RootElem) -> Result<Seq> {
        let beta = &t.root;
        let s = beta.0[0];
        let k_idx = (1..self.n).find(|&m| beta.0[m] != 0).unwrap();
        let m_idx = (1..self.n).find(|&m| m != k_idx).unwrap();
        let mut mu = vec![0i8; self.n];
        mu[0] = s;
        mu[m_idx] = 1;
        let mu = Root(mu);
        let lambda = beta.sub(&mu);
        let e = self.yval(&t.arg);
        let k = (e / 3).max(1);
        if e < k + 2 {
            return Err(Error::Divisibility(format!("opposite short pair needs Y^3, have Y^{e}")));
        }
        let kappa = self.single_coeff(&mu, &lambda, beta)?;
        let s1 = t.arg.divide_var_power(self.y, k)? * kappa.inverse().unwrap();
        let a = self.conj(c, &RootElem::new(mu, s1))?;
        let l = RootElem::new(lambda, self.y_pow(k));
        let mut v = Vec::new();
        for f in self.sys.commutator(c, &l) {
            v.extend(self.legalize(f)?);
        }
        let mut out = a.clone();
        out.extend(v.iter().cloned());
        out.extend(self.conj_levi_seq(&l, &inv(&a)));
        out.extend(inv(&v));
        Ok(simplify(out))
    }

    fn single_coeff(&self, x: &Root, y: &Root, target: &Root) -> Result<Elem> {
        match self.sys.comm_terms(x, y).as_slice() {
            [t] if t.root == *target => Ok(self.constant(&t.coeff)),
            _ => Err(Error::Construction("unexpected commutator shape".into())),
        }
    }

    /// Size 4: t = [x_μ(u), x_λ(l)] · x_ν(−c₂u²l) with μ the σ-partner root,
    /// λ = β − μ long Levi and ν = 2μ + λ.
    fn opposite_short_rank2(&self, c: &RootElem, t: &RootElem) -> Result<Seq> {
        let beta = &t.root;
        let mut mu = beta.clone();
        for x in mu.0.iter_mut().skip(1) {
            *x = -*x;
        }
        let lambda = beta.sub(&mu);
        let terms = self.sys.comm_terms(&mu, &lambda);
        let (mut c1, mut c2, mut nu) = (None, None, None);
        for tm in &terms {
            match (tm.p, tm.q) {
                (1, 1) if tm.root == *beta => c1 = Some(self.constant(&tm.coeff)),
                (2, 1) => {
                    c2 = Some(self.constant(&tm.coeff));
                    nu = Some(tm.root.clone());
                }
                _ => return Err(Error::Construction("unexpected commutator shape".into())),
            }
        }
        let (c1, c2, nu) = match (c1, c2, nu) {
            (Some(a), Some(b), Some(n)) => (a, b, n),
            _ => return Err(Error::Construction("unexpected commutator shape".into())),
        };
        let e = self.yval(&t.arg);
        let m2 = (e / 3).max(1);
        if e < m2 + 2 {
            return Err(Error::Divisibility(format!("opposite short pair needs Y^3, have Y^{e}")));
        }
        let l_arg = self.y_pow(m2);
        let u = t.arg.divide_var_power(self.y, m2)? * c1.inverse().unwrap();
        let m = RootElem::new(mu, u.clone());
        let l = RootElem::new(lambda, l_arg.clone());
        let tail = RootElem::new(nu, -(c2 * &u * &u * &l_arg));
        let lp = match self.sys.commutator(c, &m).as_slice() {
            [x] if x.class() == RootClass::Levi => x.clone(),
            _ => return Err(Error::Construction("unexpected commutator shape".into())),
        };
        let mut v = Vec::new();
        for f in self.sys.commutator(c, &l) {
            v.extend(self.legalize(f)?);
        }
        let pq = self.split_levi(&lp)?;
        let (p, q) = (pq[0].clone(), pq[1].clone());
        let mut mv = vec![m.clone()];
        mv.extend(v.iter().cloned());
        let mut out = self.conj_levi_seq(&lp, &mv);
        let inner = self.conj_levi_seq(&l, &[m.inverse()]);
        out.extend(self.conj_levi_seq(&lp, &inner));
        out.extend(pq);
        out.extend(comm_seq(&self.conj_levi_seq(&l, &[q]), &self.conj_levi_seq(&l, &[p])));
        out.extend(inv(&v));
        out.extend(self.conj(c, &tail)?);
        Ok(simplify(out))
    }

    /// Long row target against a long column conjugator: t = [A₁, A₂] with
    /// short first-row A_i, so c t c⁻¹ = [^c A₁, ^c A₂].
    fn opposite_long_row(&self, c: &RootElem, t: &RootElem) -> Result<Seq> {
        let (mu1, mu2) = self.long_halves(&t.root);
        let kappa = self.single_coeff(&mu1, &mu2, &t.root)?;
        let e = self.yval(&t.arg);
        if e < 2 {
            return Err(Error::Divisibility(format!("opposite long pair needs Y^2, have Y^{e}")));
        }
        let k = e / 2;
        let s2 = self.y_pow(k);
        let s1 = t.arg.divide_var_power(self.y, k)? * kappa.inverse().unwrap();
        let w1 = self.conj(c, &RootElem::new(mu1, s1))?;
        let w2 = self.conj(c, &RootElem::new(mu2, s2))?;
        Ok(simplify(comm_seq(&w1, &w2)))
    }

    /// Long column target against a long row conjugator: c = [u₁, u₂] with
    /// short first-row u_i, conjugate successively.
    fn opposite_long_column(&self, c: &RootElem, t: &RootElem) -> Result<Seq> {
        let (mu1, mu2) = self.long_halves(&c.root);
        let kappa = self.single_coeff(&mu1, &mu2, &c.root)?;
        let u1 = RootElem::new(mu1, &c.arg * &kappa.inverse().unwrap());
        let u2 = RootElem::new(mu2, self.ring.one());
        let mut w = vec![t.clone()];
        for g in [u2.inverse(), u1.inverse(), u2, u1] {
            w = self.conj_seq(&g, &w)?;
        }
        Ok(w)
    }

    /// Short roots μ₁, μ₂ of the same ε1-sign with μ₁ + μ₂ = the long root 2sε1.
    fn long_halves(&self, long: &Root) -> (Root, Root) {
        let s = long.0[0] / 2;
        let mut a = vec![0i8; self.n];
        a[0] = s;
        a[1] = 1;
        let mut b = a.clone();
        b[1] = -1;
        (Root(a), Root(b))
    }

    fn to_word(&self, w: &[RootElem]) -> Word {
        let atoms = w.iter().map(RootElem::to_atom).collect();
        Word { ring: self.ring.clone(), size: self.size(), atoms, class: WordClass::Plain }
    }

    fn result(&self, lhs: Word, rhs: &[RootElem], exponent: u32) -> Result<RewriteResult> {
        let rhs = self.to_word(rhs).with_class(WordClass::FirstRowCol(self.ideal.clone()));
        let certificate = lhs.eval()? == rhs.eval()?;
        let first_rowcol = rhs.atoms.iter().all(|a| a.i == 1 || a.j == 1);
        let y_divisible = rhs.atoms.iter().all(|a| self.yval(&a.arg) >= 1);
        let ideal_membership = rhs.atoms.iter().all(|a| a.i == 1 || self.in_ideal(&a.arg));
        Ok(RewriteResult { lhs, rhs, certificate, first_rowcol, y_divisible, ideal_membership, exponent })
    }

    /// Rewrite c t c⁻¹ for one legal conjugator and one legal target.
    pub fn conjugate_first_rowcol(&self, c: &Atom, t: &Atom) -> Result<RewriteResult> {
        if !self.is_legal_atom(c) {
            return Err(Error::Precondition(format!("conjugator {c} is not first-row/column")));
        }
        if !self.is_legal_atom(t) {
            return Err(Error::Precondition(format!("target {t} is not first-row/column")));
        }
        let rc = self.root_elem(c)?;
        let rt = self.root_elem(t)?;
        let rhs = self.conj(&rc, &rt)?;
        let lhs = Word::from_atoms(&self.ring, self.size(), vec![c.clone(), t.clone(), c.inverse()])?;
        let e = self.yval(&t.arg);
        self.result(lhs, &rhs, e)
    }

    /// Least Y-exponent e ≤ `max` for which the target `Y^e · base` can be
    /// rewritten against `c`.
    pub fn required_exponent(&self, c: &Atom, t_i: usize, t_j: usize, base: &Elem, max: u32) -> Result<u32> {
        for e in 1..=max {
            let t = Atom::sp(t_i, t_j, base * &self.y_pow(e));
            match self.conjugate_first_rowcol(c, &t) {
                Ok(_) => return Ok(e),
                Err(Error::Divisibility(_)) => continue,
                Err(err) => return Err(err),
            }
        }
        Err(Error::Divisibility(format!("no exponent up to {max} suffices")))
    }

    /// ε · t(Y^E · base) · ε⁻¹ as first-row/column factors; E is the product of
    /// the per-atom dilation factors, found by increasing search up to `max_step`.
    pub fn dilate_word(&self, eps: &Word, t_i: usize, t_j: usize, base: &Elem, max_step: u32) -> Result<RewriteResult> {
        for a in &eps.atoms {
            if !self.is_legal_atom(a) {
                return Err(Error::Precondition(format!("conjugator {a} is not first-row/column")));
            }
        }
        let t0 = Atom::sp(t_i, t_j, base * &self.y_pow(1));
        if !self.is_legal_atom(&t0) {
            return Err(Error::Precondition(format!("target {t0} is not first-row/column")));
        }
        let mut w = vec![self.root_elem(&t0)?];
        let mut total = 1u32;
        let y = self.ring.var_at(self.y);
        for a in eps.atoms.iter().rev() {
            let c = self.root_elem(a)?;
            let mut done = None;
            for d in 1..=max_step {
                let yd = y.pow(d);
                let sub: Seq = w
                    .iter()
                    .map(|e| RootElem::new(e.root.clone(), e.arg.substitute(self.y, &yd)))
                    .collect();
                match self.conj_seq(&c, &sub) {
                    Ok(r) => {
                        done = Some((d, r));
                        break;
                    }
                    Err(Error::Divisibility(_)) => continue,
                    Err(err) => return Err(err),
                }
            }
            let (d, r) = done.ok_or_else(|| Error::Divisibility(format!("no dilation up to Y^{max_step} for {a}")))?;
            total = total
                .checked_mul(d)
                .ok_or_else(|| Error::Budget("dilation exponent overflow".into()))?;
            w = r;
        }
        let target = Atom::sp(t_i, t_j, base * &self.y_pow(total));
        let lhs = eps
            .concat(&Word::from_atoms(&self.ring, self.size(), vec![target])?)
            .concat(&eps.inverse())
            .with_class(WordClass::Plain);
        self.result(lhs, &w, total)
    }
}

/// Split a Levi root λ as (ν, ν⁻) with ν = ε1 + a, ν⁻ = −ε1 + b, a + b = λ.
fn levi_halves(lambda: &Root) -> (Root, Root) {
    let n = lambda.n();
    let mut a = vec![0i8; n];
    let mut b = vec![0i8; n];
    let nz: Vec<usize> = (1..n).filter(|&m| lambda.0[m] != 0).collect();
    match nz.as_slice() {
        [m] => {
            a[*m] = lambda.0[*m] / 2;
            b[*m] = lambda.0[*m] / 2;
        }
        [m1, m2] => {
            a[*m1] = lambda.0[*m1];
            b[*m2] = lambda.0[*m2];
        }
        _ => unreachable!("not a Levi root"),
    }
    a[0] = 1;
    b[0] = -1;
    (Root(a), Root(b))
}

/// One frozen entry of the per-pair rewriting table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CaseEntry {
    pub size: usize,
    pub conjugator: String,
    pub target: [usize; 2],
    pub kind: String,
    pub exponent: u32,
    pub length: usize,
    pub rhs: String,
}

/// Every pair of first-row/column conjugator and target at half-size `n`,
/// with conjugator argument a (row) or a·x1 (column) and target argument
/// Y^e·X·f (row) or Y^e·X·f·x1 (column) at the least workable e.
pub fn case_table(n: usize, max_exponent: u32) -> Result<Vec<CaseEntry>> {
    let cx = DilationContext::standard(n, &["a".to_string()])?;
    let r = &cx.ring;
    let a = r.var("a")?;
    let x1 = r.var("x1")?;
    let base = r.var("X")? * r.var("f")?;
    let mut out = Vec::new();
    for k in 2..=2 * n {
        for c in [Atom::sp(1, k, a.clone()), Atom::sp(k, 1, &a * &x1)] {
            for j in 2..=2 * n {
                for (ti, tj, b) in [(1, j, base.clone()), (j, 1, &base * &x1)] {
                    let kind = cx.classify(&cx.root_elem(&c)?, &cx.root_elem(&Atom::sp(ti, tj, b.clone()))?);
                    let e = cx.required_exponent(&c, ti, tj, &b, max_exponent)?;
                    let res = cx.conjugate_first_rowcol(&c, &Atom::sp(ti, tj, &b * &cx.y_pow(e)))?;
                    if !res.valid() {
                        return Err(Error::Construction(format!("invalid rewrite for {c} against ({ti},{tj})")));
                    }
                    out.push(CaseEntry {
                        size: 2 * n,
                        conjugator: Word::from_atoms(r, 2 * n, vec![c.clone()])?.to_inline(),
                        target: [ti, tj],
                        kind: kind.name().to_string(),
                        exponent: e,
                        length: res.rhs.len(),
                        rhs: res.rhs.to_inline(),
                    });
                }
            }
        }
    }
    Ok(out)
}
