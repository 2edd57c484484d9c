use super::scalar::{Base, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(nvars: usize) -> Mono {
        Mono(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; never stores a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(base: Base, c: Scalar, nvars: usize) -> Poly {
        let mut p = Poly::zero();
        if !base.is_zero(&c) {
            p.terms.insert(Mono::one(nvars), c);
        }
        p
    }

    pub fn var(base: Base, idx: usize, nvars: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        let mut p = Poly::zero();
        p.terms.insert(Mono(e), base.one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, base: Base, m: Mono, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !base.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = base.add(o.get(), &c);
                if base.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, base: Base, other: &Poly) -> Poly {
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(base, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, base: Base) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), base.neg(c))).collect(),
        }
    }

    pub fn mul(&self, base: Base, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(base, m1.mul(m2), base.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, base: Base, c: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (m, x) in &self.terms {
            out.add_term(base, m.clone(), base.mul(x, c));
        }
        out
    }

    pub fn constant_term(&self, base: Base, nvars: usize) -> Scalar {
        self.terms.get(&Mono::one(nvars)).cloned().unwrap_or_else(|| base.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Least exponent of variable `v` over all monomials; `None` for zero.
    pub fn valuation(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[v]).min()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.0[v]).max().unwrap_or(0)
    }

    /// Divide by `v^k`; caller guarantees the valuation is at least `k`.
    pub fn divide_var_power(&self, v: usize, k: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[v] -= k;
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn mul_var_power(&self, v: usize, k: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[v] += k;
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    /// Replace variable `v` by the polynomial `q`.
    pub fn substitute(&self, base: Base, v: usize, q: &Poly, nvars: usize) -> Poly {
        let maxdeg = self.degree_in(v) as usize;
        let mut powers = vec![Poly::constant(base, base.one(), nvars)];
        for k in 1..=maxdeg {
            let next = powers[k - 1].mul(base, q);
            powers.push(next);
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let d = e[v] as usize;
            e[v] = 0;
            let mut rest = Poly::zero();
            rest.terms.insert(Mono(e), c.clone());
            out = out.add(base, &rest.mul(base, &powers[d]));
        }
        out
    }

    /// Coefficient of `v^d` as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, v: usize, d: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.0[v] == d {
                let mut e = m.0.clone();
                e[v] = 0;
                out.terms.insert(Mono(e), c.clone());
            }
        }
        out
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut coef = c.to_string();
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            if idx == 0 {
                if negative {
                    s.push('-');
                }
            } else if negative {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mut factors = Vec::new();
            for (k, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(names[k].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", names[k], e));
                }
            }
            if factors.is_empty() {
                s.push_str(&coef);
            } else {
                if coef != "1" {
                    s.push_str(&coef);
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}
