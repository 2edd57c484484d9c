use super::{Atom, Family, Word};
use crate::error::{Error, Result};
use crate::ring::Ring;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtomJson {
    pub fam: String,
    pub i: usize,
    pub j: usize,
    pub arg: String,
    /// Formal inverse; eliminated on load by negating the argument.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub inv: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordJson {
    pub ring: String,
    pub size: usize,
    pub atoms: Vec<AtomJson>,
}

impl AtomJson {
    pub fn from_atom(a: &Atom) -> AtomJson {
        AtomJson { fam: a.fam.code().into(), i: a.i, j: a.j, arg: a.arg.to_string(), inv: false }
    }

    pub fn to_atom(&self, ring: &Ring) -> Result<Atom> {
        let arg = ring.parse_elem(&self.arg)?;
        let a = Atom::new(Family::parse(&self.fam)?, self.i, self.j, arg);
        Ok(if self.inv { a.inverse() } else { a })
    }
}

impl WordJson {
    pub fn from_word(w: &Word) -> WordJson {
        WordJson {
            ring: w.ring.to_string(),
            size: w.size,
            atoms: w.atoms.iter().map(AtomJson::from_atom).collect(),
        }
    }

    pub fn to_word(&self) -> Result<Word> {
        let ring = Ring::parse(&self.ring)?;
        let atoms = self.atoms.iter().map(|a| a.to_atom(&ring)).collect::<Result<Vec<_>>>()?;
        Word::from_atoms(&ring, self.size, atoms)
    }
}

/// `S:2,1:3;L:1,3:a+1`; a leading `-` before the family marks a formal inverse.
pub(super) fn parse_inline(ring: &Ring, size: usize, s: &str) -> Result<Word> {
    let mut atoms = Vec::new();
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (inv, part) = match part.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, part),
        };
        let mut it = part.splitn(3, ':');
        let (fam, idx, arg) = match (it.next(), it.next(), it.next()) {
            (Some(f), Some(x), Some(a)) => (f, x, a),
            _ => return Err(Error::Parse(format!("bad atom {part:?}"))),
        };
        let (i, j) = idx
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad indices {idx:?}")))?;
        let parse_idx = |t: &str| {
            t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index {t:?}")))
        };
        let a = Atom::new(Family::parse(fam.trim())?, parse_idx(i)?, parse_idx(j)?, ring.parse_elem(arg)?);
        atoms.push(if inv { a.inverse() } else { a });
    }
    Word::from_atoms(ring, size, atoms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_round_trip() {
        let r = Ring::parse("poly:zmod:9:a").unwrap();
        let w = Word::parse_inline(&r, 4, "S:2,1:3;S:3,1:1;L:1,4:a^2+1").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(Word::parse_inline(&r, 4, &w.to_inline()).unwrap(), w);
        let inv = Word::parse_inline(&r, 4, "-S:2,1:3").unwrap();
        assert_eq!(inv.atoms[0].arg, r.from_i64(-3));
        assert!(Word::parse_inline(&r, 4, "S:2,2:1").is_err());
        assert!(Word::parse_inline(&r, 4, "S:21:1").is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = Ring::zmod(9).unwrap();
        let w = Word::parse_inline(&r, 4, "S:2,1:3;L:3,1:1").unwrap();
        let j = serde_json::to_string(&WordJson::from_word(&w)).unwrap();
        let back: WordJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_word().unwrap(), w);
    }
}
