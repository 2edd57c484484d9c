use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::Ring;
use serde::{Deserialize, Serialize};

/// `{"ring": "...", "n": k, "entries": [[...]]}`, with `"alternating": true` for forms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: String,
    pub n: usize,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub alternating: bool,
}

impl MatrixJson {
    pub fn from_matrix(m: &Matrix, alternating: bool) -> MatrixJson {
        MatrixJson {
            ring: m.ring().to_string(),
            n: m.n(),
            entries: m
                .rows()
                .iter()
                .map(|r| r.iter().map(|e| e.to_string()).collect())
                .collect(),
            alternating,
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        let ring = Ring::parse(&self.ring)?;
        if self.entries.len() != self.n {
            return Err(Error::Size(format!("{} rows, n = {}", self.entries.len(), self.n)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| ring.parse_elem(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(&ring, rows)?;
        if self.alternating && !m.is_alternating() {
            return Err(Error::Precondition("matrix marked alternating is not".into()));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::standard_form;

    #[test]
    fn round_trip() {
        let r = Ring::parse("poly:zmod:9:x").unwrap();
        let m = standard_form(&r, 2).scale(&r.var("x").unwrap());
        let j = MatrixJson::from_matrix(&m, true);
        let s = serde_json::to_string(&j).unwrap();
        let back: MatrixJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
        assert!(s.contains("\"alternating\":true"));
    }
}
