//! JSON interchange for algebras and rational matrices.
//!
//! An algebra document looks like
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "dim": 3,
//!   "basis": ["e0", "e1", "e2"],
//!   "brackets": [{ "i": 1, "j": 2, "coeffs": { "0": "1" } }]
//! }
//! ```
//!
//! Rationals are strings such as `"-3/4"`, so values survive serialization
//! exactly. Output is byte-stable: records are sorted by `(i, j)` and
//! coefficient keys by index.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, parse_rational, RatMatrix, Rational};
use crate::lie::LieAlgebra;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRecord>,
}

impl AlgebraDocument {
    pub fn from_algebra(g: &LieAlgebra) -> Self {
        let brackets = g
            .brackets()
            .map(|(i, j, v)| BracketRecord {
                i,
                j,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, format_rational(c)))
                    .collect(),
            })
            .collect();
        AlgebraDocument {
            format_version: FORMAT_VERSION.into(),
            dim: g.dim(),
            basis: g.labels().to_vec(),
            brackets,
        }
    }

    /// Validates the document and builds the algebra, checking Jacobi.
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
                self.format_version
            )));
        }
        if self.basis.len() != self.dim {
            return Err(Error::Format(format!(
                "basis has {} labels but dim is {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut records = Vec::with_capacity(self.brackets.len());
        for (pos, r) in self.brackets.iter().enumerate() {
            let mut v = vec![Rational::zero(); self.dim];
            for (&k, text) in &r.coeffs {
                if k >= self.dim {
                    return Err(Error::BracketIndex {
                        i: r.i,
                        j: r.j,
                        reason: format!("brackets[{pos}]: coefficient index {k} exceeds the dimension"),
                    });
                }
                v[k] = parse_rational(text)
                    .map_err(|_| Error::Format(format!("brackets[{pos}].coeffs.{k}: invalid rational {text:?}")))?;
            }
            records.push((r.i, r.j, v));
        }
        LieAlgebra::new(self.basis.clone(), records)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Parses and validates an algebra document.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    AlgebraDocument::parse(text)?.to_algebra()
}

pub fn load(path: impl AsRef<Path>) -> Result<LieAlgebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

pub fn save(g: &LieAlgebra, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, AlgebraDocument::from_algebra(g).to_json())
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

/// Parses a matrix given as a JSON array of rows; entries are integers or
/// rational strings.
pub fn parse_matrix(text: &str) -> Result<RatMatrix> {
    let rows: Vec<Vec<Entry>> = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(r, row)| {
            row.into_iter()
                .enumerate()
                .map(|(c, e)| match e {
                    Entry::Int(k) => Ok(Rational::from_integer(k.into())),
                    Entry::Text(s) => parse_rational(&s)
                        .map_err(|_| Error::Format(format!("matrix[{r}][{c}]: invalid rational {s:?}"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<RatMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::heisenberg;
    use crate::exactalg::{int, rat};

    const H3: &str = r#"{
        "format_version": "1",
        "dim": 3,
        "basis": ["e0", "e1", "e2"],
        "brackets": [{ "i": 1, "j": 2, "coeffs": { "0": "1" } }]
    }"#;

    #[test]
    fn loads_heisenberg() {
        let g = parse_algebra(H3).unwrap();
        assert!(g.structurally_eq(&heisenberg(1).unwrap()));
        assert_eq!(g.labels(), heisenberg(1).unwrap().labels());
    }

    #[test]
    fn rejects_bad_records() {
        let same = H3.replace("\"i\": 1", "\"i\": 2");
        assert!(matches!(
            parse_algebra(&same),
            Err(Error::BracketIndex { i: 2, j: 2, .. })
        ));
        let far = H3.replace("\"0\": \"1\"", "\"5\": \"1\"");
        assert!(matches!(parse_algebra(&far), Err(Error::BracketIndex { .. })));
        let bad = H3.replace("\"0\": \"1\"", "\"0\": \"1/0\"");
        assert!(matches!(parse_algebra(&bad), Err(Error::Format(_))));
        assert!(matches!(parse_algebra("{"), Err(Error::Format(_))));
        let version = H3.replace("\"1\",", "\"2\",");
        assert!(matches!(parse_algebra(&version), Err(Error::Format(_))));
    }

    #[test]
    fn rejects_jacobi_failure() {
        // [e0,e1] = e1, [e0,e2] = e2, [e1,e2] = e0 breaks Jacobi on (0, 1, 2)
        let text = r#"{"format_version": "1", "dim": 3, "basis": ["a", "b", "c"], "brackets": [
            {"i": 0, "j": 1, "coeffs": {"1": "1"}},
            {"i": 0, "j": 2, "coeffs": {"2": "1"}},
            {"i": 1, "j": 2, "coeffs": {"0": "1"}}]}"#;
        assert_eq!(parse_algebra(text).unwrap_err(), Error::Jacobi(0, 1, 2));
    }

    #[test]
    fn output_is_sorted_and_stable() {
        let g = heisenberg(2).unwrap();
        let doc = AlgebraDocument::from_algebra(&g);
        let text = doc.to_json();
        assert_eq!(AlgebraDocument::parse(&text).unwrap(), doc);
        assert_eq!(
            AlgebraDocument::from_algebra(&parse_algebra(&text).unwrap()).to_json(),
            text
        );
    }

    #[test]
    fn matrices() {
        let m = parse_matrix(r#"[[0, "1/2"], ["-1", 3]]"#).unwrap();
        assert_eq!(
            m,
            RatMatrix::from_rows(vec![vec![int(0), rat(1, 2)], vec![int(-1), int(3)]]).unwrap()
        );
        assert!(parse_matrix(r#"[[1, 2], [3]]"#).is_err());
        assert!(parse_matrix(r#"[["x"]]"#).is_err());
    }
}
