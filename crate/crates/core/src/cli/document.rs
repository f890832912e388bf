//! JSON matrix documents.
//!
//! ```json
//! {"flavor":"max-plus","rows":2,"cols":2,"entries":["0","1","1","0"],"role":"matrix"}
//! ```
//!
//! Entries are row-major rational strings (`"p"` or `"p/q"`), so values
//! survive serialization exactly. With role `generators-as-columns` each
//! column is one generator of a polytope.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::residuation::Polytope;
use crate::scalar::Scalar;
use crate::semiring::{Flavor, TropMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Matrix,
    GeneratorsAsColumns,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Matrix => "matrix",
            Role::GeneratorsAsColumns => "generators-as-columns",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub flavor: Flavor,
    pub role: Role,
    pub matrix: TropMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError(pub String);

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DocumentError {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    flavor: String,
    rows: usize,
    cols: usize,
    entries: Vec<String>,
    role: String,
}

impl MatrixDocument {
    pub fn new(flavor: Flavor, role: Role, matrix: TropMatrix) -> Self {
        MatrixDocument { flavor, role, matrix }
    }

    pub fn polytope(&self) -> Polytope {
        Polytope::new(self.flavor, self.matrix.clone())
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.raw()).expect("plain data serializes")
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.raw()).expect("plain data serializes")
    }

    fn raw(&self) -> RawDocument {
        RawDocument {
            flavor: self.flavor.as_str().to_string(),
            rows: self.matrix.rows(),
            cols: self.matrix.cols(),
            entries: self.matrix.row_major().iter().map(Scalar::to_string).collect(),
            role: self.role.as_str().to_string(),
        }
    }
}

pub fn parse_matrix_document(text: &str) -> Result<MatrixDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| DocumentError(format!("line {} column {}: {e}", e.line(), e.column())))?;
    from_raw(raw)
}

pub fn document_from_value(value: serde_json::Value) -> Result<MatrixDocument, DocumentError> {
    let raw: RawDocument = serde_json::from_value(value).map_err(|e| DocumentError(e.to_string()))?;
    from_raw(raw)
}

fn from_raw(raw: RawDocument) -> Result<MatrixDocument, DocumentError> {
    let flavor: Flavor = raw.flavor.parse().map_err(|e| DocumentError(format!("field \"flavor\": {e}")))?;
    let role = match raw.role.as_str() {
        "matrix" => Role::Matrix,
        "generators-as-columns" => Role::GeneratorsAsColumns,
        other => {
            return Err(DocumentError(format!(
                "field \"role\": unknown role {other:?} (expected \"matrix\" or \"generators-as-columns\")"
            )))
        }
    };
    if raw.rows == 0 || raw.cols == 0 {
        return Err(DocumentError("fields \"rows\"/\"cols\": must be at least 1".into()));
    }
    let expected = raw.rows.checked_mul(raw.cols).ok_or_else(|| DocumentError("rows × cols overflows".into()))?;
    if raw.entries.len() != expected {
        return Err(DocumentError(format!(
            "field \"entries\": entry count mismatch: expected {expected} (rows × cols), found {}",
            raw.entries.len()
        )));
    }
    let entries = raw
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| e.parse::<Scalar>().map_err(|err| DocumentError(format!("field \"entries[{i}]\": {err}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = TropMatrix::from_row_major(raw.rows, raw.cols, entries).map_err(|e| DocumentError(e.to_string()))?;
    Ok(MatrixDocument { flavor, role, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_example() {
        let doc = parse_matrix_document(
            r#"{"flavor":"max-plus","rows":2,"cols":2,"entries":["0","1","1","0"],"role":"matrix"}"#,
        )
        .unwrap();
        assert_eq!(doc.flavor, Flavor::MaxPlus);
        assert_eq!(doc.role, Role::Matrix);
        assert_eq!(doc.matrix, TropMatrix::from_int_rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn reduces_entries() {
        let doc = parse_matrix_document(
            r#"{"flavor":"min-plus","rows":1,"cols":1,"entries":["2/4"],"role":"generators-as-columns"}"#,
        )
        .unwrap();
        assert_eq!(doc.matrix.get(0, 0), &Scalar::ratio(1, 2).unwrap());
        assert!(doc.to_json().contains(r#""entries":["1/2"]"#));
    }

    #[test]
    fn errors() {
        let count = parse_matrix_document(
            r#"{"flavor":"max-plus","rows":2,"cols":2,"entries":["0","1","1"],"role":"matrix"}"#,
        )
        .unwrap_err();
        assert!(count.0.contains("entry count mismatch"), "{count}");

        let entry = parse_matrix_document(
            r#"{"flavor":"max-plus","rows":1,"cols":2,"entries":["0","x"],"role":"matrix"}"#,
        )
        .unwrap_err();
        assert!(entry.0.contains("entries[1]"), "{entry}");

        let syntax = parse_matrix_document("{\n\"flavor\": \"max-plus\",\n\"rows\": }").unwrap_err();
        assert!(syntax.0.starts_with("line 3"), "{syntax}");

        let flavor = parse_matrix_document(
            r#"{"flavor":"plus-plus","rows":1,"cols":1,"entries":["0"],"role":"matrix"}"#,
        )
        .unwrap_err();
        assert!(flavor.0.contains("flavor"), "{flavor}");

        let empty = parse_matrix_document(r#"{"flavor":"max-plus","rows":0,"cols":1,"entries":[],"role":"matrix"}"#)
            .unwrap_err();
        assert!(empty.0.contains("at least 1"), "{empty}");
    }

    proptest! {
        #[test]
        fn round_trip(rows in 1usize..4, cols in 1usize..4, seed in any::<u64>(), max_plus in any::<bool>()) {
            let mut rng = crate::random::rng(seed);
            let m = crate::random::matrix(&mut rng, rows, cols, crate::random::RationalBounds::default());
            let flavor = if max_plus { Flavor::MaxPlus } else { Flavor::MinPlus };
            let doc = MatrixDocument::new(flavor, Role::GeneratorsAsColumns, m);
            let text = doc.to_json();
            let back = parse_matrix_document(&text).unwrap();
            prop_assert_eq!(&back, &doc);
            prop_assert_eq!(back.to_json(), text);
        }
    }
}
