//! The `nilclass2-v1` JSON algebra file format.
//!
//! ```json
//! {"brackets":[{"i":1,"j":2,"v":[["8","1"]]}],"dim":8,"field":{"kind":"Q"},"format":"nilclass2-v1"}
//! ```
//!
//! Basis indices are 1-based; only i < j entries are allowed; `v` lists
//! `[basis_index, coefficient]` pairs with both rendered as strings
//! (coefficients are decimal integers or `a/b` rationals — exactness is the
//! point, so no JSON numbers are used for field elements). Zero
//! coefficients are omitted. Serialization is canonical: keys sorted,
//! brackets sorted by (i, j), pairs sorted by basis index, compact
//! encoding, trailing newline. Parsing a canonically formatted file and
//! re-serializing reproduces it byte for byte.

use crate::field::FieldDescriptor;
use crate::lie::StructureConstants;
use serde_json::Value;
use thiserror::Error;

pub const FORMAT_TAG: &str = "nilclass2-v1";

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum IoError {
    /// Malformed JSON; the message carries the position.
    #[error("JSON parse error: {0}")]
    Json(String),
    /// Well-formed JSON that violates the format.
    #[error("{path}: {message}")]
    Format { path: String, message: String },
}

fn fail<T>(path: &str, message: impl Into<String>) -> Result<T, IoError> {
    Err(IoError::Format {
        path: path.to_string(),
        message: message.into(),
    })
}

pub fn parse(text: &str) -> Result<StructureConstants, IoError> {
    let value: Value = serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()))?;
    let obj = match value.as_object() {
        Some(o) => o,
        None => return fail("$", "expected a JSON object"),
    };
    match obj.get("format").and_then(Value::as_str) {
        Some(FORMAT_TAG) => {}
        Some(other) => return fail("format", format!("unsupported format {other:?}")),
        None => return fail("format", "missing format tag"),
    }
    let field = parse_field(obj.get("field"))?;
    let dim = match obj.get("dim").and_then(Value::as_u64) {
        Some(d) => d as usize,
        None => return fail("dim", "missing or non-integer dimension"),
    };
    let mut l = StructureConstants::abelian(dim, field);
    let brackets = match obj.get("brackets") {
        Some(Value::Array(a)) => a,
        Some(_) => return fail("brackets", "expected an array"),
        None => return fail("brackets", "missing brackets array"),
    };
    let mut seen_pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, entry) in brackets.iter().enumerate() {
        let path = format!("brackets[{idx}]");
        let eobj = match entry.as_object() {
            Some(o) => o,
            None => return fail(&path, "expected an object"),
        };
        let i = index_field(eobj.get("i"), &path, "i", dim)?;
        let j = index_field(eobj.get("j"), &path, "j", dim)?;
        if i >= j {
            return fail(&path, "require i<j");
        }
        if seen_pairs.contains(&(i, j)) {
            return fail(&path, format!("duplicate bracket entry for ({i},{j})"));
        }
        seen_pairs.push((i, j));
        let pairs = match eobj.get("v") {
            Some(Value::Array(a)) => a,
            _ => return fail(&path, "missing coefficient list v"),
        };
        let mut seen_basis: Vec<usize> = Vec::new();
        for (pidx, pair) in pairs.iter().enumerate() {
            let ppath = format!("{path}.v[{pidx}]");
            let parr = match pair.as_array() {
                Some(a) if a.len() == 2 => a,
                _ => return fail(&ppath, "expected a [basis_index, coefficient] pair"),
            };
            let basis = match &parr[0] {
                Value::Number(n) => n.as_u64().map(|v| v as usize),
                Value::String(s) => s.parse::<usize>().ok(),
                _ => None,
            };
            let basis = match basis {
                Some(b) if b >= 1 && b <= dim => b,
                _ => return fail(&ppath, format!("basis index out of range 1..={dim}")),
            };
            if seen_basis.contains(&basis) {
                return fail(&ppath, "duplicate basis index");
            }
            seen_basis.push(basis);
            let coeff_str = match &parr[1] {
                Value::String(s) => s.as_str(),
                _ => return fail(&ppath, "coefficient must be a string"),
            };
            let coeff = field
                .parse_element(coeff_str)
                .map_err(|e| IoError::Format {
                    path: ppath.clone(),
                    message: e.to_string(),
                })?;
            l.add_bracket_term(i - 1, j - 1, basis - 1, coeff);
        }
    }
    Ok(l)
}

fn parse_field(v: Option<&Value>) -> Result<FieldDescriptor, IoError> {
    let obj = match v.and_then(Value::as_object) {
        Some(o) => o,
        None => return fail("field", "missing field object"),
    };
    match obj.get("kind").and_then(Value::as_str) {
        Some("Q") => Ok(FieldDescriptor::Rationals),
        Some("Fp") => {
            let p = match obj.get("p").and_then(Value::as_u64) {
                Some(p) => p,
                None => return fail("field.p", "missing modulus"),
            };
            FieldDescriptor::prime(p).map_err(|e| IoError::Format {
                path: "field.p".into(),
                message: e.to_string(),
            })
        }
        Some(other) => fail("field.kind", format!("unknown kind {other:?}")),
        None => fail("field.kind", "missing kind"),
    }
}

fn index_field(v: Option<&Value>, path: &str, name: &str, dim: usize) -> Result<usize, IoError> {
    match v.and_then(Value::as_u64) {
        Some(x) if x >= 1 && (x as usize) <= dim => Ok(x as usize),
        _ => fail(path, format!("{name} must be an integer in 1..={dim}")),
    }
}

/// Canonical JSON value of an algebra.
pub fn to_json(l: &StructureConstants) -> Value {
    let f = l.field();
    let mut brackets = Vec::new();
    for i in 0..l.n() {
        for j in (i + 1)..l.n() {
            let w = l.bracket_basis(i, j);
            let pairs: Vec<Value> = w
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(k, c)| {
                    Value::Array(vec![
                        Value::String((k + 1).to_string()),
                        Value::String(c.to_canonical_string()),
                    ])
                })
                .collect();
            if pairs.is_empty() {
                continue;
            }
            brackets.push(serde_json::json!({
                "i": i + 1,
                "j": j + 1,
                "v": pairs,
            }));
        }
    }
    serde_json::json!({
        "format": FORMAT_TAG,
        "field": f.to_json(),
        "dim": l.n(),
        "brackets": brackets,
    })
}

/// Canonical text form: compact JSON with sorted keys plus a newline.
pub fn serialize(l: &StructureConstants) -> String {
    let mut s = serde_json::to_string(&to_json(l)).expect("serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make, FamilyParams, FamilyTag};

    #[test]
    fn round_trip_is_byte_identical() {
        let l = make(FamilyTag::H1, &FamilyParams::m(3), FieldDescriptor::Rationals).unwrap();
        let text = serialize(&l);
        let back = parse(&text).unwrap();
        assert_eq!(back, l);
        assert_eq!(serialize(&back), text);
    }

    #[test]
    fn canonical_form_of_heisenberg() {
        let f = FieldDescriptor::prime(5).unwrap();
        let l = make(FamilyTag::H, &FamilyParams::m(1), f).unwrap();
        assert_eq!(
            serialize(&l),
            "{\"brackets\":[{\"i\":1,\"j\":2,\"v\":[[\"3\",\"1\"]]}],\"dim\":3,\"field\":{\"kind\":\"Fp\",\"p\":5},\"format\":\"nilclass2-v1\"}\n"
        );
    }

    #[test]
    fn rejects_i_not_less_than_j() {
        let text = r#"{"format":"nilclass2-v1","field":{"kind":"Q"},"dim":3,"brackets":[{"i":2,"j":1,"v":[["3","1"]]}]}"#;
        let err = parse(text).unwrap_err();
        assert_eq!(
            err,
            IoError::Format {
                path: "brackets[0]".into(),
                message: "require i<j".into()
            }
        );
    }

    #[test]
    fn rejects_malformed_json_with_position() {
        let err = parse("{\"format\": ").unwrap_err();
        assert!(matches!(err, IoError::Json(msg) if msg.contains("line")));
    }

    #[test]
    fn rejects_non_prime_modulus() {
        let text = r#"{"format":"nilclass2-v1","field":{"kind":"Fp","p":6},"dim":2,"brackets":[]}"#;
        assert!(matches!(parse(text), Err(IoError::Format { path, .. }) if path == "field.p"));
    }

    #[test]
    fn accepts_numeric_basis_indices_and_rational_coefficients() {
        let text = r#"{"format":"nilclass2-v1","field":{"kind":"Q"},"dim":3,"brackets":[{"i":1,"j":2,"v":[[3,"-1/2"]]}]}"#;
        let l = parse(text).unwrap();
        let w = l.bracket_basis(0, 1);
        assert_eq!(w[2].to_canonical_string(), "-1/2");
    }

    #[test]
    fn rejects_duplicate_entries() {
        let text = r#"{"format":"nilclass2-v1","field":{"kind":"Q"},"dim":3,"brackets":[{"i":1,"j":2,"v":[["3","1"],["3","1"]]}]}"#;
        assert!(parse(text).is_err());
        let text = r#"{"format":"nilclass2-v1","field":{"kind":"Q"},"dim":3,"brackets":[{"i":1,"j":2,"v":[["3","1"]]},{"i":1,"j":2,"v":[["3","1"]]}]}"#;
        assert!(parse(text).is_err());
    }
}
