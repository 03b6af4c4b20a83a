//! The shared matrix JSON encoding used by every tool in this workspace.
//!
//! A matrix is `{"rows": r, "cols": c, "entries": [[...], ...]}` with one
//! inner array per row. Each entry is one of:
//!
//! * a JSON integer (convenience input form),
//! * a string `"p/q"` or `"p"` (exact rational),
//! * a two-element array `[re, im]` of either of the above (complex).
//!
//! Output is canonical and bit-exact: rationals serialize as integers when
//! the denominator is one and the value fits a JSON-safe integer, otherwise
//! as `"p/q"` strings; complex entries always serialize as `[re, im]`.
//! Parsing canonical output reproduces the value, and re-serializing
//! reproduces the bytes.

use num::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::scalar::{CRat, Rat, Scalar};
use crate::{NumericError, RMatrix};

/// A parsed matrix: real if every entry was scalar, complex if any entry used
/// the `[re, im]` form. Structure flags are auto-detected on parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenMatrix {
    Real(RMatrix<Rat>),
    Complex(RMatrix<CRat>),
}

impl GenMatrix {
    pub fn rows(&self) -> usize {
        match self {
            GenMatrix::Real(m) => m.rows(),
            GenMatrix::Complex(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            GenMatrix::Real(m) => m.cols(),
            GenMatrix::Complex(m) => m.cols(),
        }
    }

    /// Widens to a complex matrix (real matrices embed with zero imaginary
    /// parts).
    pub fn into_complex(self) -> RMatrix<CRat> {
        match self {
            GenMatrix::Complex(m) => m,
            GenMatrix::Real(m) => {
                let entries = m.entries().iter().map(|r| CRat::from_rat(r.clone())).collect();
                RMatrix::new(m.rows(), m.cols(), entries)
                    .expect("shape preserved")
                    .detect_structure()
            }
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            GenMatrix::Real(m) => matrix_to_value(m),
            GenMatrix::Complex(m) => matrix_to_value(m),
        }
    }
}

/// Parses an exact rational from a JSON integer or a `"p/q"` / `"p"` string.
pub fn rat_from_value(v: &Value) -> Result<Rat, NumericError> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rat::from_integer(u.into()))
            } else {
                Err(NumericError::Parse(format!(
                    "non-integer JSON number {n} (use a \"p/q\" string for exact rationals)"
                )))
            }
        }
        Value::String(s) => rat_from_str(s),
        other => Err(NumericError::Parse(format!(
            "expected integer or \"p/q\" string, found {other}"
        ))),
    }
}

/// Parses `"p/q"` or `"p"` with arbitrary-precision parts.
pub fn rat_from_str(s: &str) -> Result<Rat, NumericError> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| NumericError::Parse(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(NumericError::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Canonical JSON form of a rational: an integer when exact and JSON-safe,
/// otherwise a `"p/q"` string.
pub fn rat_to_value(r: &Rat) -> Value {
    if r.denom().is_one() {
        if let Some(i) = to_i64_checked(r.numer()) {
            return json!(i);
        }
    }
    json!(r.to_string())
}

/// Canonical string form of a rational: `"p"` or `"p/q"`.
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}

fn to_i64_checked(b: &BigInt) -> Option<i64> {
    // Keep within the range every JSON parser handles losslessly.
    const SAFE: i64 = (1i64 << 53) - 1;
    let (sign, digits) = b.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 if digits[0] <= SAFE as u64 => {
            let v = digits[0] as i64;
            Some(if sign == num::bigint::Sign::Minus { -v } else { v })
        }
        _ => None,
    }
}

fn scalar_entry_to_value<S: Scalar>(s: &S) -> Value {
    if S::IS_COMPLEX {
        json!([rat_to_value(&s.re()), rat_to_value(&s.im())])
    } else {
        rat_to_value(&s.re())
    }
}

/// Serializes a matrix into the shared JSON format.
pub fn matrix_to_value<S: Scalar>(m: &RMatrix<S>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| scalar_entry_to_value(m.get(i, j)))
                    .collect(),
            )
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("rows".into(), json!(m.rows()));
    obj.insert("cols".into(), json!(m.cols()));
    obj.insert("entries".into(), Value::Array(entries));
    Value::Object(obj)
}

/// Parses a matrix from the shared JSON format, auto-detecting real vs
/// complex (any `[re, im]` entry makes the whole matrix complex) and setting
/// the structure flags that actually hold.
pub fn matrix_from_value(v: &Value) -> Result<GenMatrix, NumericError> {
    let obj = v
        .as_object()
        .ok_or_else(|| NumericError::Parse("matrix JSON must be an object".into()))?;
    let rows = get_count(obj, "rows")?;
    let cols = get_count(obj, "cols")?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| NumericError::Parse("missing \"entries\" array".into()))?;
    if entries.len() != rows {
        return Err(NumericError::Parse(format!(
            "expected {rows} rows, found {}",
            entries.len()
        )));
    }
    let mut flat: Vec<CRat> = Vec::with_capacity(rows * cols);
    let mut any_complex = false;
    for row in entries {
        let row = row
            .as_array()
            .ok_or_else(|| NumericError::Parse("rows must be arrays".into()))?;
        if row.len() != cols {
            return Err(NumericError::Parse(format!(
                "expected {cols} columns, found {}",
                row.len()
            )));
        }
        for e in row {
            match e {
                Value::Array(parts) => {
                    if parts.len() != 2 {
                        return Err(NumericError::Parse(
                            "complex entries must be [re, im]".into(),
                        ));
                    }
                    any_complex = true;
                    flat.push(CRat::new(
                        rat_from_value(&parts[0])?,
                        rat_from_value(&parts[1])?,
                    ));
                }
                scalar => flat.push(CRat::from_rat(rat_from_value(scalar)?)),
            }
        }
    }
    if any_complex {
        Ok(GenMatrix::Complex(
            RMatrix::new(rows, cols, flat)?.detect_structure(),
        ))
    } else {
        let reals = flat.into_iter().map(|c| c.re).collect();
        Ok(GenMatrix::Real(
            RMatrix::new(rows, cols, reals)?.detect_structure(),
        ))
    }
}

/// Parses a matrix from JSON text.
pub fn matrix_from_str(s: &str) -> Result<GenMatrix, NumericError> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| NumericError::Parse(format!("invalid JSON: {e}")))?;
    matrix_from_value(&v)
}

fn get_count(obj: &Map<String, Value>, key: &str) -> Result<usize, NumericError> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|n| n as usize)
        .ok_or_else(|| NumericError::Parse(format!("missing or invalid \"{key}\"")))
}
