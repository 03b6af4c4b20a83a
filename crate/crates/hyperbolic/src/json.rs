//! JSON wire format for polynomials and certificates.
//!
//! A polynomial is an array of term objects, graded-lexicographically
//! ordered for deterministic output:
//!
//! ```json
//! [ {"exp": [2, 0, 0], "coef": "1"}, {"exp": [0, 1, 1], "coef": "-1/2"} ]
//! ```

use serde_json::{json, Value};

use numeric_core::json::{rat_from_value, rat_to_value};
use numeric_core::Rat;
use permanent_core::MultiIndex;
use series_core::SparsePoly;

use crate::{Certificate, HyperbolicError};

/// Serializes a polynomial as a graded-lex-ordered term array.
pub fn poly_to_json(p: &SparsePoly<Rat>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(n, c)| json!({ "exp": n.parts(), "coef": rat_to_value(c) }))
        .collect();
    Value::Array(terms)
}

/// Parses a term-array polynomial.  The variable count is inferred from the
/// first exponent vector; every term must agree with it, and at least one
/// term is required (the zero polynomial has no inferable arity).
pub fn poly_from_json(v: &Value) -> Result<SparsePoly<Rat>, HyperbolicError> {
    let arr = v
        .as_array()
        .ok_or_else(|| HyperbolicError::Parse("expected an array of terms".into()))?;
    let mut terms = Vec::with_capacity(arr.len());
    for t in arr {
        let exp = t
            .get("exp")
            .and_then(Value::as_array)
            .ok_or_else(|| HyperbolicError::Parse("term missing \"exp\" array".into()))?;
        let parts = exp
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| HyperbolicError::Parse(format!("bad exponent {e}")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        let coef = t
            .get("coef")
            .ok_or_else(|| HyperbolicError::Parse("term missing \"coef\"".into()))?;
        let coef =
            rat_from_value(coef).map_err(|e| HyperbolicError::Parse(format!("bad coef: {e}")))?;
        terms.push((MultiIndex::new(parts), coef));
    }
    let Some(nvars) = terms.first().map(|(n, _)| n.len()) else {
        return Err(HyperbolicError::Parse(
            "empty term list: variable count cannot be inferred".into(),
        ));
    };
    if let Some((n, _)) = terms.iter().find(|(n, _)| n.len() != nvars) {
        return Err(HyperbolicError::Parse(format!(
            "exponent vector of length {} after one of length {nvars}",
            n.len()
        )));
    }
    Ok(SparsePoly::from_terms(nvars, terms)?)
}

/// `{trials, seed, passed}` — `passed` is always true for a held
/// certificate, since failed runs never produce one.
pub fn certificate_to_json(c: &Certificate) -> Value {
    json!({ "trials": c.trials, "seed": c.seed, "passed": true })
}
