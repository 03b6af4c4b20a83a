//! Deterministic JSON for coefficient maps: an array of
//! `{"n": [..], "value": ...}` objects in graded-lexicographic order of
//! `n`, so serialized maps diff cleanly.  Values use the shared scalar
//! convention: integers where exact, `"p/q"` strings otherwise, `[re, im]`
//! pairs for complex scalars.

use std::collections::BTreeMap;

use numeric_core::json::{rat_from_value, rat_to_value};
use numeric_core::{NumericError, Rat, Scalar};
use permanent_core::MultiIndex;
use serde_json::{json, Value};

use crate::SeriesError;

/// Serializes a coefficient map.  `BTreeMap` iteration over `MultiIndex`
/// keys is already graded-lex, so the array order is canonical.
pub fn coeffs_to_json<S: Scalar>(coeffs: &BTreeMap<MultiIndex, S>) -> Value {
    let items: Vec<Value> = coeffs
        .iter()
        .map(|(n, c)| {
            let value = if S::IS_COMPLEX {
                json!([rat_to_value(&c.re()), rat_to_value(&c.im())])
            } else {
                rat_to_value(&c.re())
            };
            json!({ "n": n.parts(), "value": value })
        })
        .collect();
    Value::Array(items)
}

/// Parses a real coefficient map serialized by [`coeffs_to_json`].
pub fn coeffs_from_json(v: &Value) -> Result<BTreeMap<MultiIndex, Rat>, SeriesError> {
    let items = v
        .as_array()
        .ok_or_else(|| NumericError::Parse("coefficient map must be a JSON array".into()))?;
    let mut out = BTreeMap::new();
    for item in items {
        let n = item
            .get("n")
            .and_then(Value::as_array)
            .ok_or_else(|| NumericError::Parse("coefficient entry needs an \"n\" array".into()))?
            .iter()
            .map(|e| {
                e.as_u64()
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| NumericError::Parse("exponents must be small naturals".into()))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        let value = item
            .get("value")
            .ok_or_else(|| NumericError::Parse("coefficient entry needs a \"value\"".into()))?;
        out.insert(MultiIndex::new(n), rat_from_value(value)?);
    }
    Ok(out)
}
