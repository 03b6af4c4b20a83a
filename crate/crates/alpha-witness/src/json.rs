//! JSON wire formats for classification, scan, and witness reports.
//!
//! All rationals go through [`rat_to_value`], so values that fit in a JSON
//! integer stay numeric and everything else becomes an exact `"p/q"` string.
//! `serde_json` maps keep keys sorted, so serialization is deterministic.

use numeric_core::json::rat_to_value;
use serde_json::{json, Map, Value};

use crate::classify::AlphaClass;
use crate::frame::FrameVectors;
use crate::nonneg::NonnegReport;
use crate::witness::{ExhaustionReport, Witness};

/// Frame vectors as a JSON list of vectors; complex entries as `[re, im]`.
fn frame_to_value(frame: &FrameVectors) -> Value {
    match frame {
        FrameVectors::Real(vs) => Value::Array(
            vs.iter()
                .map(|v| Value::Array(v.iter().map(rat_to_value).collect()))
                .collect(),
        ),
        FrameVectors::Complex(vs) => Value::Array(
            vs.iter()
                .map(|v| {
                    Value::Array(
                        v.iter()
                            .map(|z| json!([rat_to_value(&z.re), rat_to_value(&z.im)]))
                            .collect(),
                    )
                })
                .collect(),
        ),
    }
}

/// Classification verdict for one α.
pub fn alpha_class_to_json(class: &AlphaClass) -> Value {
    let mut obj = Map::new();
    obj.insert("alpha".into(), rat_to_value(&class.alpha));
    obj.insert("field".into(), json!(class.field.to_string()));
    obj.insert("member".into(), json!(class.member));
    obj.insert("reason".into(), json!(class.reason.to_string()));
    obj.insert(
        "conjecture4_claimed".into(),
        json!(class.conjecture4_claimed),
    );
    Value::Object(obj)
}

/// A verified witness: PSD matrix, multi-index, and the negative value.
pub fn witness_to_json(w: &Witness) -> Value {
    let mut verification = Map::new();
    verification.insert("series".into(), json!(true));
    verification.insert("naive".into(), json!(w.naive_verified));

    let mut obj = Map::new();
    obj.insert("alpha".into(), rat_to_value(&w.alpha));
    obj.insert("field".into(), json!(w.field.to_string()));
    obj.insert("m".into(), json!(w.m));
    obj.insert("frame".into(), frame_to_value(&w.frame));
    obj.insert(
        "y".into(),
        Value::Array(w.y.iter().map(rat_to_value).collect()),
    );
    obj.insert("gram".into(), w.gram.to_value());
    obj.insert("n_index".into(), json!(w.multi_index.parts()));
    obj.insert("det_alpha_value".into(), rat_to_value(&w.det_alpha_value));
    obj.insert("verification".into(), Value::Object(verification));
    Value::Object(obj)
}

/// Exhausted search: every attempt scanned clean up to the degree budget.
pub fn exhaustion_to_json(r: &ExhaustionReport) -> Value {
    let mut obj = Map::new();
    obj.insert("exhausted".into(), json!(true));
    obj.insert("alpha".into(), rat_to_value(&r.alpha));
    obj.insert("field".into(), json!(r.field.to_string()));
    obj.insert("beta".into(), rat_to_value(&r.beta));
    obj.insert("m".into(), json!(r.m));
    obj.insert("max_degree".into(), json!(r.max_degree));
    obj.insert("attempts".into(), json!(r.attempts));
    obj.insert("seed".into(), json!(r.seed));
    obj.insert(
        "coefficients_scanned".into(),
        json!(r.coefficients_scanned),
    );
    Value::Object(obj)
}

/// Tally of an exact nonnegativity scan.
pub fn nonneg_report_to_json(r: &NonnegReport) -> Value {
    let mut obj = Map::new();
    obj.insert("alpha".into(), rat_to_value(&r.alpha));
    obj.insert("field".into(), json!(r.field.to_string()));
    obj.insert("samples".into(), json!(r.samples));
    obj.insert("violations".into(), json!(r.violations));
    obj.insert(
        "min_value".into(),
        r.min_value.as_ref().map_or(Value::Null, rat_to_value),
    );
    obj.insert("seed".into(), json!(r.seed));
    Value::Object(obj)
}
