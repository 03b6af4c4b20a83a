//! Coefficient-map serialization: graded-lex array order and round-trips.

use std::collections::BTreeMap;

use numeric_core::{rat, rint, Rat};
use permanent_core::{Alpha, MultiIndex};
use series_core::{coeffs_from_json, coeffs_to_json, macmahon_per_coeffs};
use numeric_core::RMatrix;

fn mi(parts: &[u32]) -> MultiIndex {
    MultiIndex::from_slice(parts)
}

#[test]
fn serialized_order_is_graded_lex() {
    let mut m: BTreeMap<MultiIndex, Rat> = BTreeMap::new();
    m.insert(mi(&[2, 0]), rint(4));
    m.insert(mi(&[0, 1]), rat(-1, 3));
    m.insert(mi(&[0, 0]), rint(1));
    m.insert(mi(&[1, 0]), rat(7, 2));
    let v = coeffs_to_json(&m);
    let arr = v.as_array().unwrap();
    let order: Vec<Vec<u64>> = arr
        .iter()
        .map(|e| {
            e["n"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
        })
        .collect();
    // Total degree first, then lexicographic.
    assert_eq!(order, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![2, 0]]);
    // Integer-valued rationals serialize as JSON numbers, others as "p/q".
    assert_eq!(arr[0]["value"], serde_json::json!(1));
    assert_eq!(arr[1]["value"], serde_json::json!("-1/3"));
    assert_eq!(arr[2]["value"], serde_json::json!("7/2"));
}

#[test]
fn round_trip_is_identity() {
    let a: RMatrix<Rat> = RMatrix::from_int_rows(&[&[1, 2], &[0, 1]]);
    let coeffs = macmahon_per_coeffs(&a, &Alpha::new(rat(3, 4)), 4).unwrap();
    let back = coeffs_from_json(&coeffs_to_json(&coeffs)).unwrap();
    assert_eq!(coeffs, back);
}
