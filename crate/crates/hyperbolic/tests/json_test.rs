//! Polynomial wire-format round trips.

use numeric_core::{rat, Rat};
use permanent_core::MultiIndex;
use serde_json::json;
use series_core::SparsePoly;

use hyperbolic::{certificate_to_json, certify_hyperbolic, poly_from_json, poly_to_json};

#[test]
fn polynomial_round_trips_and_orders_terms() {
    let p = SparsePoly::from_terms(
        3,
        [
            (MultiIndex::new(vec![0, 1, 1]), rat(-1, 2)),
            (MultiIndex::new(vec![2, 0, 0]), rat(1, 1)),
            (MultiIndex::new(vec![3, 0, 0]), rat(5, 3)),
        ],
    )
    .unwrap();
    let v = poly_to_json(&p);
    // Graded-lex: both quadratics before the cubic, (0,1,1) before (2,0,0).
    assert_eq!(
        v,
        json!([
            {"exp": [0, 1, 1], "coef": "-1/2"},
            {"exp": [2, 0, 0], "coef": 1},
            {"exp": [3, 0, 0], "coef": "5/3"},
        ])
    );
    assert_eq!(poly_from_json(&v).unwrap(), p);
}

#[test]
fn malformed_terms_are_rejected() {
    assert!(poly_from_json(&json!({"exp": [1]})).is_err());
    assert!(poly_from_json(&json!([])).is_err());
    assert!(poly_from_json(&json!([{"exp": [1, 0], "coef": "1"}, {"exp": [1], "coef": "2"}]))
        .is_err());
    assert!(poly_from_json(&json!([{"coef": "1"}])).is_err());
    assert!(poly_from_json(&json!([{"exp": [1, 0]}])).is_err());
}

#[test]
fn certificates_serialize_with_their_parameters() {
    let p = SparsePoly::from_terms(2, [(MultiIndex::new(vec![1, 1]), Rat::from_integer(1.into()))])
        .unwrap();
    let inst = certify_hyperbolic(&p, &[rat(1, 1), rat(1, 1)], 25, 99).unwrap();
    assert_eq!(
        certificate_to_json(inst.certificate()),
        json!({"trials": 25, "seed": 99, "passed": true})
    );
}
