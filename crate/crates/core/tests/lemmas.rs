mod common;

use weylkit::classify::{rank2_three_object_scheme, two_object_rank2};
use weylkit::{CartanMatrix, CartanScheme};

#[test]
fn structural_lemmas_hold_on_every_finite_record() {
    let schemes = common::finite_schemes(3);
    assert!(schemes.len() >= 30, "only {} schemes", schemes.len());
    let failures = common::run_all(&schemes);
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn infinite_schemes_have_infinite_groupoids() {
    let affine = CartanScheme::single(CartanMatrix::new(&[vec![2, -2], vec![-2, 2]]).unwrap());
    let hyperbolic = CartanScheme::single(CartanMatrix::new(&[vec![2, -3], vec![-3, 2]]).unwrap());
    for s in [affine, hyperbolic, two_object_rank2(-6), rank2_three_object_scheme(2, 2, 2, 2)] {
        common::closure_matches_groupoid(&s, 2_000).unwrap();
    }
}
