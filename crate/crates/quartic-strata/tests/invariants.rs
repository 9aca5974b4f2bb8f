// SPDX-License-Identifier: MIT OR Apache-2.0
use num_bigint::BigInt;
use num_traits::{One, Zero};
use quartic_strata::arith::{rat, wp_equal, Field, Fp, Rational, WeightedPoint, WEIGHTS};
use quartic_strata::forms::{Form, LinearSubstitution};
use quartic_strata::invariants::{
    anchors, dixmier_ohno, discriminant, verify_calibration, verify_calibration_with, CalibrationTable,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(src: &str) -> Form<Rational> {
    Form::parse(src).unwrap()
}

fn random_quartic(rng: &mut ChaCha8Rng, bound: i64) -> Form<Rational> {
    Form::quartic((0..15).map(|_| rat(rng.gen_range(-bound..=bound), 1)).collect()).unwrap()
}

fn random_sl3(rng: &mut ChaCha8Rng) -> LinearSubstitution<Rational> {
    let mut m = LinearSubstitution::identity(&Rational::zero());
    for _ in 0..4 {
        let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
        if i == j {
            continue;
        }
        let mut e = LinearSubstitution::identity(&Rational::zero());
        e.m[i][j] = rat(rng.gen_range(-3..=3), 1);
        m = m.mul(&e);
    }
    m
}

#[test]
fn calibration_verifies() {
    let report = verify_calibration().unwrap();
    assert!(report.passed());
    assert_eq!(report.checks.len(), 11);
}

#[test]
fn perturbed_i6_constant_is_named() {
    let mut t = CalibrationTable::standard().clone();
    t.constants[1] = t.constants[1].clone() * rat(2, 1);
    let err = verify_calibration_with(&t).unwrap_err().to_string();
    assert!(err.contains("I6"), "{err}");
}

#[test]
fn ra1p6_leading_terms_are_exact() {
    let v = dixmier_ohno(&q("x*y*z*(x+y+z)")).unwrap();
    assert_eq!(v.coords, anchors::ra1p6_exact());
    assert_eq!(v.coords[0], rat(-1, 144));
}

#[test]
fn tacnodal_pair_shares_invariants() {
    let a = dixmier_ohno(&q("x^2*z^2+y^4+y*x^3")).unwrap();
    let b = dixmier_ohno(&q("x^2*z^2+y^4+y^3*z+y^2*z^2")).unwrap();
    assert!(wp_equal(&a, &b).unwrap());
    assert!(wp_equal(&a, &WeightedPoint::new(anchors::tacnodal())).unwrap());
}

#[test]
fn printed_ra1a3_tuple_differs_only_in_i12_sign() {
    let v = dixmier_ohno(&q("y*z*(y*z+x^2)")).unwrap();
    assert!(wp_equal(&v, &WeightedPoint::new(anchors::ra1a3_group())).unwrap());
    assert!(!wp_equal(&v, &WeightedPoint::new(anchors::ra1a3_group_printed())).unwrap());
    let printed = anchors::ra1a3_group_printed();
    let fixed = anchors::ra1a3_group();
    let diffs: Vec<usize> = (0..13).filter(|&i| printed[i] != fixed[i]).collect();
    assert_eq!(diffs, vec![4]);
}

#[test]
fn homogeneity() {
    let f = q("x^4 + 3*x^2*y*z - y^3*z + 2*z^4 - x*y^3");
    let v = dixmier_ohno(&f).unwrap();
    let w = dixmier_ohno(&f.scale(&rat(5, 1))).unwrap();
    for i in 0..13 {
        let s = num_traits::pow(rat(5, 1), WEIGHTS[i] as usize);
        assert_eq!(w.coords[i], v.coords[i].clone() * s);
    }
}

#[test]
fn fermat_and_klein_discriminants() {
    let fermat = q("x^4+y^4+z^4");
    assert_eq!(discriminant(&fermat).unwrap(), Rational::from_integer(BigInt::one() << 40u32));
    assert_eq!(dixmier_ohno(&fermat).unwrap().coords[12], rat(1, 1));
    let klein = q("x^3*y+y^3*z+z^3*x");
    assert_eq!(discriminant(&klein).unwrap(), rat(823543, 1));
}

#[test]
fn discriminant_of_singular_and_nonreduced_forms_vanishes() {
    assert!(discriminant(&q("x^2*z^2+y^4+y*x^3")).unwrap().is_zero());
    assert!(discriminant(&q("(z^2+y*x)^2")).unwrap().is_zero());
    assert!(discriminant(&q("x^4")).unwrap().is_zero());
}

#[test]
fn sl3_invariance_coordinatewise() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let f = random_quartic(&mut rng, 5);
        let a = random_sl3(&mut rng);
        assert_eq!(a.det(), rat(1, 1));
        let v = dixmier_ohno(&f).unwrap();
        let w = dixmier_ohno(&f.act(&a)).unwrap();
        assert_eq!(v, w);
    }
}

#[test]
fn diagonal_covariance_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let f = random_quartic(&mut rng, 4);
    // diag(a, b, c) with det = 8: invariant of weight w scales by 8^(4w/3).
    let d = LinearSubstitution::diagonal([rat(1, 1), rat(2, 1), rat(4, 1)]);
    let v = dixmier_ohno(&f).unwrap();
    let w = dixmier_ohno(&f.act(&d)).unwrap();
    for i in 0..13 {
        let s = num_traits::pow(rat(8, 1), (4 * WEIGHTS[i] / 3) as usize);
        assert_eq!(w.coords[i], v.coords[i].clone() * s, "weight {}", WEIGHTS[i]);
    }
}

#[test]
fn reduction_commutes_with_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for p in [10007u64, 1_000_000_007] {
        let f = random_quartic(&mut rng, 30);
        let v = dixmier_ohno(&f).unwrap().reduce_mod(p).unwrap();
        let w = dixmier_ohno(&f.reduce_mod(p).unwrap()).unwrap();
        assert_eq!(v, w);
    }
}

#[test]
fn small_characteristics_are_rejected() {
    let f = Form::quartic((0..15).map(|i| Fp::new(i, 7)).collect()).unwrap();
    assert!(dixmier_ohno(&f).is_err());
    let f = Form::quartic((0..15).map(|i| Fp::new(i, 11)).collect()).unwrap();
    assert!(dixmier_ohno(&f).is_ok());
}

#[test]
fn unstable_forms_have_zero_invariants() {
    for src in ["x^4", "x^3*z-y^4", "x*z^3", "x^2*z^2"] {
        let v = dixmier_ohno(&q(src)).unwrap();
        assert!(v.is_zero(), "{src}");
    }
}

#[test]
fn prime_field_discriminant_small_field() {
    // The Klein quartic has discriminant 7^7, so it is smooth over F_11.
    let f = q("x^3*y+y^3*z+z^3*x").reduce_mod(11).unwrap();
    let v = dixmier_ohno(&f).unwrap();
    assert!(!v.coords[12].is_zero_elem());
}
