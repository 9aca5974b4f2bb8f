// SPDX-License-Identifier: MIT OR Apache-2.0
use quartic_strata::arith::{Field, Fp, Rational};
use quartic_strata::forms::{localize, Form, LocalForm};
use quartic_strata::invariants::dixmier_ohno;
use quartic_strata::singclass::{
    ade_classify, milnor_number, quartic_singularity_type, quartic_singularity_type_mod_p, singular_points,
    AdeFamily, AdeLabel, GitStatus, Milnor, NonIsolatedLabel, SingularLocus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(src: &str) -> Form<Rational> {
    Form::parse(src).unwrap()
}

fn modp(src: &str, p: u64) -> Form<Fp> {
    q(src).reduce_mod(p).unwrap()
}

fn points_mod(src: &str, p: u64) -> Vec<[u64; 3]> {
    let SingularLocus::Isolated(pts) = singular_points(&modp(src, p), 3).unwrap() else {
        panic!("{src} is not reduced");
    };
    let mut out: Vec<[u64; 3]> = pts
        .iter()
        .map(|pt| {
            assert_eq!(pt.conjugates, 1);
            let c = pt.coords.clone().map(|x| x.as_prime().unwrap());
            let k = (0..3).rev().find(|&i| !c[i].is_zero_elem()).unwrap();
            let inv = c[k].try_inv().unwrap();
            c.map(|x| (x * inv).value())
        })
        .collect();
    out.sort();
    out
}

fn local_at_origin(src: &str, p: u64) -> LocalForm<Fp> {
    let f = modp(src, p);
    let z = f.template();
    localize(&f, &[z.zero_like(), z.zero_like(), z.one_like()], 12).unwrap()
}

fn label(s: &str) -> AdeLabel {
    s.parse().unwrap()
}

#[test]
fn single_a3_point() {
    assert_eq!(points_mod("x^2*z^2+y^4+y*x^3", 10007), vec![[0, 0, 1]]);
}

#[test]
fn a3_and_a1_points() {
    assert_eq!(points_mod("x^2*z^2+y^4+y^3*z+y^2*z^2", 10007), vec![[0, 0, 1], [1, 0, 0]]);
    let t = quartic_singularity_type(&q("x^2*z^2+y^4+y^3*z+y^2*z^2"), 1).unwrap();
    assert_eq!(t.name(), "A1A3");
}

#[test]
fn klein_quartic_is_smooth() {
    assert!(points_mod("x^3*y+y^3*z+z^3*x", 10007).is_empty());
}

#[test]
fn klein_brute_force_agrees() {
    let p = 101u64;
    let f = modp("x^3*y+y^3*z+z^3*x", p);
    let parts = quartic_strata::forms::partials(&f);
    let mut count = 0;
    for a in 0..p {
        for b in 0..p {
            for pt in [[a, b, 1], [a, 1, 0], [1, 0, 0]] {
                if pt[2] == 0 && b > 0 {
                    continue;
                }
                let v = pt.map(|c| Fp::from_u64(c, p));
                if parts.iter().all(|g| g.eval(&v).is_zero_elem()) {
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, 0);
    assert!(points_mod("x^3*y+y^3*z+z^3*x", p).is_empty());
}

#[test]
fn milnor_numbers_of_a_series() {
    let cases = [("y^2*z^2-x^2*z^2", 1), ("y^2*z^2-x^3*z", 2), ("y^2*z^2-x^4", 3)];
    for (src, mu) in cases {
        assert_eq!(milnor_number(&local_at_origin(src, 10007)).unwrap(), Milnor::Finite(mu), "{src}");
    }
}

#[test]
fn a6_normal_form_changes_in_characteristic_seven() {
    let src = "x^2*z^2+2*y^2*x*z+y^4-y*x^3";
    for p in [11, 13] {
        assert_eq!(milnor_number(&local_at_origin(src, p)).unwrap(), Milnor::Finite(6));
    }
    assert_eq!(milnor_number(&local_at_origin(src, 7)).unwrap(), Milnor::Finite(9));
}

#[test]
fn smooth_point_is_rejected() {
    let l = local_at_origin("x*z^3+y^4", 10007);
    assert!(milnor_number(&l).is_err());
}

#[test]
fn non_isolated_local_form() {
    let l = local_at_origin("x^2*z^2+x^2*y^2", 10007);
    assert_eq!(milnor_number(&l).unwrap(), Milnor::NonIsolated);
}

#[test]
fn e6_and_d5_points() {
    assert_eq!(ade_classify(&local_at_origin("x^3*z-y^4", 10007)).unwrap(), label("E6"));
    let t = quartic_singularity_type(&q("x^3*z-y^4"), 1).unwrap();
    assert_eq!(t.name(), "E6");
    assert_eq!(t.git_status, GitStatus::Unstable);
    let d5 = "y*x^2*z-y^4+3*y^3*x-x^4";
    assert_eq!(ade_classify(&local_at_origin(d5, 10007)).unwrap(), label("D5"));
}

#[test]
fn ra1a5_conic_type() {
    let t = quartic_singularity_type(&q("(z^2+y*x)*(z^2+y*z+y*x)"), 1).unwrap();
    assert_eq!(t.points, vec![label("A1"), label("A5")]);
    assert_eq!(t.components, vec![2, 2]);
    assert_eq!(t.name(), "rA1A5(conic)");
    assert_eq!(t.git_status, GitStatus::Semistable);
}

#[test]
fn ra1p6_type() {
    let t = quartic_singularity_type(&q("x*y*z*(x+y+z)"), 1).unwrap();
    assert_eq!(t.name(), "rA1^6");
    assert_eq!(t.components, vec![1, 1, 1, 1]);
    assert_eq!(t.git_status, GitStatus::Stable);
}

#[test]
fn conic_squared() {
    let t = quartic_singularity_type(&q("(z^2+y*x)^2"), 1).unwrap();
    assert_eq!(t.non_isolated, Some(NonIsolatedLabel::ConicSq));
    assert_eq!(t.name(), "c^2");
    assert_eq!(t.git_status, GitStatus::Semistable);
}

#[test]
fn non_reduced_shapes() {
    let cases = [
        ("x^2*(y^2+x*z+z^2)", "l^2c"),
        ("x^2*(y^2+x*z)", "l^2c'"),
        ("x^2*y*z", "lll^2"),
        ("x^2*y*(x+y)", "lll^2'"),
        ("x^2*y^2", "l^2l^2"),
        ("x^3*y", "ll^3"),
        ("(x+2*y-z)^4", "l^4"),
    ];
    for (src, name) in cases {
        let t = quartic_singularity_type(&q(src), 1).unwrap();
        assert_eq!(t.name(), name, "{src}");
        assert_eq!(t.git_status == GitStatus::Unstable, dixmier_ohno(&q(src)).unwrap().is_zero(), "{src}");
    }
}

#[test]
fn conjugate_points_are_counted() {
    // Three nodes conjugate over a cubic extension: the curve is irreducible.
    let f = q("(y^2-2*y*x+x^2)*z^2+(-2*y^2*x-2*y*x^2)*z+y^2*x^2");
    let t = quartic_singularity_type(&f, 1).unwrap();
    assert_eq!(t.name(), "A2^3");
    assert_eq!(t.git_status, GitStatus::Stable);
    let g = q("x^4+y^4+z^4 - 2*(x^2*y^2+y^2*z^2+z^2*x^2)");
    let t = quartic_singularity_type(&g, 1).unwrap();
    assert_eq!(t.total_milnor(), t.points.len());
}

#[test]
fn classification_is_invariant_under_local_linear_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let p = 10007;
    for src in ["y^2*z^2-x^4", "x^3*z-y^4", "y*x^2*z-y^4+3*y^3*x-x^4", "x^2*z^2+2*y^2*x*z+y^4-y*x^3"] {
        let l = local_at_origin(src, p);
        let base = ade_classify(&l).unwrap();
        for _ in 0..5 {
            let m: [[Fp; 2]; 2] = loop {
                let m = [[0; 2]; 2].map(|r| r.map(|_: i32| Fp::from_u64(rng.gen(), p)));
                if !(m[0][0] * m[1][1] - m[0][1] * m[1][0]).is_zero_elem() {
                    break m;
                }
            };
            assert_eq!(ade_classify(&l.linear_change(m)).unwrap(), base, "{src}");
        }
    }
}

#[test]
fn labels_round_trip() {
    for s in ["A1", "A7", "D4", "D6", "E6", "E7", "X9"] {
        assert_eq!(label(s).to_string(), s);
    }
    assert!("A8".parse::<AdeLabel>().is_err());
    assert!("E8".parse::<AdeLabel>().is_err());
    assert_eq!(label("X9").family, AdeFamily::X);
    assert_eq!("ℓ²c′".parse::<NonIsolatedLabel>().unwrap(), NonIsolatedLabel::LineSqConicTangent);
}

#[test]
fn small_characteristic_is_rejected() {
    let f = modp("x^4+y^4+z^4", 7);
    assert!(quartic_singularity_type_mod_p(&f, 1).is_err());
}
