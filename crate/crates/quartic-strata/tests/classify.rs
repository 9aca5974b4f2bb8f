// SPDX-License-Identifier: MIT OR Apache-2.0
use quartic_strata::arith::{ExtRational, Fp, Rational};
use quartic_strata::classify::{
    expand_wildcard, reduction_candidates, singularity_candidates, singularity_to_reduction, ReductionType,
    SingularityCandidates, ROW_SIZES,
};
use quartic_strata::forms::Form;
use quartic_strata::huicatalog::{HuiCatalog, StratumLabel};
use quartic_strata::invariants::dixmier_ohno;
use quartic_strata::singclass::quartic_singularity_type_mod_p;
use quartic_strata::strata::{StrataCatalog, StratumId};
use quartic_strata::Error;

fn label(s: &str) -> StratumLabel {
    s.parse().unwrap()
}

fn q(src: &str) -> Form<Rational> {
    Form::parse(src).unwrap()
}

fn names(set: &quartic_strata::classify::ReductionTypeSet) -> Vec<&'static str> {
    set.names()
}

#[test]
fn forty_two_reduction_types() {
    assert_eq!(ReductionType::all().count(), 42);
    assert_eq!(ROW_SIZES.iter().sum::<usize>(), 42);
    let mut rows = [0usize; 7];
    for t in ReductionType::all() {
        rows[t.row()] += 1;
    }
    assert_eq!(rows, [1, 2, 5, 9, 12, 8, 5]);
    assert_eq!(ReductionType::all().filter(|t| t.is_hyperelliptic()).count(), 15);
    assert_eq!("(1em)".parse::<ReductionType>().unwrap().name(), "1me");
    assert_eq!("(2n)".parse::<ReductionType>().unwrap().name(), "2n");
    assert!("(4)".parse::<ReductionType>().is_err());
}

#[test]
fn wildcard_expansion() {
    assert_eq!(names(&expand_wildcard("(1=*)_H").unwrap()), ["(1=1)_H", "(1=0n)_H", "(1=0e)_H", "(1=0m)_H"]);
    assert_eq!(names(&expand_wildcard("(*=1)_H").unwrap()), ["(Z=1)_H"]);
    let all = expand_wildcard("(*)_H").unwrap();
    assert!(all.hyperelliptic_wildcard);
    assert_eq!(all.concrete.len(), 15);
    assert_eq!(names(&expand_wildcard("(*=0e)_H").unwrap()), ["(1=0e)_H", "(0n=0e)_H", "(Z=0e)_H", "(0m=0e)_H"]);
    assert!(expand_wildcard("(*=*)_H").is_err());
    assert!(expand_wildcard("(2=*)_H").is_err());
    assert!(expand_wildcard("(*=Z)_H").is_err());
}

#[test]
fn nodal_rows_are_single_types() {
    let rows = [
        ("A1", "2n"),
        ("A1^2", "1nn"),
        ("A1^3", "0nnn"),
        ("rA1^3", "1---0"),
        ("rA1^4(conic)", "0----0"),
        ("rA1^4(cubic)", "0---0n"),
        ("rA1^5", "CAVE"),
        ("rA1^6", "BRAID"),
    ];
    for (s, r) in rows {
        let set = singularity_to_reduction(&label(s)).unwrap();
        assert_eq!(names(&set), [r], "{s}");
        assert!(!set.hyperelliptic_wildcard);
    }
}

#[test]
fn other_rows() {
    assert_eq!(names(&singularity_to_reduction(&label("A2")).unwrap()), ["2e", "2m"]);
    assert_eq!(names(&singularity_to_reduction(&label("A2^3")).unwrap()), ["0eee", "0mee", "0mme", "0mmm"]);
    assert_eq!(singularity_to_reduction(&label("rA1A3")).unwrap().concrete.len(), 5);
    let tacnodal = singularity_to_reduction(&label("rA1A2A3")).unwrap();
    let mut expected = expand_wildcard("(*=0e)_H").unwrap();
    expected.union_with(&expand_wildcard("(*=0m)_H").unwrap());
    assert_eq!(tacnodal, expected);
    assert!(singularity_to_reduction(&label("c^2")).unwrap().hyperelliptic_wildcard);
    assert!(matches!(singularity_to_reduction(&label("D4")), Err(Error::Input(_))));
}

#[test]
fn every_semistable_label_has_a_row() {
    for l in HuiCatalog::standard().non_unstable_labels() {
        assert!(!singularity_to_reduction(&l).unwrap().is_empty(), "{l}");
    }
}

#[test]
fn tacnodal_curve_lands_in_the_tacnode_group() {
    let cat = StrataCatalog::standard();
    let v = dixmier_ohno(&q("x^2*z^2 + y^4 + y*x^3")).unwrap();
    let c = singularity_candidates(&v, cat).unwrap();
    assert_eq!(c.names(), ["A3", "A1A3", "A2A3", "rA3^2", "rA1^2A3(conic)"]);
    assert_eq!(
        c,
        SingularityCandidates::Singular {
            stratum: StratumId::A3Group,
            labels: ["A3", "A1A3", "A2A3", "rA3^2", "rA1^2A3(conic)"].map(label).to_vec()
        }
    );
}

#[test]
fn easy_cases() {
    let cat = StrataCatalog::standard();
    let klein = dixmier_ohno(&q("x^3*y + y^3*z + z^3*x")).unwrap();
    assert_eq!(singularity_candidates(&klein, cat).unwrap(), SingularityCandidates::Smooth);
    let zero = dixmier_ohno(&q("x^4")).unwrap();
    assert_eq!(singularity_candidates(&zero, cat).unwrap(), SingularityCandidates::Unstable);
    let f7: Form<Fp> = q("x^3*y + y^3*z + z^3*x").reduce_mod(11).unwrap();
    assert!(singularity_candidates(&dixmier_ohno(&f7).unwrap(), cat).is_ok());
}

#[test]
fn samples_are_among_the_candidates() {
    let hui = HuiCatalog::standard();
    let cat = StrataCatalog::standard();
    for l in hui.non_unstable_labels() {
        for seed in 0..5 {
            let f = hui.sample_mod_p(&l, seed, 1_000_003).unwrap();
            let c = singularity_candidates(&dixmier_ohno(&f).unwrap(), cat).unwrap();
            assert!(c.contains(&l), "{l} sample {seed}: {c}");
        }
    }
}

#[test]
fn braid_reduction() {
    let r = reduction_candidates(&q("x*y*z*(x+y+z) + 11*z^4"), 11, StrataCatalog::standard()).unwrap();
    assert_eq!(names(&r.types), ["BRAID"]);
    assert!(r.conditional);
    let one = ExtRational::Finite(Rational::from_integer(1.into()));
    assert_eq!(r.gaps[0], (StratumId::RA1p6, one));
}

#[test]
fn klein_quartic_has_good_reduction_at_11() {
    let r = reduction_candidates(&q("x^3*y + y^3*z + z^3*x"), 11, StrataCatalog::standard()).unwrap();
    assert_eq!(r.singularities, SingularityCandidates::Smooth);
    assert_eq!(names(&r.types), ["3"]);
}

#[test]
fn cuspidal_reduction() {
    let hui = HuiCatalog::standard();
    let p = 1009;
    let f0 = (0..)
        .map(|seed| hui.sample_rational(&label("A2"), seed).unwrap())
        .find(|f| quartic_singularity_type_mod_p(&f.reduce_mod(p as u64).unwrap(), 1).unwrap().name() == "A2")
        .unwrap();
    let f = Form::quartic(
        f0.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() + Rational::from_integer((p * (i as i64 % 3 + 1)).into()))
            .collect(),
    )
    .unwrap();
    let r = reduction_candidates(&f, p as u64, StrataCatalog::standard()).unwrap();
    assert_eq!(names(&r.types), ["2e", "2m"]);
}

#[test]
fn double_conic_reduction_is_hyperelliptic() {
    let f = q("(x*z - y^2)^2 - 121*(x^4 + 2*y^4 + 3*z^4 + x*y*z^2 + 5*x^2*y*z)");
    let r = reduction_candidates(&f, 11, StrataCatalog::standard()).unwrap();
    assert!(r.types.hyperelliptic_wildcard, "{}", r.singularities);
}

#[test]
fn isomorphic_models_agree() {
    let p = 11;
    let m1 = q("11^5*z^4 + x^2*z^2 + 11^2*y^2*z^2 + 11*y^3*z + y^4 + y*x^3");
    let m2 = q("11*z^4 + x^2*z^2 + y^2*z^2 + y^3*z + y^4 + 11^3*y*x^3");
    let cat = StrataCatalog::standard();
    let r1 = reduction_candidates(&m1, p, cat).unwrap();
    let r2 = reduction_candidates(&m2, p, cat).unwrap();
    assert_eq!(r1.types, r2.types);
    let t1 = quartic_singularity_type_mod_p(&m1.reduce_mod(p).unwrap(), 1).unwrap();
    let t2 = quartic_singularity_type_mod_p(&m2.reduce_mod(p).unwrap(), 1).unwrap();
    assert_eq!(t1.name(), "A3");
    assert_eq!(t2.name(), "A1A3");
}

#[test]
fn small_primes_are_rejected() {
    let cat = StrataCatalog::standard();
    assert!(matches!(
        reduction_candidates(&q("x^4 + y^4 + z^4"), 7, cat),
        Err(Error::UnsupportedCharacteristic(7) | Error::Input(_))
    ));
    let f: Form<Fp> = q("x^3*y + y^3*z + z^3*x").reduce_mod(5).unwrap();
    let v = dixmier_ohno(&f);
    if let Ok(v) = v {
        assert!(singularity_candidates(&v, cat).is_err());
    }
}
