// SPDX-License-Identifier: MIT OR Apache-2.0
use quartic_strata::arith::{rat, Field, Fp, Rational};
use quartic_strata::forms::Form;
use quartic_strata::huicatalog::{normalize_label, HuiCatalog, SampleField, SampledQuartic, StratumLabel};
use quartic_strata::invariants::dixmier_ohno;
use quartic_strata::singclass::{quartic_singularity_type, singular_points, SingularLocus};
use quartic_strata::strata::{StrataCatalog, StratumId};

fn label(s: &str) -> StratumLabel {
    s.parse().unwrap()
}

fn q(src: &str) -> Form<Rational> {
    Form::parse(src).unwrap()
}

#[test]
fn catalog_sizes() {
    let cat = HuiCatalog::standard();
    assert_eq!(cat.labels().count(), 55);
    assert_eq!(cat.non_unstable_labels().len(), 34);
}

#[test]
fn labels_normalize_from_unicode() {
    assert_eq!(normalize_label("ʳA₁⁴_con"), "rA1^4(conic)");
    assert_eq!(label("ʳA₁²A₃_cub").as_str(), "rA1^2A3(cubic)");
    assert_eq!(label("smooth").as_str(), "Smooth");
    assert_eq!(label("ℓ⁴").as_str(), "l^4");
    assert!("A9".parse::<StratumLabel>().is_err());
}

#[test]
fn normal_forms_of_point_strata() {
    let cat = HuiCatalog::standard();
    let a2p3 = cat.normal_form_rational(&label("A2^3"), &[]).unwrap();
    assert_eq!(quartic_singularity_type(&a2p3, 1).unwrap().name(), "A2^3");
    let ra1p6 = cat.normal_form_rational(&label("rA1^6"), &[]).unwrap();
    assert_eq!(quartic_singularity_type(&ra1p6, 1).unwrap().name(), "rA1^6");
}

#[test]
fn e6_discrete_parameter() {
    let cat = HuiCatalog::standard();
    let e6 = label("E6");
    assert_eq!(cat.normal_form_rational(&e6, &[rat(0, 1)]).unwrap(), q("x^3*z - y^4"));
    assert_eq!(cat.normal_form_rational(&e6, &[]).unwrap(), q("x^3*z - y^4"));
    assert_eq!(cat.normal_form_rational(&e6, &[rat(1, 1)]).unwrap(), q("x^3*z - y^4 - x^2*y^2"));
}

#[test]
fn arity_is_checked() {
    let cat = HuiCatalog::standard();
    assert!(cat.normal_form_rational(&label("A1"), &[rat(1, 1)]).is_err());
    assert!(cat.normal_form_rational(&label("rA1^6"), &[rat(1, 1)]).is_err());
}

#[test]
fn nodal_sample_has_one_node_at_the_origin_point() {
    let cat = HuiCatalog::standard();
    for seed in 0..5 {
        let f = cat.sample_mod_p(&label("A1"), seed, 10007).unwrap();
        let SingularLocus::Isolated(pts) = singular_points(&f, seed).unwrap() else {
            panic!("nodal sample is not reduced");
        };
        assert_eq!(pts.len(), 1);
        let c = pts[0].coords.clone().map(|x| x.as_prime().unwrap());
        assert!(!c[0].is_zero_elem() && c[1].is_zero_elem() && c[2].is_zero_elem());
    }
}

#[test]
fn three_node_rational_samples() {
    let cat = HuiCatalog::standard();
    for seed in 0..3 {
        let f = cat.sample_rational(&label("A1^3"), seed).unwrap();
        assert_eq!(quartic_singularity_type(&f, seed).unwrap().name(), "A1^3");
    }
}

#[test]
fn excluded_locus_changes_the_type() {
    let cat = HuiCatalog::standard();
    let f = cat.normal_form_rational(&label("A1^3"), &[rat(2, 1), rat(5, 1), rat(7, 1)]).unwrap();
    assert_ne!(quartic_singularity_type(&f, 1).unwrap().name(), "A1^3");
    let t = cat.get(&label("A1^3")).unwrap();
    let z = rat(0, 1);
    assert!(!t.avoids_excluded(&[rat(2, 1), rat(5, 1), rat(7, 1)], &z).unwrap());
    assert!(t.avoids_excluded(&[rat(3, 1), rat(5, 1), rat(7, 1)], &z).unwrap());
}

#[test]
fn unstable_samples_have_zero_invariants() {
    let cat = HuiCatalog::standard();
    for t in cat.templates.iter().filter(|t| t.is_unstable()) {
        let f = cat.sample_uncertified_mod_p(&t.label, 3, 10007).unwrap();
        assert!(dixmier_ohno(&f).unwrap().is_zero(), "{}", t.label);
    }
    let SampledQuartic::Rational(f) = cat.sample(&label("l^4"), 0, SampleField::Rational).unwrap() else {
        panic!("rational sample expected");
    };
    assert!(dixmier_ohno(&f).unwrap().is_zero());
}

#[test]
fn every_label_certifies() {
    let cat = HuiCatalog::standard();
    let labels: Vec<StratumLabel> = cat.labels().cloned().collect();
    for l in &labels {
        cat.sample(l, 11, SampleField::Prime(10007)).unwrap();
    }
}

#[test]
fn specializations_examples() {
    let cat = HuiCatalog::standard();
    assert!(cat.specializations(&label("rA1^6")).unwrap().is_empty());
    let a1 = cat.specializations(&label("A1")).unwrap();
    assert!(a1.contains(&label("A1^2")) && a1.contains(&label("A2")));
    assert!(cat.specializations(&label("A1^3")).unwrap().contains(&label("rA1^4(conic)")));
    assert!(cat.specializations(&label("D4")).is_err());
    let smooth = cat.specializations(&label("Smooth")).unwrap();
    assert_eq!(smooth.len(), 33);
}

#[test]
fn specializations_lower_the_dimension() {
    let cat = HuiCatalog::standard();
    for a in cat.non_unstable_labels() {
        let da = cat.get(&a).unwrap().dimension;
        for b in cat.specializations(&a).unwrap() {
            let t = cat.get(&b).unwrap();
            assert!(t.dimension < da && !t.is_unstable(), "{a} -> {b}");
        }
    }
}

#[test]
fn specialized_samples_satisfy_the_larger_ideal() {
    let hui = HuiCatalog::standard();
    let strata = StrataCatalog::standard();
    let p = 1_000_003;
    for a in ["A1", "A2", "A1^2", "A1^3", "rA1^3"] {
        let id = StratumId::of_label(&label(a)).unwrap();
        for b in hui.specializations(&label(a)).unwrap() {
            for seed in 0..2 {
                let f: Form<Fp> = hui.sample_mod_p(&b, seed, p).unwrap();
                assert!(strata.member(&dixmier_ohno(&f).unwrap(), id).unwrap(), "{a} -> {b}");
            }
        }
    }
}

#[test]
fn catalog_text_round_trip() {
    let cat = HuiCatalog::standard();
    let again = HuiCatalog::parse(&cat.to_text()).unwrap();
    assert_eq!(again.to_text(), cat.to_text());
    assert!(HuiCatalog::parse("[A1]\n").is_err());
}
