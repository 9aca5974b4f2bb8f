// SPDX-License-Identifier: MIT OR Apache-2.0
use quartic_strata::arith::{rat, ExtRational, Fp, Rational};
use quartic_strata::forms::Form;
use quartic_strata::huicatalog::{HuiCatalog, StratumLabel};
use quartic_strata::invariants::{anchors, dixmier_ohno};
use quartic_strata::strata::{
    attained_point, default_sample_count, dim_zero_point, modular_profile, point_generators, reconstruct_ideal,
    InvPoly, InvariantMonomial, StrataCatalog, StratumId, SyzygyRule,
};

const P: u64 = 1_000_003;

fn label(s: &str) -> StratumLabel {
    s.parse().unwrap()
}

fn sample_point(l: &str, seed: u64) -> quartic_strata::invariants::DOVector<Fp> {
    let f = HuiCatalog::standard().sample_mod_p(&label(l), seed, P).unwrap();
    dixmier_ohno(&f).unwrap()
}

#[test]
fn shipped_catalog_covers_every_stratum() {
    let cat = StrataCatalog::standard();
    for id in StratumId::ALL {
        let ideal = cat.get(id).unwrap();
        assert!(!ideal.generators.is_empty(), "{id}");
        for g in &ideal.generators {
            let d = g.degree();
            assert!(g.terms.iter().all(|(_, m)| m.degree() == d), "{id}: {g}");
        }
    }
}

#[test]
fn shipped_profiles() {
    let cat = StrataCatalog::standard();
    let prof = |id| cat.get(id).unwrap().profile();
    assert_eq!(prof(StratumId::RA1p5), vec![6, 9, 12, 15, 15, 18, 18, 21, 21, 21, 27, 27, 36]);
    assert_eq!(prof(StratumId::RA1p3), vec![6, 9, 12, 15, 15, 18, 21, 21, 27]);
    assert_eq!(prof(StratumId::A2), vec![12, 15, 18, 18, 21, 21, 24, 27]);
    for id in StratumId::ALL.into_iter().filter(|id| id.is_core_profile() && *id != StratumId::RA1p4b) {
        assert_eq!(Some(prof(id)), id.expected_profile(), "{id}");
    }
    assert_eq!(Some(prof(StratumId::A1p3)), StratumId::A1p3.expected_profile());
}

#[test]
fn a1_ideal_is_the_discriminant() {
    let ideal = StrataCatalog::standard().get(StratumId::A1).unwrap();
    assert_eq!(ideal.generators.len(), 1);
    assert_eq!(ideal.generators[0].terms, vec![(rat(1, 1), InvariantMonomial::var(12))]);
}

#[test]
fn catalog_text_round_trip() {
    let cat = StrataCatalog::standard();
    let again = StrataCatalog::parse(&cat.to_text()).unwrap();
    assert_eq!(again.ideals, cat.ideals);
    assert!(StrataCatalog::parse("version = 1\n[A1]\n").is_err());
    assert!(StrataCatalog::parse("version = 9\n").is_err());
    assert!(StrataCatalog::parse("version = 1\n[Z9]\ngen = 1 [1 0 0 0 0 0 0 0 0 0 0 0 0]\n").is_err());
}

#[test]
fn dimension_zero_points() {
    assert_eq!(dim_zero_point(StratumId::RA1p6).unwrap().coords, anchors::ra1p6());
    assert_eq!(dim_zero_point(StratumId::A2p3).unwrap().coords, anchors::a2p3());
    assert_eq!(dim_zero_point(StratumId::A4Group).unwrap().coords, anchors::a4_group());
    let printed = dim_zero_point(StratumId::RA1A3Group).unwrap();
    let attained = attained_point(StratumId::RA1A3Group).unwrap();
    for i in 0..13 {
        if i == 4 {
            assert_eq!(printed.coords[i], -attained.coords[i].clone());
        } else {
            assert_eq!(printed.coords[i], attained.coords[i]);
        }
    }
    assert!(dim_zero_point(StratumId::A2).is_err());
    for id in StratumId::ALL.into_iter().filter(|id| id.is_point()) {
        let pt = attained_point(id).unwrap();
        let gens = point_generators(&pt);
        assert_eq!(gens.len(), 12);
        for g in &gens {
            assert_eq!(g.eval(&pt.coords).unwrap(), Rational::from_integer(0.into()), "{id}: {g}");
        }
    }
}

#[test]
fn point_generators_of_ra1p6() {
    let gens = point_generators(&attained_point(StratumId::RA1p6).unwrap());
    assert_eq!(gens[0].to_string(), "144*I6 + I3^2");
    assert_eq!(gens[11].to_string(), "I27");
}

#[test]
fn members_of_point_strata_land_on_their_point() {
    let cat = StrataCatalog::standard();
    for id in StratumId::ALL.into_iter().filter(|id| id.is_point()) {
        for m in id.members() {
            for seed in 0..3 {
                let v = sample_point(m, seed);
                assert!(cat.member(&v, id).unwrap(), "{m} not on {id}");
            }
        }
    }
}

#[test]
fn rational_curve_sits_on_its_point() {
    let cat = StrataCatalog::standard();
    let v = dixmier_ohno(&Form::parse("x*y*z*(x+y+z)").unwrap()).unwrap();
    assert!(cat.member(&v, StratumId::RA1p6).unwrap());
    for id in StratumId::ALL.into_iter().filter(|id| id.is_point() && *id != StratumId::RA1p6) {
        assert!(!cat.member(&v, id).unwrap(), "{id}");
    }
}

#[test]
fn samples_lie_on_their_strata() {
    let cat = StrataCatalog::standard();
    for id in StratumId::ALL.into_iter().filter(|id| !id.is_point()) {
        for m in id.members() {
            for seed in 10..13 {
                assert!(cat.member(&sample_point(m, seed), id).unwrap(), "{m} sample {seed} not on {id}");
            }
        }
    }
}

#[test]
fn smooth_samples_avoid_every_stratum() {
    let cat = StrataCatalog::standard();
    for seed in 0..5 {
        let v = sample_point("Smooth", seed);
        for id in StratumId::ALL {
            assert!(!cat.member(&v, id).unwrap(), "smooth sample {seed} on {id}");
        }
    }
}

#[test]
fn cuspidal_locus_lies_in_the_binodal_locus() {
    let cat = StrataCatalog::standard();
    for seed in 0..5 {
        let v = sample_point("A2", seed);
        assert!(cat.member(&v, StratumId::A1p2).unwrap());
        assert!(cat.member(&v, StratumId::A1).unwrap());
        assert!(cat.member(&v, StratumId::A2).unwrap());
        let w = sample_point("A1^2", seed);
        assert!(!cat.member(&w, StratumId::A2).unwrap());
        assert!(cat.member(&w, StratumId::A1p2).unwrap());
    }
}

#[test]
fn braid_example_valuation_profile() {
    let cat = StrataCatalog::standard();
    let f: Form<Rational> = Form::parse("x*y*z*(x+y+z) + 11*z^4").unwrap();
    let v = dixmier_ohno(&f).unwrap();
    let ideal = cat.get(StratumId::RA1p6).unwrap();
    let inf = ExtRational::Infinity;
    let one = ExtRational::Finite(rat(1, 1));
    let expected = vec![
        inf.clone(),
        one.clone(),
        one.clone(),
        inf.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        inf,
    ];
    assert_eq!(ideal.generator_valuations(&v, 11).unwrap(), expected);
    assert_eq!(cat.valuation_gap(&f, 11, StratumId::RA1p6).unwrap(), one);
}

#[test]
fn valuation_gap_rejects_small_primes() {
    let cat = StrataCatalog::standard();
    let f: Form<Rational> = Form::parse("x^4 + y^4 + z^4").unwrap();
    assert!(cat.valuation_gap(&f, 3, StratumId::A1).is_err());
    assert!(cat.valuation_gap(&f, 9, StratumId::A1).is_err());
}

#[test]
fn small_reconstruction_is_exact_and_verified() {
    let b = StratumId::RA1p3.degree_budget();
    let r = reconstruct_ideal(StratumId::RA1p3, b, default_sample_count(b), 7, SyzygyRule::Quotient).unwrap();
    assert_eq!(r.profile_matches(), Some(true));
    let shipped = StrataCatalog::standard().get(StratumId::RA1p3).unwrap();
    assert_eq!(r.ideal.generators, shipped.generators);
}

#[test]
fn reconstruction_rejects_bad_requests() {
    assert!(reconstruct_ideal(StratumId::RA1p6, 27, 1000, 1, SyzygyRule::Quotient).is_err());
    assert!(reconstruct_ideal(StratumId::A2, 27, 10, 1, SyzygyRule::Quotient).is_err());
    assert!(modular_profile(StratumId::A2, 2, 1000, 1, SyzygyRule::Quotient).is_err());
}

#[test]
fn syzygy_rules_differ_only_by_generic_relations() {
    let b = 30;
    let n = default_sample_count(b);
    let q = modular_profile(StratumId::RA1p4b, b, n, 1, SyzygyRule::Quotient).unwrap();
    let k = modular_profile(StratumId::RA1p4b, b, n, 1, SyzygyRule::Keep).unwrap();
    let at30 = |r: &[quartic_strata::strata::DegreeReport]| r.iter().find(|d| d.degree == 30).unwrap().clone();
    let (q30, k30) = (at30(&q), at30(&k));
    assert_eq!(q30.generic_relations, 1);
    assert_eq!(q30.new_generators, 1);
    assert_eq!(k30.new_generators, 2);
}

#[test]
fn stratum_names_parse() {
    for id in StratumId::ALL {
        assert_eq!(id.name().parse::<StratumId>().unwrap(), id);
    }
    assert_eq!("A4group".parse::<StratumId>().unwrap(), StratumId::A4Group);
    assert!("A9".parse::<StratumId>().is_err());
    assert_eq!(StratumId::of_label(&label("A1A4")), Some(StratumId::A4Group));
    assert_eq!(StratumId::of_label(&label("Smooth")), None);
}

#[test]
fn generator_encoding_round_trip() {
    for ideal in &StrataCatalog::standard().ideals {
        for g in ideal.generators.iter().take(2) {
            assert_eq!(&InvPoly::decode(&g.encode()).unwrap(), g);
        }
    }
}
