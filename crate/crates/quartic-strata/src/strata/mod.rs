// SPDX-License-Identifier: MIT OR Apache-2.0
//! Singularity strata in the weighted projective space of Dixmier-Ohno
//! invariants. Each stratum carries an ideal used for membership tests and
//! for p-adic valuation gaps; strata of dimension 0 also carry exact points.
//!
//! ```
//! use quartic_strata::forms::Form;
//! use quartic_strata::invariants::dixmier_ohno;
//! use quartic_strata::strata::{StrataCatalog, StratumId};
//!
//! let cat = StrataCatalog::standard();
//! let p = dixmier_ohno(&Form::parse("x*y*z*(x+y+z)").unwrap()).unwrap();
//! assert!(cat.member(&p, StratumId::RA1p6).unwrap());
//! assert!(!cat.member(&p, StratumId::A2p3).unwrap());
//! ```

mod modmat;
mod poly;
mod reconstruct;
mod specialize;

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    rat, val_int, wp_equal, ExtRational, Field, Rational, WeightedPoint, WEIGHTS,
};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::huicatalog::StratumLabel;
use crate::invariants::{anchors, dixmier_ohno, DOVector};

pub use modmat::{EchelonBasis, ModRing};
pub use specialize::{derive_specializations, SPECIALIZATION_DEGREE, SPECIALIZATION_SAMPLES};
pub use poly::{monomials_of_degree, InvPoly, InvariantMonomial};
pub use reconstruct::{
    default_sample_count, modular_profile, reconstruct_ideal, DegreeReport, LabelRelations, Reconstruction, SyzygyRule,
    RECONSTRUCTION_PRIME_START,
};

/// The ideals tested by the classification algorithm, in test order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StratumId {
    RA1p6,
    A2p3,
    A4Group,
    RA1A3Group,
    RA1p5,
    RA1p3A2,
    A1A2p2,
    A3Group,
    A1p2A2,
    A2p2,
    RA1p4a,
    RA1p4b,
    A1p3,
    A1A2,
    RA1p3,
    A2,
    A1p2,
    A1,
}

impl StratumId {
    /// Every stratum, in the order the classification algorithm tests them.
    pub const ALL: [StratumId; 18] = [
        StratumId::RA1p6,
        StratumId::A2p3,
        StratumId::A4Group,
        StratumId::RA1A3Group,
        StratumId::RA1p5,
        StratumId::RA1p3A2,
        StratumId::A1A2p2,
        StratumId::A3Group,
        StratumId::A1p2A2,
        StratumId::A2p2,
        StratumId::RA1p4a,
        StratumId::RA1p4b,
        StratumId::A1p3,
        StratumId::A1A2,
        StratumId::RA1p3,
        StratumId::A2,
        StratumId::A1p2,
        StratumId::A1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StratumId::RA1p6 => "rA1p6",
            StratumId::A2p3 => "A2p3",
            StratumId::A4Group => "A4-group",
            StratumId::RA1A3Group => "rA1A3-group",
            StratumId::RA1p5 => "rA1p5",
            StratumId::RA1p3A2 => "rA1p3A2",
            StratumId::A1A2p2 => "A1A2p2",
            StratumId::A3Group => "A3-group",
            StratumId::A1p2A2 => "A1p2A2",
            StratumId::A2p2 => "A2p2",
            StratumId::RA1p4a => "rA1p4a",
            StratumId::RA1p4b => "rA1p4b",
            StratumId::A1p3 => "A1p3",
            StratumId::A1A2 => "A1A2",
            StratumId::RA1p3 => "rA1p3",
            StratumId::A2 => "A2",
            StratumId::A1p2 => "A1p2",
            StratumId::A1 => "A1",
        }
    }

    /// Dimension of the stratum in the invariant space.
    pub fn dimension(self) -> usize {
        match self {
            StratumId::RA1p6 | StratumId::A2p3 | StratumId::A4Group | StratumId::RA1A3Group => 0,
            StratumId::RA1p5 | StratumId::RA1p3A2 | StratumId::A1A2p2 | StratumId::A3Group => 1,
            StratumId::A1p2A2 | StratumId::A2p2 | StratumId::RA1p4a | StratumId::RA1p4b => 2,
            StratumId::A1p3 | StratumId::A1A2 | StratumId::RA1p3 => 3,
            StratumId::A2 | StratumId::A1p2 => 4,
            StratumId::A1 => 5,
        }
    }

    pub fn is_point(self) -> bool {
        self.dimension() == 0
    }

    /// Singularity types returned when a point lies on this stratum.
    pub fn members(self) -> &'static [&'static str] {
        match self {
            StratumId::RA1p6 => &["rA1^6"],
            StratumId::A2p3 => &["A2^3"],
            StratumId::A4Group => &["A4", "A5", "A6", "A1A4", "A2A4", "rA7", "rA1A5(conic)", "c^2"],
            StratumId::RA1A3Group => &["rA1A3", "rA1^2A3(cubic)", "rA1A2A3", "rA1A3^2", "rA1^3A3"],
            StratumId::RA1p5 => &["rA1^5"],
            StratumId::RA1p3A2 => &["rA1^3A2"],
            StratumId::A1A2p2 => &["A1A2^2"],
            StratumId::A3Group => &["A3", "A1A3", "A2A3", "rA3^2", "rA1^2A3(conic)"],
            StratumId::A1p2A2 => &["A1^2A2"],
            StratumId::A2p2 => &["A2^2"],
            StratumId::RA1p4a => &["rA1^4(cubic)"],
            StratumId::RA1p4b => &["rA1^4(conic)"],
            StratumId::A1p3 => &["A1^3"],
            StratumId::A1A2 => &["A1A2"],
            StratumId::RA1p3 => &["rA1^3"],
            StratumId::A2 => &["A2"],
            StratumId::A1p2 => &["A1^2"],
            StratumId::A1 => &["A1"],
        }
    }

    /// Catalog label whose samples fill the stratum.
    pub fn sample_label(self) -> StratumLabel {
        StratumLabel::new_unchecked(self.members()[0])
    }

    /// Degree profile of the ideal as stated in the literature, if any.
    pub fn expected_profile(self) -> Option<Vec<u32>> {
        let counts: &[(u32, usize)] = match self {
            StratumId::RA1p5 => &[(6, 1), (9, 1), (12, 1), (15, 2), (18, 2), (21, 3), (27, 2), (36, 1)],
            StratumId::RA1p3A2 => &[(6, 1), (9, 1), (12, 2), (15, 2), (18, 2), (21, 2), (27, 1)],
            StratumId::A1A2p2 => &[(12, 1), (15, 2), (18, 5), (21, 4), (24, 1), (27, 1)],
            StratumId::A3Group => &[(9, 1), (12, 2), (15, 2), (18, 3), (21, 2), (27, 1)],
            StratumId::A1p2A2 => &[(12, 1), (15, 1), (18, 2), (21, 2), (24, 2), (27, 3), (30, 2)],
            StratumId::A2p2 => &[(12, 1), (15, 1), (18, 3), (21, 3), (24, 2), (27, 2), (30, 1)],
            StratumId::RA1p4a => &[(6, 1), (9, 1), (12, 1), (15, 2), (18, 1), (21, 2), (27, 1), (36, 1)],
            StratumId::RA1p4b => {
                &[(15, 1), (18, 4), (21, 5), (24, 4), (27, 4), (30, 2), (33, 1), (36, 1)]
            }
            StratumId::A1p3 => &[(24, 2), (27, 5), (30, 7), (33, 6), (36, 5), (39, 1)],
            StratumId::A1A2 => &[(12, 1), (15, 1), (18, 2), (21, 2), (24, 1), (27, 1), (45, 1)],
            StratumId::RA1p3 => &[(6, 1), (9, 1), (12, 1), (15, 2), (18, 1), (21, 2), (27, 1)],
            StratumId::A2 => &[(12, 1), (15, 1), (18, 2), (21, 2), (24, 1), (27, 1)],
            StratumId::A1p2 => &[(30, 1), (33, 1), (36, 2), (39, 1), (42, 1)],
            StratumId::A1 => &[(27, 1)],
            _ => return None,
        };
        Some(counts.iter().flat_map(|&(d, n)| std::iter::repeat(d).take(n)).collect())
    }

    /// Strata whose literature profile is reproduced within the desk-scale budget.
    pub fn is_core_profile(self) -> bool {
        !matches!(self, StratumId::A1p3 | StratumId::A1p2 | StratumId::A1) && !self.is_point()
    }

    /// Largest degree needed to reach the literature profile.
    pub fn degree_budget(self) -> u32 {
        self.expected_profile().and_then(|p| p.last().copied()).unwrap_or(27)
    }

    /// Stratum of the classification algorithm that returns `label`.
    pub fn of_label(label: &StratumLabel) -> Option<StratumId> {
        StratumId::ALL.into_iter().find(|s| s.members().contains(&label.as_str()))
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StratumId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        StratumId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(t) || id.name().replace('-', "") .eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Input(format!("unknown stratum {s:?}")))
    }
}

/// Exact invariant point of a dimension-0 stratum, normalized with `I3 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DimZeroPoint {
    pub id: StratumId,
    pub coords: Vec<Rational>,
}

impl DimZeroPoint {
    pub fn as_point(&self) -> DOVector<Rational> {
        WeightedPoint::new(self.coords.clone())
    }
}

/// The printed tuple of a dimension-0 stratum.
pub fn dim_zero_point(id: StratumId) -> Result<DimZeroPoint> {
    let coords = match id {
        StratumId::RA1p6 => anchors::ra1p6(),
        StratumId::A2p3 => anchors::a2p3(),
        StratumId::A4Group => anchors::a4_group(),
        StratumId::RA1A3Group => anchors::ra1a3_group_printed(),
        _ => return Err(Error::Input(format!("{id} is not a dimension-0 stratum"))),
    };
    Ok(DimZeroPoint { id, coords })
}

/// The point attained by the normal forms of a dimension-0 stratum (differs
/// from [`dim_zero_point`] only by the sign of `I12` for the `rA1A3` group).
pub fn attained_point(id: StratumId) -> Result<DimZeroPoint> {
    let mut p = dim_zero_point(id)?;
    if id == StratumId::RA1A3Group {
        p.coords = anchors::ra1a3_group();
    }
    Ok(p)
}

/// Generators `I_w - c_w I3^{w/3}` and `I27` of the ideal of a point with `I3 = 1`.
pub fn point_generators(point: &DimZeroPoint) -> Vec<InvPoly> {
    let mut gens = Vec::new();
    for i in 1..13 {
        let mut i3_power = InvariantMonomial::one();
        i3_power.0[0] = WEIGHTS[i] / 3;
        let mut terms = vec![(rat(1, 1), InvariantMonomial::var(i))];
        if !point.coords[i].is_zero() {
            terms.push((-point.coords[i].clone(), i3_power));
        }
        gens.push(InvPoly::new(terms).expect("nonzero generator").primitive());
    }
    gens
}

/// Largest exponent of a single invariant in any catalog generator.
const MAX_EXPONENT: usize = 16;

/// An invariant point rescaled to integer coordinates, with cached powers for
/// fast exact evaluation of invariant polynomials.
#[derive(Clone, Debug)]
pub struct IntegralPoint {
    powers: Vec<Vec<BigInt>>,
}

impl IntegralPoint {
    /// Scales by the least common denominator, which changes every
    /// normalized valuation by zero.
    pub fn new(p_vec: &DOVector<Rational>) -> Result<Self> {
        if p_vec.is_zero() {
            return Err(Error::Unstable);
        }
        let lambda = crate::arith::field::lcm_of_denominators(&p_vec.coords);
        let powers = p_vec
            .coords
            .iter()
            .zip(WEIGHTS)
            .map(|(c, w)| {
                let x = c.numer() * (lambda.pow(w) / c.denom());
                let mut v = Vec::with_capacity(MAX_EXPONENT + 1);
                v.push(BigInt::one());
                for e in 1..=MAX_EXPONENT {
                    let next = &v[e - 1] * &x;
                    v.push(next);
                }
                v
            })
            .collect();
        Ok(IntegralPoint { powers })
    }

    pub fn coords(&self) -> impl Iterator<Item = &BigInt> {
        self.powers.iter().map(|v| &v[1])
    }

    /// `min_w v_p(I_w)/w`.
    pub fn min_scaled_valuation(&self, p: u64) -> Rational {
        self.coords()
            .zip(WEIGHTS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, w)| rat(val_int(c, p), w as i64))
            .min()
            .expect("nonzero point")
    }

    /// `(D·g(P), D)` with `D` the common denominator of the coefficients of `g`.
    pub fn eval(&self, g: &InvPoly) -> (BigInt, BigInt) {
        let den = crate::arith::field::lcm_of_denominators(g.terms.iter().map(|(c, _)| c));
        let mut acc = BigInt::zero();
        for (c, m) in &g.terms {
            let mut t = c.numer() * (&den / c.denom());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    match self.powers[i].get(e as usize) {
                        Some(pw) => t *= pw,
                        None => t *= self.powers[i][1].pow(e),
                    }
                }
            }
            acc += t;
        }
        (acc, den)
    }
}

/// Generators of one stratum ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct StratumIdeal {
    pub id: StratumId,
    pub generators: Vec<InvPoly>,
}

impl StratumIdeal {
    /// Sorted multiset of generator degrees.
    pub fn profile(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.generators.iter().map(|g| g.degree()).collect();
        v.sort();
        v
    }

    /// Whether every generator vanishes at the point.
    pub fn vanishes_at<F: Field>(&self, p: &DOVector<F>) -> Result<bool> {
        for g in &self.generators {
            if !g.eval(&p.coords)?.is_zero_elem() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `v_p(g(P)) - deg(g)·m` for each generator `g`, where
    /// `m = min_w v_p(I_w(P))/w`: the valuation of `g` at the normalized point.
    pub fn generator_valuations(&self, p_vec: &DOVector<Rational>, p: u64) -> Result<Vec<ExtRational>> {
        self.generator_valuations_at(&IntegralPoint::new(p_vec)?, p)
    }

    /// [`Self::generator_valuations`] at a point already scaled to integers.
    pub fn generator_valuations_at(&self, pt: &IntegralPoint, p: u64) -> Result<Vec<ExtRational>> {
        crate::arith::require_supported_prime(p)?;
        let m = pt.min_scaled_valuation(p);
        Ok(self
            .generators
            .iter()
            .map(|g| {
                let (value, den) = pt.eval(g);
                if value.is_zero() {
                    ExtRational::Infinity
                } else {
                    let v = val_int(&value, p) - val_int(&den, p);
                    ExtRational::Finite(rat(v, 1) - m.clone() * rat(g.degree() as i64, 1))
                }
            })
            .collect())
    }

    /// Minimum of [`Self::generator_valuations_at`]; `+∞` when every generator vanishes.
    pub fn valuation_gap_at_integral(&self, pt: &IntegralPoint, p: u64) -> Result<ExtRational> {
        Ok(self
            .generator_valuations_at(pt, p)?
            .into_iter()
            .min()
            .unwrap_or(ExtRational::Infinity))
    }

    /// Minimum of [`Self::generator_valuations`]; `+∞` when every generator vanishes.
    pub fn valuation_gap_at(&self, p_vec: &DOVector<Rational>, p: u64) -> Result<ExtRational> {
        Ok(self
            .generator_valuations(p_vec, p)?
            .into_iter()
            .min()
            .unwrap_or(ExtRational::Infinity))
    }
}

/// Catalog of all stratum ideals, immutable after loading.
#[derive(Clone, Debug)]
pub struct StrataCatalog {
    pub version: u32,
    pub seed: u64,
    pub ideals: Vec<StratumIdeal>,
}

/// Shipped strata catalog text.
pub const STANDARD_STRATA_CATALOG: &str = include_str!("../../data/strata_catalog.txt");

/// Current version of the strata catalog format.
pub const STRATA_CATALOG_VERSION: u32 = 1;

impl StrataCatalog {
    pub fn standard() -> &'static StrataCatalog {
        static CAT: OnceLock<StrataCatalog> = OnceLock::new();
        CAT.get_or_init(|| StrataCatalog::parse(STANDARD_STRATA_CATALOG).expect("shipped strata catalog parses"))
    }

    pub fn load(path: &Path) -> Result<StrataCatalog> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        StrataCatalog::parse(&text)
    }

    /// Point ideals only; reconstructed ideals are added by [`Self::insert`].
    pub fn points_only(seed: u64) -> StrataCatalog {
        let ideals = StratumId::ALL
            .into_iter()
            .filter(|id| id.is_point())
            .map(|id| StratumIdeal {
                id,
                generators: point_generators(&attained_point(id).expect("point stratum")),
            })
            .collect();
        StrataCatalog { version: STRATA_CATALOG_VERSION, seed, ideals }
    }

    /// Point ideals plus every reconstructed ideal up to its degree budget.
    pub fn build(seed: u64, rule: SyzygyRule) -> Result<(StrataCatalog, Vec<Reconstruction>)> {
        let mut cat = StrataCatalog::points_only(seed);
        let mut reports = Vec::new();
        for id in StratumId::ALL.into_iter().filter(|id| !id.is_point()) {
            let b = id.degree_budget();
            let r = reconstruct_ideal(id, b, default_sample_count(b), seed, rule)?;
            cat.insert(r.ideal.clone());
            reports.push(r);
        }
        Ok((cat, reports))
    }

    pub fn insert(&mut self, ideal: StratumIdeal) {
        self.ideals.retain(|i| i.id != ideal.id);
        self.ideals.push(ideal);
        self.ideals.sort_by_key(|i| i.id);
    }

    pub fn parse(text: &str) -> Result<StrataCatalog> {
        let mut version = None;
        let mut seed = 0;
        let mut ideals: Vec<StratumIdeal> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let id: StratumId = name.parse()?;
                if ideals.iter().any(|i| i.id == id) {
                    return Err(Error::Input(format!("strata catalog: {id} listed twice")));
                }
                ideals.push(StratumIdeal { id, generators: Vec::new() });
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("strata catalog line {}: expected key = value", lineno + 1)))?;
            let (k, v) = (k.trim(), v.trim());
            match (k, ideals.last_mut()) {
                ("version", None) => {
                    version = Some(v.parse().map_err(|_| Error::Input("bad strata catalog version".into()))?)
                }
                ("seed", None) => seed = v.parse().map_err(|_| Error::Input("bad strata catalog seed".into()))?,
                ("gen", Some(ideal)) => ideal.generators.push(
                    InvPoly::decode(v)
                        .map_err(|e| Error::Input(format!("strata catalog [{}] line {}: {e}", ideal.id, lineno + 1)))?,
                ),
                ("profile", Some(_)) => {}
                _ => {
                    return Err(Error::Input(format!(
                        "strata catalog line {}: unexpected field {k}",
                        lineno + 1
                    )))
                }
            }
        }
        let version = version.ok_or_else(|| Error::Input("strata catalog has no version".into()))?;
        if version != STRATA_CATALOG_VERSION {
            return Err(Error::Input(format!("unsupported strata catalog version {version}")));
        }
        for ideal in &ideals {
            if ideal.generators.is_empty() {
                return Err(Error::Input(format!("strata catalog [{}] has no generators", ideal.id)));
            }
        }
        ideals.sort_by_key(|i| i.id);
        Ok(StrataCatalog { version, seed, ideals })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# Stratum ideals in the Dixmier-Ohno invariants (I3 I6 I9 J9 I12 J12 I15 J15 I18 J18 I21 J21 I27).\n");
        out.push_str("# Each generator is a list of `coefficient [exponents]` terms separated by ` ; `.\n");
        out.push_str("# Regenerate with `quartic strata build`.\n");
        out.push_str(&format!("version = {}\nseed = {}\n\n", self.version, self.seed));
        for ideal in &self.ideals {
            out.push_str(&format!("[{}]\n", ideal.id));
            let prof: Vec<String> = ideal.profile().iter().map(|d| d.to_string()).collect();
            out.push_str(&format!("profile = {}\n", prof.join(" ")));
            for g in &ideal.generators {
                out.push_str(&format!("gen = {}\n", g.encode()));
            }
            out.push('\n');
        }
        out
    }

    pub fn get(&self, id: StratumId) -> Result<&StratumIdeal> {
        self.ideals
            .iter()
            .find(|i| i.id == id)
            .ok_or_else(|| Error::Input(format!("stratum {id} is missing from the strata catalog")))
    }

    /// Membership of an invariant point in a stratum: weighted-projective
    /// equality for points, vanishing of all generators otherwise.
    pub fn member<F: Field>(&self, p: &DOVector<F>, id: StratumId) -> Result<bool> {
        if p.is_zero() {
            return Err(Error::Unstable);
        }
        if id.is_point() {
            let z = p.coords[0].zero_like();
            let target = attained_point(id)?;
            let coords: Option<Vec<F>> = target.coords.iter().map(|c| z.rational_like(c)).collect();
            let coords = coords.ok_or_else(|| Error::Input("point not defined in this characteristic".into()))?;
            return wp_equal(p, &WeightedPoint::new(coords));
        }
        self.get(id)?.vanishes_at(p)
    }

    /// Normalized valuation gap of a rational quartic along a stratum.
    pub fn valuation_gap(&self, f: &Form<Rational>, p: u64, id: StratumId) -> Result<ExtRational> {
        crate::arith::require_supported_prime(p)?;
        let v = dixmier_ohno(f)?;
        self.get(id)?.valuation_gap_at(&v, p)
    }
}
