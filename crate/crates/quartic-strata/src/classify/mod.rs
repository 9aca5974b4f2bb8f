// SPDX-License-Identifier: MIT OR Apache-2.0
//! Classification of invariant points: the singularity types compatible with
//! a Dixmier-Ohno vector, and the stable reduction types compatible with a
//! quartic over the rationals at a prime.
//!
//! ```
//! use quartic_strata::classify::reduction_candidates;
//! use quartic_strata::forms::Form;
//! use quartic_strata::strata::StrataCatalog;
//!
//! let f = Form::parse("x*y*z*(x+y+z) + 11*z^4").unwrap();
//! let r = reduction_candidates(&f, 11, StrataCatalog::standard()).unwrap();
//! assert_eq!(r.types.names(), ["BRAID"]);
//! ```

mod types;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{ExtRational, Field, Rational};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::huicatalog::{HuiCatalog, StratumLabel};
use crate::invariants::{dixmier_ohno, DOVector};
use crate::strata::{IntegralPoint, StrataCatalog, StratumId};

pub use types::{expand_wildcard, ReductionType, ReductionTypeSet, REDUCTION_TYPE_NAMES, ROW_SIZES};

/// Reduction patterns of each semistable singularity type; alternatives are united.
pub const SINGULARITY_TO_REDUCTION: [(&str, &[&str]); 34] = [
    ("Smooth", &["3"]),
    ("A1", &["2n"]),
    ("A1^2", &["1nn"]),
    ("A1^3", &["0nnn"]),
    ("rA1^3", &["1---0"]),
    ("rA1^4(conic)", &["0----0"]),
    ("rA1^4(cubic)", &["0---0n"]),
    ("rA1^5", &["CAVE"]),
    ("rA1^6", &["BRAID"]),
    ("A4", &["(*)_H"]),
    ("A5", &["(*)_H"]),
    ("A6", &["(*)_H"]),
    ("A1A4", &["(*)_H"]),
    ("A2A4", &["(*)_H"]),
    ("rA7", &["(*)_H"]),
    ("rA1A5(conic)", &["(*)_H"]),
    ("c^2", &["(*)_H"]),
    ("A2", &["2e", "2m"]),
    ("A1A2", &["1ne", "1nm"]),
    ("A1^2A2", &["0nne", "0nnm"]),
    ("rA1^3A2", &["0---0e", "0---0m"]),
    ("A2^2", &["1ee", "1me", "1mm"]),
    ("A1A2^2", &["0nee", "0nme", "0nmm"]),
    ("A2^3", &["0eee", "0mee", "0mme", "0mmm"]),
    ("A3", &["(1=*)_H"]),
    ("A1A3", &["(0n=*)_H", "(*=0n)_H"]),
    ("rA1^2A3(conic)", &["(Z=*)_H"]),
    ("A2A3", &["(*=0e)_H", "(*=0m)_H"]),
    ("rA3^2", &["(1=*)_H", "(0n=*)_H", "(Z=*)_H"]),
    ("rA1A3", &["(1=*)_H", "(*=1)_H"]),
    ("rA1^2A3(cubic)", &["(0n=*)_H", "(*=0n)_H"]),
    ("rA1^3A3", &["(Z=*)_H"]),
    ("rA1A2A3", &["(*=0e)_H", "(*=0m)_H"]),
    ("rA1A3^2", &["(1=*)_H", "(0n=*)_H", "(Z=*)_H"]),
];

/// Candidate reduction types of a semistable singularity type.
pub fn singularity_to_reduction(label: &StratumLabel) -> Result<ReductionTypeSet> {
    let t = HuiCatalog::standard().get(label)?;
    if t.is_unstable() {
        return Err(Error::Input(format!("{label} is GIT-unstable and has no reduction type")));
    }
    let (_, patterns) = SINGULARITY_TO_REDUCTION
        .iter()
        .find(|(l, _)| *l == label.as_str())
        .ok_or_else(|| Error::Internal(format!("{label} is missing from the reduction table")))?;
    let mut out = ReductionTypeSet::default();
    for p in *patterns {
        out.union_with(&expand_wildcard(p)?);
    }
    Ok(out)
}

/// Outcome of the singularity classification of an invariant point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularityCandidates {
    /// The discriminant does not vanish.
    Smooth,
    /// Every invariant vanishes.
    Unstable,
    /// The point lies on a stratum; the labels are the types it may have.
    Singular { stratum: StratumId, labels: Vec<StratumLabel> },
}

impl SingularityCandidates {
    fn on(stratum: StratumId) -> Self {
        SingularityCandidates::Singular {
            stratum,
            labels: stratum.members().iter().map(|m| StratumLabel::new_unchecked(m)).collect(),
        }
    }

    pub fn names(&self) -> Vec<String> {
        match self {
            SingularityCandidates::Smooth => vec!["Smooth".into()],
            SingularityCandidates::Unstable => vec!["Unstable".into()],
            SingularityCandidates::Singular { labels, .. } => labels.iter().map(|l| l.to_string()).collect(),
        }
    }

    pub fn contains(&self, label: &StratumLabel) -> bool {
        match self {
            SingularityCandidates::Smooth => label.is_smooth(),
            SingularityCandidates::Unstable => false,
            SingularityCandidates::Singular { labels, .. } => labels.contains(label),
        }
    }

    /// Union of the reduction types of the candidate labels.
    pub fn reduction_types(&self) -> Result<ReductionTypeSet> {
        let mut out = ReductionTypeSet::default();
        match self {
            SingularityCandidates::Smooth => out.union_with(&singularity_to_reduction(&StratumLabel::new_unchecked("Smooth"))?),
            SingularityCandidates::Unstable => return Err(Error::Unstable),
            SingularityCandidates::Singular { labels, .. } => {
                for l in labels {
                    out.union_with(&singularity_to_reduction(l)?);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SingularityCandidates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

impl Serialize for SingularityCandidates {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.names().serialize(s)
    }
}

/// Runs the stratum tests in the classification order and returns the first
/// stratum accepted by `test`, or `A1` when none is.
fn first_stratum(mut test: impl FnMut(StratumId) -> Result<bool>) -> Result<StratumId> {
    for id in StratumId::ALL {
        if id == StratumId::A1 {
            break;
        }
        if test(id)? {
            return Ok(id);
        }
    }
    Ok(StratumId::A1)
}

/// Singularity types compatible with an invariant point. Over a prime field
/// the answer relies on the classification extending to characteristic
/// above 7.
pub fn singularity_candidates<F: Field>(p: &DOVector<F>, strata: &StrataCatalog) -> Result<SingularityCandidates> {
    let ch = p.coords[0].characteristic();
    if matches!(ch, 2 | 3 | 5 | 7) {
        return Err(Error::UnsupportedCharacteristic(ch));
    }
    if !p.coords[12].is_zero_elem() {
        return Ok(SingularityCandidates::Smooth);
    }
    if p.is_zero() {
        return Ok(SingularityCandidates::Unstable);
    }
    Ok(SingularityCandidates::on(first_stratum(|id| strata.member(p, id))?))
}

/// Result of the reduction classification at one prime.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub prime: u64,
    /// Normalized valuation gap of each stratum ideal, in classification order.
    pub gaps: Vec<(StratumId, ExtRational)>,
    pub singularities: SingularityCandidates,
    pub types: ReductionTypeSet,
    /// The answer depends on the classification holding in characteristic `p`.
    pub conditional: bool,
}

/// Stable reduction candidates of a quartic over the rationals at a prime
/// `p > 7`: the classification order is followed with membership replaced
/// by a positive valuation gap.
pub fn reduction_candidates(f: &Form<Rational>, p: u64, strata: &StrataCatalog) -> Result<ReductionReport> {
    crate::arith::require_supported_prime(p)?;
    let v = dixmier_ohno(f)?;
    reduction_candidates_of(&v, p, strata)
}

/// [`reduction_candidates`] for a precomputed invariant vector.
pub fn reduction_candidates_of(v: &DOVector<Rational>, p: u64, strata: &StrataCatalog) -> Result<ReductionReport> {
    crate::arith::require_supported_prime(p)?;
    if v.is_zero() {
        return Err(Error::Unstable);
    }
    let pt = IntegralPoint::new(v)?;
    let mut gaps = Vec::with_capacity(StratumId::ALL.len());
    for id in StratumId::ALL {
        gaps.push((id, strata.get(id)?.valuation_gap_at_integral(&pt, p)?));
    }
    let gap = |id: StratumId| gaps.iter().find(|(g, _)| *g == id).map(|(_, x)| x.clone()).expect("every stratum");
    let singularities = if gap(StratumId::A1) == ExtRational::Finite(Rational::from_integer(0.into())) {
        SingularityCandidates::Smooth
    } else {
        SingularityCandidates::on(first_stratum(|id| Ok(gap(id).is_positive()))?)
    };
    let types = singularities.reduction_types()?;
    Ok(ReductionReport { prime: p, gaps, singularities, types, conditional: true })
}
