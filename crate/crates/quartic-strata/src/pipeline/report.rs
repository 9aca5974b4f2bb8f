// SPDX-License-Identifier: MIT OR Apache-2.0
//! Bad primes of a curve and its classification report.

use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::factor::{factor, Factorization};
use super::records::CurveRecord;
use crate::classify::{reduction_candidates_of, ReductionReport};
use crate::invariants::{discriminant, dixmier_ohno};
use crate::strata::StrataCatalog;
use crate::{Error, Result};

/// Primes dividing the discriminant `2^40 · I27` of a record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BadPrimes {
    #[serde(serialize_with = "ser_display")]
    pub discriminant: BigInt,
    pub factorization: Factorization,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl BadPrimes {
    /// Primes above 7 with their multiplicities.
    pub fn supported(&self) -> Vec<(u64, u32)> {
        self.factorization.small_primes().filter(|(p, _)| *p > 7).collect()
    }

    /// Primes 2, 3, 5 and 7 dividing the discriminant.
    pub fn unsupported(&self) -> Vec<u64> {
        self.factorization.small_primes().filter(|(p, _)| *p <= 7).map(|(p, _)| p).collect()
    }

    /// Prime factors too large for a machine word.
    pub fn oversized(&self) -> Vec<BigUint> {
        self.factorization.primes.iter().filter(|(p, _)| p.to_u64().is_none()).map(|(p, _)| p.clone()).collect()
    }
}

/// Factors the discriminant of the primitive integral model of `rec`.
pub fn bad_primes(rec: &CurveRecord) -> Result<BadPrimes> {
    let f = rec.form()?;
    let d = discriminant(&f)?;
    if d.is_zero() {
        return Err(Error::SingularCurve(format!("record {}: the discriminant vanishes", rec.id)));
    }
    let n = (d.numer() * d.denom()).magnitude().clone();
    Ok(BadPrimes { discriminant: d.numer() * d.denom(), factorization: factor(&n) })
}

/// Classification at one bad prime.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeEntry {
    pub multiplicity: u32,
    #[serde(flatten)]
    pub report: ReductionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

/// Every supported bad prime of one curve with its reduction candidates.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub id: String,
    pub bad_primes: BadPrimes,
    pub unsupported_primes: Vec<u64>,
    pub entries: Vec<PrimeEntry>,
}

/// Classifies `rec` at every supported prime of bad reduction. With
/// `timings` each entry records its elapsed time.
pub fn classify_record(rec: &CurveRecord, strata: &StrataCatalog, timings: bool) -> Result<ClassificationReport> {
    let bad = bad_primes(rec)?;
    let v = dixmier_ohno(&rec.form()?)?;
    let mut entries = Vec::new();
    for (p, multiplicity) in bad.supported() {
        let start = Instant::now();
        let report = reduction_candidates_of(&v, p, strata)?;
        let elapsed_ms = timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        entries.push(PrimeEntry { multiplicity, report, elapsed_ms });
    }
    Ok(ClassificationReport { id: rec.id.clone(), unsupported_primes: bad.unsupported(), bad_primes: bad, entries })
}

impl ClassificationReport {
    /// Human-readable rendering, one line per prime.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: discriminant {}", self.id, self.bad_primes.discriminant);
        if !self.unsupported_primes.is_empty() {
            let ps: Vec<String> = self.unsupported_primes.iter().map(|p| p.to_string()).collect();
            let _ = write!(out, "; skipped {} (unsupported: p = 2, 3, 5, 7)", ps.join(", "));
        }
        for p in self.bad_primes.oversized() {
            let _ = write!(out, "; prime factor {p} too large to classify");
        }
        if let Some(r) = &self.bad_primes.factorization.remainder {
            let _ = write!(out, "; unfactored cofactor {r}");
        }
        if self.entries.is_empty() {
            out.push_str("\n  no supported bad primes");
        }
        for e in &self.entries {
            let r = &e.report;
            let _ = write!(out, "\n  p = {} (multiplicity {}): singularities {} reduction {}", r.prime, e.multiplicity, r.singularities, r.types);
            let positive: Vec<String> =
                r.gaps.iter().filter(|(_, g)| g.is_positive()).map(|(id, g)| format!("{id}={g}")).collect();
            if !positive.is_empty() {
                let _ = write!(out, " gaps [{}]", positive.join(" "));
            }
            if let Some(ms) = e.elapsed_ms {
                let _ = write!(out, " ({ms:.1} ms)");
            }
        }
        out
    }
}
