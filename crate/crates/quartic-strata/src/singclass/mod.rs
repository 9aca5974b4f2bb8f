// SPDX-License-Identifier: MIT OR Apache-2.0
//! Independent singularity analysis of plane quartics. Each singular point
//! gets a Milnor number and an ADE type; the curve gets a GIT status.
//!
//! ```
//! use quartic_strata::forms::Form;
//! use quartic_strata::singclass::quartic_singularity_type;
//!
//! let f = Form::parse("x*y*z*(x+y+z)").unwrap();
//! let t = quartic_singularity_type(&f, 1).unwrap();
//! assert_eq!(t.name(), "rA1^6");
//! ```

pub mod components;
pub mod local;
pub mod locus;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{prev_prime, Fp, Rational};
use crate::error::{Error, Result};
use crate::forms::{localize, Form};
use crate::invariants::dixmier_ohno;

pub use components::{component_partition, non_reduced_shape, NonIsolatedLabel};
pub use local::{ade_classify, milnor_number, AdeFamily, AdeLabel, Milnor, MILNOR_TRUNCATION, MILNOR_WINDOW};
pub use locus::{singular_points, SingularLocus, SingularPoint};

/// GIT stability of a quartic under the action of `SL_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GitStatus {
    Stable,
    Semistable,
    Unstable,
}

impl fmt::Display for GitStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GitStatus::Stable => "stable",
            GitStatus::Semistable => "semistable",
            GitStatus::Unstable => "unstable",
        })
    }
}

impl FromStr for GitStatus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stable" => Ok(GitStatus::Stable),
            "semistable" => Ok(GitStatus::Semistable),
            "unstable" => Ok(GitStatus::Unstable),
            _ => Err(Error::Input(format!("unknown GIT status {s:?}"))),
        }
    }
}

/// Reducible isolated types that occur both as two conics and as a cubic
/// with a line, distinguished by a `(conic)` or `(cubic)` suffix.
const SPLIT_TYPES: [&str; 3] = ["rA1A5", "rA1^2A3", "rA1^4"];

/// Global singularity type of a quartic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityType {
    /// Singular points over the algebraic closure, sorted.
    pub points: Vec<AdeLabel>,
    /// Whether the curve has more than one component.
    pub reducible: bool,
    /// Degrees of the reduced components, in decreasing order.
    pub components: Vec<usize>,
    pub non_isolated: Option<NonIsolatedLabel>,
    pub git_status: GitStatus,
}

/// Canonical ASCII name of a multiset of points, for instance `A1^2A2`.
pub fn points_name(points: &[AdeLabel]) -> String {
    let mut sorted = points.to_vec();
    sorted.sort();
    let mut out = String::new();
    let mut i = 0;
    while i < sorted.len() {
        let n = sorted[i..].iter().take_while(|&&l| l == sorted[i]).count();
        out.push_str(&sorted[i].to_string());
        if n > 1 {
            out.push_str(&format!("^{n}"));
        }
        i += n;
    }
    out
}

impl SingularityType {
    /// Canonical ASCII name, such as `Smooth`, `A1^2A2`, `rA1^4(conic)` or `l^2c'`.
    pub fn name(&self) -> String {
        if let Some(n) = self.non_isolated {
            return n.name().to_string();
        }
        if self.points.is_empty() {
            return "Smooth".to_string();
        }
        let mut s = String::new();
        if self.reducible {
            s.push('r');
        }
        s.push_str(&points_name(&self.points));
        if SPLIT_TYPES.contains(&s.as_str()) {
            match self.components.as_slice() {
                [2, 2] => s.push_str("(conic)"),
                [3, 1] => s.push_str("(cubic)"),
                _ => {}
            }
        }
        s
    }

    /// Sum of the Milnor numbers of the singular points.
    pub fn total_milnor(&self) -> usize {
        self.points.iter().map(|l| l.milnor()).sum()
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.git_status)
    }
}

fn git_from_points(points: &[(AdeLabel, usize)]) -> GitStatus {
    if points.iter().any(|&(_, m)| m >= 3) {
        GitStatus::Unstable
    } else if points
        .iter()
        .all(|(l, _)| l.family == AdeFamily::A && l.index <= 2)
    {
        GitStatus::Stable
    } else {
        GitStatus::Semistable
    }
}

/// Singularity type of a quartic over a prime field `F_p` (`p > 7`).
/// `do_vanishes` overrides the null-cone test when known from another field.
fn type_over_prime(f: &Form<Fp>, seed: u64, do_vanishes: Option<bool>) -> Result<SingularityType> {
    let do_zero = match do_vanishes {
        Some(z) => z,
        None => dixmier_ohno(f)?.is_zero(),
    };
    match singular_points(f, seed)? {
        SingularLocus::NonReduced(r) => {
            let shape = non_reduced_shape(f, &r)?;
            let components = match shape {
                NonIsolatedLabel::LineSqConic | NonIsolatedLabel::LineSqConicTangent => vec![2, 1],
                NonIsolatedLabel::LineLineLineSq | NonIsolatedLabel::LineLineLineSqConcurrent => vec![1, 1, 1],
                NonIsolatedLabel::ConicSq => vec![2],
                NonIsolatedLabel::LineSqLineSq | NonIsolatedLabel::LineLineCube => vec![1, 1],
                NonIsolatedLabel::LineFourth => vec![1],
            };
            Ok(SingularityType {
                points: Vec::new(),
                reducible: components.len() > 1,
                components,
                non_isolated: Some(shape),
                git_status: if do_zero { GitStatus::Unstable } else { GitStatus::Semistable },
            })
        }
        SingularLocus::Isolated(pts) => {
            let mut found = Vec::new();
            for pt in &pts {
                let local = localize(&f.map(|c| pt.coords[0].context().embed(*c)), &pt.coords, MILNOR_TRUNCATION)?;
                let label = ade_classify(&local)?;
                for _ in 0..pt.conjugates {
                    found.push((label, pt.multiplicity));
                }
            }
            let components = if found.is_empty() { vec![4] } else { component_partition(f, seed)? };
            let mut git = git_from_points(&found);
            if do_zero {
                git = GitStatus::Unstable;
            }
            let mut points: Vec<AdeLabel> = found.into_iter().map(|(l, _)| l).collect();
            points.sort();
            Ok(SingularityType {
                points,
                reducible: components.len() > 1,
                components,
                non_isolated: None,
                git_status: git,
            })
        }
    }
}

/// Singularity type of a quartic over a prime field of characteristic `> 7`.
pub fn quartic_singularity_type_mod_p(f: &Form<Fp>, seed: u64) -> Result<SingularityType> {
    if f.degree() != 4 {
        return Err(Error::Input("expected a quartic".into()));
    }
    let p = f.template().modulus();
    crate::arith::require_supported_prime(p)?;
    if f.is_zero() {
        return Err(Error::Input("the zero form does not define a curve".into()));
    }
    type_over_prime(f, seed, None)
}

/// Number of large primes used to decide a type over the rationals.
pub const RATIONAL_PRIMES: usize = 3;

/// Singularity type of a rational quartic, decided by reduction modulo
/// several primes near `10^9` that must all agree.
pub fn quartic_singularity_type(f: &Form<Rational>, seed: u64) -> Result<SingularityType> {
    if f.degree() != 4 {
        return Err(Error::Input("expected a quartic".into()));
    }
    if f.is_zero() {
        return Err(Error::Input("the zero form does not define a curve".into()));
    }
    let do_zero = dixmier_ohno(f)?.is_zero();
    let mut answers: Vec<(u64, SingularityType)> = Vec::new();
    let mut p = 1_000_000_000u64;
    while answers.len() < RATIONAL_PRIMES {
        p = prev_prime(p - 1);
        let Some(fp) = f.reduce_mod(p) else { continue };
        if fp.is_zero() {
            continue;
        }
        answers.push((p, type_over_prime(&fp, seed, Some(do_zero))?));
    }
    if answers.iter().all(|(_, t)| *t == answers[0].1) {
        return Ok(answers.swap_remove(0).1);
    }
    let detail: Vec<String> = answers.iter().map(|(p, t)| format!("p={p}: {t}")).collect();
    Err(Error::Indeterminate(format!("types disagree across primes: {}", detail.join("; "))))
}

/// Singularity type of a quartic over any supported coefficient field.
pub trait SingularityAnalysis {
    fn singularity_type(&self, seed: u64) -> Result<SingularityType>;
}

impl SingularityAnalysis for Form<Rational> {
    fn singularity_type(&self, seed: u64) -> Result<SingularityType> {
        quartic_singularity_type(self, seed)
    }
}

impl SingularityAnalysis for Form<Fp> {
    fn singularity_type(&self, seed: u64) -> Result<SingularityType> {
        quartic_singularity_type_mod_p(self, seed)
    }
}
