// SPDX-License-Identifier: MIT OR Apache-2.0
//! The 42 stable reduction types of genus-3 curves and wildcard patterns over
//! their hyperelliptic `(X=Y)_H` members.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Labels row by row, from the smooth type down to the most degenerate ones.
pub const REDUCTION_TYPE_NAMES: [&str; 42] = [
    "3",
    "2n", "2e",
    "1nn", "(1=1)_H", "2m", "1ne", "1ee",
    "0nnn", "1---0", "(1=0n)_H", "0nne", "1nm", "(1=0e)_H", "1me", "0nee", "0eee",
    "0----0", "0---0n", "(0n=0n)_H", "0nnm", "(Z=1)_H", "0---0e", "(1=0m)_H", "(0n=0e)_H", "1mm", "0nme",
    "(0e=0e)_H", "0mee",
    "CAVE", "(Z=0n)_H", "0---0m", "(0n=0m)_H", "0nmm", "(Z=0e)_H", "(0m=0e)_H", "0mme",
    "BRAID", "(Z=Z)_H", "(Z=0m)_H", "(0m=0m)_H", "0mmm",
];

/// Number of labels in each row.
pub const ROW_SIZES: [usize; 7] = [1, 2, 5, 9, 12, 8, 5];

/// Alternative spellings of the same nodes.
const ALIASES: [(&str, &str); 4] = [("1em", "1me"), ("0nem", "0nme"), ("0eem", "0mee"), ("0emm", "0mme")];

/// One of the 42 stable reduction types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReductionType(u8);

impl ReductionType {
    pub fn all() -> impl Iterator<Item = ReductionType> {
        (0..42u8).map(ReductionType)
    }

    pub fn name(self) -> &'static str {
        REDUCTION_TYPE_NAMES[self.0 as usize]
    }

    /// Row of the type (0 for the smooth type).
    pub fn row(self) -> usize {
        let mut start = 0;
        for (r, n) in ROW_SIZES.iter().enumerate() {
            if (self.0 as usize) < start + n {
                return r;
            }
            start += n;
        }
        unreachable!("index below 42")
    }

    pub fn is_hyperelliptic(self) -> bool {
        self.name().ends_with("_H")
    }

    /// The two sides `X`, `Y` of an `(X=Y)_H` label.
    pub fn sides(self) -> Option<(&'static str, &'static str)> {
        let inner = self.name().strip_prefix('(')?.strip_suffix(")_H")?;
        inner.split_once('=')
    }
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ReductionType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for ReductionType {
    type Err = Error;

    /// Accepts the labels with or without enclosing parentheses (`(2n)`),
    /// and the alternative spellings `1em`, `0nem`, `0eem`, `0emm`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bare = match t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
            Some(inner) if !inner.contains('=') => inner,
            _ => t,
        };
        let bare = ALIASES.iter().find(|(a, _)| *a == bare).map_or(bare, |(_, c)| c);
        REDUCTION_TYPE_NAMES
            .iter()
            .position(|n| *n == bare)
            .map(|i| ReductionType(i as u8))
            .ok_or_else(|| Error::Input(format!("unknown reduction type {s:?}")))
    }
}

/// A set of candidate reduction types, possibly with the unresolved
/// hyperelliptic outcome `(*)_H`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReductionTypeSet {
    pub concrete: BTreeSet<ReductionType>,
    pub hyperelliptic_wildcard: bool,
}

impl ReductionTypeSet {
    pub fn single(t: ReductionType) -> Self {
        ReductionTypeSet { concrete: BTreeSet::from([t]), hyperelliptic_wildcard: false }
    }

    pub fn union_with(&mut self, o: &ReductionTypeSet) {
        self.concrete.extend(o.concrete.iter().copied());
        self.hyperelliptic_wildcard |= o.hyperelliptic_wildcard;
    }

    pub fn is_empty(&self) -> bool {
        self.concrete.is_empty() && !self.hyperelliptic_wildcard
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.concrete.iter().map(|t| t.name()).collect()
    }
}

impl fmt::Display for ReductionTypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.concrete.iter().map(|t| t.to_string()).collect();
        if self.hyperelliptic_wildcard {
            parts.push("(*)_H".into());
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Every reduction type matching a pattern.
///
/// `(X=*)_H` matches the hyperelliptic labels whose left side is `X`;
/// `(*=Y)_H` matches those whose right side is `Y` and whose left side is
/// not `Y`; `(*)_H` is the unresolved hyperelliptic outcome together with
/// all 15 hyperelliptic labels. A pattern without `*` names one type.
///
/// ```
/// use quartic_strata::classify::expand_wildcard;
/// assert_eq!(expand_wildcard("(1=*)_H").unwrap().names(), ["(1=1)_H", "(1=0n)_H", "(1=0e)_H", "(1=0m)_H"]);
/// assert_eq!(expand_wildcard("(*=1)_H").unwrap().names(), ["(Z=1)_H"]);
/// ```
pub fn expand_wildcard(pattern: &str) -> Result<ReductionTypeSet> {
    let t = pattern.trim();
    if !t.contains('*') {
        return Ok(ReductionTypeSet::single(t.parse()?));
    }
    let bad = || Error::Input(format!("unknown reduction pattern {pattern:?}"));
    let inner = t.strip_prefix('(').and_then(|x| x.strip_suffix(")_H")).ok_or_else(bad)?;
    let hyper = ReductionType::all().filter(|r| r.is_hyperelliptic());
    if inner == "*" {
        return Ok(ReductionTypeSet { concrete: hyper.collect(), hyperelliptic_wildcard: true });
    }
    let (l, r) = inner.split_once('=').ok_or_else(bad)?;
    let side_ok = |s: &str| s == "*" || s == "Z" || s == "1" || ["0n", "0e", "0m"].contains(&s);
    if !side_ok(l) || !side_ok(r) || (l == "*") == (r == "*") {
        return Err(bad());
    }
    let concrete: BTreeSet<ReductionType> = hyper
        .filter(|t| {
            let (x, y) = t.sides().expect("hyperelliptic label");
            if r == "*" {
                x == l
            } else {
                y == r && x != r
            }
        })
        .collect();
    if concrete.is_empty() {
        return Err(bad());
    }
    Ok(ReductionTypeSet { concrete, hyperelliptic_wildcard: false })
}
