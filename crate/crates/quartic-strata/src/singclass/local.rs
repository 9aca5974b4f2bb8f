// SPDX-License-Identifier: MIT OR Apache-2.0
//! Local invariants of a plane curve singularity: Milnor number and ADE type.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::forms::LocalForm;
use crate::linalg::rank;

/// Largest truncation degree used when computing Milnor numbers.
pub const MILNOR_TRUNCATION: usize = 12;
/// Number of consecutive equal colengths required to accept a Milnor number.
pub const MILNOR_WINDOW: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AdeFamily {
    A,
    D,
    E,
    X,
}

/// A simple (or `X9`) plane curve singularity type such as `A3` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AdeLabel {
    pub family: AdeFamily,
    pub index: u8,
}

impl AdeLabel {
    pub const fn new(family: AdeFamily, index: u8) -> Self {
        AdeLabel { family, index }
    }

    /// Milnor number of the singularity type.
    pub fn milnor(&self) -> usize {
        self.index as usize
    }

    pub fn is_in_scope(&self) -> bool {
        match self.family {
            AdeFamily::A => (1..=7).contains(&self.index),
            AdeFamily::D => (4..=6).contains(&self.index),
            AdeFamily::E => (6..=7).contains(&self.index),
            AdeFamily::X => self.index == 9,
        }
    }
}

impl fmt::Display for AdeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            AdeFamily::A => 'A',
            AdeFamily::D => 'D',
            AdeFamily::E => 'E',
            AdeFamily::X => 'X',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for AdeLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => AdeFamily::A,
            Some('D') => AdeFamily::D,
            Some('E') => AdeFamily::E,
            Some('X') => AdeFamily::X,
            _ => return Err(Error::Input(format!("unknown singularity label {s:?}"))),
        };
        let index: u8 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Input(format!("unknown singularity label {s:?}")))?;
        let l = AdeLabel { family, index };
        if !l.is_in_scope() {
            return Err(Error::Input(format!("singularity label {s:?} is outside A1-A7, D4-D6, E6, E7, X9")));
        }
        Ok(l)
    }
}

/// Result of a Milnor number computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Milnor {
    Finite(usize),
    NonIsolated,
}

/// Coefficients of `g` in degrees below `n`, laid out by monomial.
fn truncated_row<F: Field>(g: &LocalForm<F>, shift: (usize, usize), n: usize, idx: &[Vec<usize>]) -> Vec<F> {
    let z = g.template();
    let mut row = vec![z; n * (n + 1) / 2];
    for i in 0..=g.order() {
        for j in 0..=(g.order() - i) {
            let (a, b) = (i + shift.0, j + shift.1);
            if a + b < n {
                row[idx[a][b]] = g.coeff(i, j);
            }
        }
    }
    row
}

/// Colength of `(f_u, f_v) + m^n` in the local ring.
fn jacobian_colength<F: Field>(fu: &LocalForm<F>, fv: &LocalForm<F>, n: usize) -> usize {
    let mut idx = vec![vec![0usize; n + 1]; n + 1];
    let mut k = 0;
    for d in 0..n {
        for i in 0..=d {
            idx[i][d - i] = k;
            k += 1;
        }
    }
    let mut rows = Vec::new();
    for d in 0..n {
        for i in 0..=d {
            for g in [fu, fv] {
                let r = truncated_row(g, (i, d - i), n, &idx);
                if r.iter().any(|c| !c.is_zero_elem()) {
                    rows.push(r);
                }
            }
        }
    }
    k - if rows.is_empty() { 0 } else { rank(&rows) }
}

/// Milnor number `dim O / (f_u, f_v)` of a singular point, centered at the
/// origin of `l`.
pub fn milnor_number<F: Field>(l: &LocalForm<F>) -> Result<Milnor> {
    if !l.coeff(0, 0).is_zero_elem() {
        return Err(Error::Input("the local form does not vanish at its center".into()));
    }
    if !l.coeff(1, 0).is_zero_elem() || !l.coeff(0, 1).is_zero_elem() {
        return Err(Error::Input("the local form is smooth at its center".into()));
    }
    let (fu, fv) = l.gradient();
    let mut history: Vec<usize> = Vec::new();
    for n in 1..=MILNOR_TRUNCATION {
        history.push(jacobian_colength(&fu, &fv, n));
        if history.len() >= MILNOR_WINDOW {
            let tail = &history[history.len() - MILNOR_WINDOW..];
            if tail.iter().all(|&d| d == tail[0]) {
                return Ok(Milnor::Finite(tail[0]));
            }
        }
    }
    Ok(Milnor::NonIsolated)
}

/// ADE type of an isolated singular point centered at the origin of `l`.
pub fn ade_classify<F: Field>(l: &LocalForm<F>) -> Result<AdeLabel> {
    let mu = match milnor_number(l)? {
        Milnor::Finite(m) => m,
        Milnor::NonIsolated => {
            return Err(Error::Input("the singularity is not isolated".into()));
        }
    };
    let out = |family, index: usize| -> Result<AdeLabel> {
        let label = AdeLabel::new(family, index as u8);
        if index > u8::MAX as usize || !label.is_in_scope() {
            return Err(Error::Unclassified(format!("{label} (Milnor number {mu}) is outside the supported table")));
        }
        Ok(label)
    };
    let q = l.jet(2);
    if q.iter().any(|c| !c.is_zero_elem()) {
        let four = q[0].int_like(4);
        let disc = q[1].clone() * q[1].clone() - four * q[0].clone() * q[2].clone();
        return if disc.is_zero_elem() { out(AdeFamily::A, mu) } else { out(AdeFamily::A, 1) };
    }
    let c = l.jet(3);
    if c.iter().all(|x| x.is_zero_elem()) {
        return if mu == 9 {
            out(AdeFamily::X, 9)
        } else {
            Err(Error::Unclassified(format!("quadruple point with Milnor number {mu}")))
        };
    }
    let (a, b, cc, d) = (c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone());
    let k = |n: i64| a.int_like(n);
    let disc = b.clone() * b.clone() * cc.clone() * cc.clone()
        - k(4) * a.clone() * cc.clone() * cc.clone() * cc.clone()
        - k(4) * b.clone() * b.clone() * b.clone() * d.clone()
        - k(27) * a.clone() * a.clone() * d.clone() * d.clone()
        + k(18) * a.clone() * b.clone() * cc.clone() * d.clone();
    if !disc.is_zero_elem() {
        return out(AdeFamily::D, 4);
    }
    let cube = (b.clone() * b.clone() - k(3) * a.clone() * cc.clone()).is_zero_elem()
        && (cc.clone() * cc.clone() - k(3) * b.clone() * d.clone()).is_zero_elem()
        && (b.clone() * cc.clone() - k(9) * a.clone() * d.clone()).is_zero_elem();
    if cube {
        out(AdeFamily::E, mu)
    } else {
        out(AdeFamily::D, mu)
    }
}
