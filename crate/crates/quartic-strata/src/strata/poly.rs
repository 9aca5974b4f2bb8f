// SPDX-License-Identifier: MIT OR Apache-2.0
//! Weighted-homogeneous polynomials in the 13 Dixmier-Ohno invariants.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{Field, Rational, INVARIANT_NAMES, WEIGHTS};
use crate::error::{Error, Result};

/// Exponent vector over `(I3, I6, I9, J9, I12, J12, I15, J15, I18, J18, I21, J21, I27)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InvariantMonomial(pub [u32; 13]);

impl InvariantMonomial {
    pub fn one() -> Self {
        InvariantMonomial([0; 13])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 13];
        e[i] = 1;
        InvariantMonomial(e)
    }

    /// Weighted degree `Σ e_i w_i`.
    pub fn degree(&self) -> u32 {
        self.0.iter().zip(WEIGHTS).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        InvariantMonomial(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn eval<F: Field>(&self, point: &[F]) -> F {
        let mut acc = point[0].one_like();
        for (x, &e) in point.iter().zip(&self.0) {
            if e > 0 {
                acc = acc * x.pow_u64(e as u64);
            }
        }
        acc
    }
}

/// Column order: compare exponents from `I27` down to `I3`, larger first, so
/// that leading terms involve the heaviest invariants.
impl Ord for InvariantMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        for i in (0..13).rev() {
            match o.0[i].cmp(&self.0[i]) {
                Ordering::Equal => continue,
                c => return c,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for InvariantMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for InvariantMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(INVARIANT_NAMES[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of weighted degree `d`, in column order.
pub fn monomials_of_degree(d: u32) -> Vec<InvariantMonomial> {
    fn rec(i: usize, left: u32, cur: &mut [u32; 13], out: &mut Vec<InvariantMonomial>) {
        if i == 13 {
            if left == 0 {
                out.push(InvariantMonomial(*cur));
            }
            return;
        }
        let w = WEIGHTS[i];
        for e in 0..=left / w {
            cur[i] = e;
            rec(i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if d % 3 == 0 {
        rec(0, d, &mut [0; 13], &mut out);
    }
    out.sort();
    out
}

/// A weighted-homogeneous polynomial with rational coefficients, terms in
/// column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvPoly {
    pub terms: Vec<(Rational, InvariantMonomial)>,
}

impl InvPoly {
    pub fn new(mut terms: Vec<(Rational, InvariantMonomial)>) -> Result<Self> {
        terms.retain(|(c, _)| !c.is_zero());
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        if terms.is_empty() {
            return Err(Error::Input("zero polynomial in an ideal".into()));
        }
        let d = terms[0].1.degree();
        if terms.iter().any(|(_, m)| m.degree() != d) {
            return Err(Error::Input("polynomial is not weighted-homogeneous".into()));
        }
        if terms.windows(2).any(|w| w[0].1 == w[1].1) {
            return Err(Error::Input("repeated monomial in a polynomial".into()));
        }
        Ok(InvPoly { terms })
    }

    pub fn degree(&self) -> u32 {
        self.terms[0].1.degree()
    }

    pub fn leading(&self) -> &InvariantMonomial {
        &self.terms[0].1
    }

    /// Scales to coprime integer coefficients with positive leading coefficient.
    pub fn primitive(mut self) -> Self {
        let den = self
            .terms
            .iter()
            .fold(BigInt::one(), |l, (c, _)| l.lcm(c.denom()));
        let mut g = BigInt::zero();
        for (c, _) in &self.terms {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut scale = Rational::new(den, g);
        if self.terms[0].0.is_negative() {
            scale = -scale;
        }
        for (c, _) in &mut self.terms {
            *c = c.clone() * scale.clone();
        }
        self
    }

    pub fn eval<F: Field>(&self, point: &[F]) -> Result<F> {
        let zero = point[0].zero_like();
        let mut acc = zero.clone();
        for (c, m) in &self.terms {
            let c = zero
                .rational_like(c)
                .ok_or_else(|| Error::Input(format!("coefficient {c} is not defined in the field")))?;
            acc = acc + c * m.eval(point);
        }
        Ok(acc)
    }

    /// Catalog encoding: `coefficient [e1 … e13]` terms separated by ` ; `.
    pub fn encode(&self) -> String {
        self.terms
            .iter()
            .map(|(c, m)| {
                let e: Vec<String> = m.0.iter().map(|x| x.to_string()).collect();
                format!("{c} [{}]", e.join(" "))
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }

    pub fn decode(s: &str) -> Result<Self> {
        let bad = || Error::Input(format!("malformed generator encoding {s:?}"));
        let mut terms = Vec::new();
        for t in s.split(';') {
            let t = t.trim();
            let (c, rest) = t.split_once('[').ok_or_else(bad)?;
            let rest = rest.strip_suffix(']').ok_or_else(bad)?;
            let c = crate::arith::parse_rational(c.trim())?;
            let e: Vec<u32> = rest
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            let e: [u32; 13] = e.try_into().map_err(|_| bad())?;
            terms.push((c, InvariantMonomial(e)));
        }
        InvPoly::new(terms)
    }
}

impl fmt::Display for InvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        let counts: Vec<usize> = (1..=15).map(|k| monomials_of_degree(3 * k).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 7, 11, 19, 29, 44, 67, 99, 142, 206, 289, 403, 557]);
    }

    #[test]
    fn heaviest_invariant_leads() {
        let m = monomials_of_degree(6);
        assert_eq!(m[0], InvariantMonomial::var(1));
        let g = InvPoly::new(vec![
            (Rational::from_integer(1.into()), InvariantMonomial([2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0])),
            (Rational::from_integer(144.into()), InvariantMonomial::var(1)),
        ])
        .unwrap();
        assert_eq!(g.to_string(), "144*I6 + I3^2");
        assert_eq!(InvPoly::decode(&g.encode()).unwrap(), g);
    }
}
