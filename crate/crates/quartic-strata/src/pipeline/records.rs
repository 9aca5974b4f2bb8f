// SPDX-License-Identifier: MIT OR Apache-2.0
//! Curve records: one quartic per line, either an identifier followed by 15
//! coefficients or a JSON object with keys `id` and `coeffs`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use crate::arith::field::{content, lcm_of_denominators};
use crate::arith::{parse_rational, Rational};
use crate::forms::{monos, Form};
use crate::{Error, Result};

/// A named quartic with coefficients in the fixed monomial order.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveRecord {
    pub id: String,
    pub coeffs: Vec<Rational>,
}

impl CurveRecord {
    pub fn new(id: impl Into<String>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != 15 {
            return Err(Error::Input(format!("expected 15 coefficients, found {}", coeffs.len())));
        }
        Ok(CurveRecord { id: id.into(), coeffs })
    }

    /// Record of an existing quartic.
    pub fn from_form(id: impl Into<String>, f: &Form<Rational>) -> Result<Self> {
        CurveRecord::new(id, f.coeffs().to_vec())
    }

    /// Parses one line. Returns `Ok(None)` for blank lines and `#` comments.
    pub fn parse_line(line: &str) -> Result<Option<Self>> {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            return Ok(None);
        }
        if t.starts_with('{') {
            return Self::parse_json(t).map(Some);
        }
        let mut tokens = t.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty());
        let id = tokens.next().expect("nonempty line");
        let coeffs = tokens.map(parse_rational).collect::<Result<Vec<_>>>()?;
        CurveRecord::new(id, coeffs).map(Some)
    }

    fn parse_json(t: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Input(format!("bad JSON record: {e}")))?;
        let id = match v.get("id") {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Number(n)) => n.to_string(),
            _ => return Err(Error::Input("JSON record needs a string or numeric \"id\"".into())),
        };
        let Some(Value::Array(items)) = v.get("coeffs") else {
            return Err(Error::Input(format!("record {id}: \"coeffs\" must be an array")));
        };
        let coeffs = items
            .iter()
            .map(|c| match c {
                Value::Number(n) => parse_rational(&n.to_string()),
                Value::String(s) => parse_rational(s),
                _ => Err(Error::Input(format!("record {id}: coefficient {c} is not a number"))),
            })
            .collect::<Result<Vec<_>>>()?;
        CurveRecord::new(id, coeffs)
    }

    /// The quartic scaled to a primitive integral model.
    pub fn form(&self) -> Result<Form<Rational>> {
        let d = lcm_of_denominators(self.coeffs.iter());
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(d.clone())).to_integer()).collect();
        let g = content(ints.iter());
        if g.is_zero() {
            return Err(Error::Input(format!("record {}: the zero form is not a curve", self.id)));
        }
        Form::quartic(ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }

    /// Text line in the whitespace format.
    pub fn to_line(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{} {}", self.id, cs.join(" "))
    }
}

/// Monomial exponents in coefficient order, for documentation and display.
pub fn coefficient_monomials() -> Vec<[usize; 3]> {
    monos(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_formats_agree() {
        let a = CurveRecord::parse_line("c1, 1, 0,0,0,0, 0,0,0,0,0, 0,0,0,0, 1/2").unwrap().unwrap();
        let b = CurveRecord::parse_line(r#"{"id": "c1", "coeffs": [1,0,0,0,0,0,0,0,0,0,0,0,0,0,"1/2"]}"#)
            .unwrap()
            .unwrap();
        assert_eq!(a, b);
        assert!(CurveRecord::parse_line("  # note").unwrap().is_none());
        assert!(CurveRecord::parse_line("c2 1 2 3").is_err());
    }
}
