// SPDX-License-Identifier: MIT OR Apache-2.0
//! Sparse multivariate polynomials over the rationals and a small parser for
//! expressions such as `x*(x*z^2 + (a*y*x + x^2)*z + y^3)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

/// Polynomial in a fixed, ordered list of named variables.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePoly {
    pub fn zero(vars: &[&str]) -> Self {
        SparsePoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = SparsePoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    fn variable(vars: &[&str], idx: usize) -> Self {
        let mut p = SparsePoly::zero(vars);
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            let v = r.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *v += c;
            if v.is_zero() {
                r.terms.remove(e);
            }
        }
        r
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        for c in r.terms.values_mut() {
            *c = -c.clone();
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = SparsePoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let v = r.terms.entry(e.clone()).or_insert_with(Rational::zero);
                *v += c1 * c2;
                if v.is_zero() {
                    r.terms.remove(&e);
                }
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut r = SparsePoly::constant(&vars, Rational::one());
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Total degree in the variables whose indices are listed.
    pub fn degree_in(&self, idx: &[usize]) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| idx.iter().map(|&i| e[i]).sum())
            .max()
    }

    /// Evaluates at field values (one per variable).
    pub fn eval<F: Field>(&self, values: &[F]) -> Result<F> {
        let template = values
            .first()
            .ok_or_else(|| Error::Input("evaluation needs at least one variable".into()))?;
        self.eval_in(values, template)
    }

    /// Evaluates at field values (one per variable) in the field of `template`,
    /// which also covers polynomials without variables.
    pub fn eval_in<F: Field>(&self, values: &[F], template: &F) -> Result<F> {
        if values.len() != self.vars.len() {
            return Err(Error::Input(format!(
                "expected {} values, got {}",
                self.vars.len(),
                values.len()
            )));
        }
        let mut acc = template.zero_like();
        for (e, c) in &self.terms {
            let mut t = template
                .rational_like(c)
                .ok_or_else(|| Error::Input(format!("coefficient {c} not defined in the field")))?;
            for (v, &k) in values.iter().zip(e) {
                if k > 0 {
                    t = t * v.pow_u64(k as u64);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Splits off the variables `outer` (by index), returning a map from their
    /// exponent vectors to polynomials in the remaining variables.
    pub fn coefficients_in(&self, outer: &[usize]) -> BTreeMap<Vec<u32>, SparsePoly> {
        let inner: Vec<usize> = (0..self.vars.len()).filter(|i| !outer.contains(i)).collect();
        let inner_names: Vec<&str> = inner.iter().map(|&i| self.vars[i].as_str()).collect();
        let mut out: BTreeMap<Vec<u32>, SparsePoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key: Vec<u32> = outer.iter().map(|&i| e[i]).collect();
            let ie: Vec<u32> = inner.iter().map(|&i| e[i]).collect();
            let entry = out
                .entry(key)
                .or_insert_with(|| SparsePoly::zero(&inner_names));
            entry.terms.insert(ie, c.clone());
        }
        out
    }

    /// Parses an expression in the given variables. Accepts integers, `+ - *`,
    /// `^` or `**` with nonnegative integer exponents, division by a nonzero
    /// integer constant, and parentheses. Implicit multiplication is not allowed.
    pub fn parse(src: &str, vars: &[&str]) -> Result<Self> {
        let mut p = Parser {
            toks: tokenize(src)?,
            pos: 0,
            vars,
        };
        let r = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Input(format!("unexpected trailing input in {src:?}")));
        }
        Ok(r)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    Pow,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = chars[st..i].iter().collect();
            out.push(Tok::Num(txt.parse().expect("digits parse")));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[st..i].iter().collect()));
        } else if c == '*' && i + 1 < chars.len() && chars[i + 1] == '*' {
            out.push(Tok::Pow);
            i += 2;
        } else if c == '^' {
            out.push(Tok::Pow);
            i += 1;
        } else if "+-*/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Input(format!("unexpected character {c:?} in expression")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c)) = self.peek() {
            let c = *c;
            if c != '+' && c != '-' {
                break;
            }
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.add(&t.neg()) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c)) = self.peek() {
            let c = *c;
            if c != '*' && c != '/' {
                break;
            }
            self.pos += 1;
            let f = self.unary()?;
            if c == '*' {
                acc = acc.mul(&f);
            } else {
                let k = constant_value(&f).ok_or_else(|| {
                    Error::Input("division is only allowed by a nonzero constant".into())
                })?;
                let inv = SparsePoly::constant(self.vars, k.recip());
                acc = acc.mul(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SparsePoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<SparsePoly> {
        let base = self.atom()?;
        if let Some(Tok::Pow) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| Error::Input("exponent too large".into()))?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Input("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(SparsePoly::constant(self.vars, Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Input(format!("unknown variable {name:?}")))?;
                Ok(SparsePoly::variable(self.vars, idx))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(Error::Input("missing closing parenthesis".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(Error::Input(format!("unexpected token {other:?}"))),
        }
    }
}

fn constant_value(p: &SparsePoly) -> Option<Rational> {
    if p.terms.is_empty() {
        return None;
    }
    if p.terms.len() == 1 {
        let (e, c) = p.terms.iter().next().unwrap();
        if e.iter().all(|&k| k == 0) {
            return Some(c.clone());
        }
    }
    None
}
