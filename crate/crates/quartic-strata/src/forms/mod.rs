// SPDX-License-Identifier: MIT OR Apache-2.0
//! Dense ternary forms in descending lexicographic monomial order, with
//! linear substitutions and local expansions at points.

pub mod expr;

use std::fmt;

use num_traits::Zero;

use crate::arith::{Field, Fp, Rational};
use crate::error::{Error, Result};
pub use expr::SparsePoly;

/// Number of monomials of degree `d` in three variables.
pub const fn mono_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Exponent triples of degree `d` in descending lexicographic order
/// (for `d = 4`: 400, 310, 301, 220, 211, 202, 130, ..., 004).
pub fn monos(d: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(mono_count(d));
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            out.push([i, j, d - i - j]);
        }
    }
    out
}

/// Position of `x^i y^j z^(d-i-j)` in [`monos`]`(d)`.
#[inline]
pub fn mono_index(d: usize, i: usize, j: usize) -> usize {
    (d - i) * (d - i + 1) / 2 + (d - i - j)
}

/// A homogeneous polynomial of degree `deg` in `x, y, z`.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<F> {
    deg: usize,
    coeffs: Vec<F>,
}

/// A ternary quartic: a [`Form`] of degree 4 with 15 coefficients.
pub type TernaryQuartic<F> = Form<F>;

impl<F: Field> Form<F> {
    pub fn new(deg: usize, coeffs: Vec<F>) -> Result<Self> {
        if coeffs.len() != mono_count(deg) {
            return Err(Error::Input(format!(
                "a form of degree {deg} needs {} coefficients, got {}",
                mono_count(deg),
                coeffs.len()
            )));
        }
        Ok(Form { deg, coeffs })
    }

    /// A quartic from its 15 coefficients in the fixed monomial order.
    pub fn quartic(coeffs: Vec<F>) -> Result<Self> {
        Form::new(4, coeffs)
    }

    pub fn zero(deg: usize, template: &F) -> Self {
        Form {
            deg,
            coeffs: vec![template.zero_like(); mono_count(deg)],
        }
    }

    /// The monomial `c · x^i y^j z^k`.
    pub fn monomial(e: [usize; 3], c: F) -> Self {
        let deg = e[0] + e[1] + e[2];
        let mut f = Form::zero(deg, &c);
        f.coeffs[mono_index(deg, e[0], e[1])] = c;
        f
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn template(&self) -> F {
        self.coeffs[0].zero_like()
    }

    pub fn coeff(&self, e: [usize; 3]) -> &F {
        &self.coeffs[mono_index(self.deg, e[0], e[1])]
    }

    pub fn coeff_mut(&mut self, e: [usize; 3]) -> &mut F {
        &mut self.coeffs[mono_index(self.deg, e[0], e[1])]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero_elem())
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.deg, o.deg);
        Form {
            deg: self.deg,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.deg, o.deg);
        Form {
            deg: self.deg,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Form {
            deg: self.deg,
            coeffs: self.coeffs.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let deg = self.deg + o.deg;
        let mut out = Form::zero(deg, &self.template());
        let ma = monos(self.deg);
        let mb = monos(o.deg);
        for (ea, a) in ma.iter().zip(&self.coeffs) {
            if a.is_zero_elem() {
                continue;
            }
            for (eb, b) in mb.iter().zip(&o.coeffs) {
                if b.is_zero_elem() {
                    continue;
                }
                let idx = mono_index(deg, ea[0] + eb[0], ea[1] + eb[1]);
                out.coeffs[idx] = out.coeffs[idx].clone() + a.clone() * b.clone();
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let one = self.template().one_like();
        let mut acc = Form::monomial([0, 0, 0], one);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to variable `var` (0 = x, 1 = y, 2 = z).
    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < 3);
        if self.deg == 0 {
            return Form::zero(0, &self.template());
        }
        let mut out = Form::zero(self.deg - 1, &self.template());
        for (e, c) in monos(self.deg).iter().zip(&self.coeffs) {
            if e[var] == 0 || c.is_zero_elem() {
                continue;
            }
            let mut f = *e;
            f[var] -= 1;
            let idx = mono_index(self.deg - 1, f[0], f[1]);
            out.coeffs[idx] = out.coeffs[idx].clone() + c.clone() * c.int_like(e[var] as i64);
        }
        out
    }

    pub fn eval(&self, pt: &[F; 3]) -> F {
        let mut pw: Vec<Vec<F>> = Vec::with_capacity(3);
        for v in pt {
            let mut row = vec![v.one_like()];
            for k in 1..=self.deg {
                row.push(row[k - 1].clone() * v.clone());
            }
            pw.push(row);
        }
        let mut acc = self.template();
        for (e, c) in monos(self.deg).iter().zip(&self.coeffs) {
            if !c.is_zero_elem() {
                acc = acc + c.clone() * pw[0][e[0]].clone() * pw[1][e[1]].clone() * pw[2][e[2]].clone();
            }
        }
        acc
    }

    /// The substituted form `v ↦ F(A v)`.
    pub fn act(&self, a: &LinearSubstitution<F>) -> Self {
        let one = self.template().one_like();
        let rows: Vec<Form<F>> = (0..3)
            .map(|i| Form {
                deg: 1,
                coeffs: vec![a.m[i][0].clone(), a.m[i][1].clone(), a.m[i][2].clone()],
            })
            .collect();
        let mut pows: Vec<Vec<Form<F>>> = Vec::with_capacity(3);
        for r in &rows {
            let mut v = vec![Form::monomial([0, 0, 0], one.clone())];
            for k in 1..=self.deg {
                v.push(v[k - 1].mul(r));
            }
            pows.push(v);
        }
        let mut out = Form::zero(self.deg, &self.template());
        for (e, c) in monos(self.deg).iter().zip(&self.coeffs) {
            if c.is_zero_elem() {
                continue;
            }
            let t = pows[0][e[0]].mul(&pows[1][e[1]]).mul(&pows[2][e[2]]);
            out = out.add(&t.scale(c));
        }
        out
    }

    /// Converts every coefficient with `f`.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Form<G> {
        Form {
            deg: self.deg,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl Form<Rational> {
    /// Parses an expression in `x, y, z` with rational coefficients.
    pub fn parse(src: &str) -> Result<Self> {
        let p = SparsePoly::parse(src, &["x", "y", "z"])?;
        let deg = p
            .degree_in(&[0, 1, 2])
            .ok_or_else(|| Error::Input("the zero polynomial has no degree".into()))?
            as usize;
        let mut f = Form::zero(deg, &Rational::zero());
        for (e, c) in p.terms() {
            if (e[0] + e[1] + e[2]) as usize != deg {
                return Err(Error::Input(format!("{src:?} is not homogeneous")));
            }
            *f.coeff_mut([e[0] as usize, e[1] as usize, e[2] as usize]) = c.clone();
        }
        Ok(f)
    }

    /// Reduction modulo `p`; `None` if a denominator is divisible by `p`.
    pub fn reduce_mod(&self, p: u64) -> Option<Form<Fp>> {
        let zero = Fp::new(0, p);
        let coeffs: Option<Vec<Fp>> = self.coeffs.iter().map(|c| zero.rational_like(c)).collect();
        coeffs.map(|coeffs| Form { deg: self.deg, coeffs })
    }
}

impl<F: Field + fmt::Display> fmt::Display for Form<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in monos(self.deg).iter().zip(&self.coeffs) {
            if c.is_zero_elem() {
                continue;
            }
            let text = c.to_string();
            let integer = text.trim_start_matches('-').chars().all(|ch| ch.is_ascii_digit());
            let (neg, mag) = match text.strip_prefix('-') {
                Some(m) if integer => (true, m.to_string()),
                _ => (false, text.clone()),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let vars: Vec<String> = ["x", "y", "z"]
                .iter()
                .zip(e)
                .filter(|(_, k)| **k > 0)
                .map(|(name, k)| if *k == 1 { name.to_string() } else { format!("{name}^{k}") })
                .collect();
            let coeff = match (integer, mag.as_str(), vars.is_empty()) {
                (true, "1", false) => String::new(),
                (true, _, true) => mag.clone(),
                (true, _, false) => format!("{mag}*"),
                (false, _, true) => format!("({mag})"),
                (false, _, false) => format!("({mag})*"),
            };
            write!(f, "{coeff}{}", vars.join("*"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The three first partial derivatives.
pub fn partials<F: Field>(f: &Form<F>) -> [Form<F>; 3] {
    [f.derivative(0), f.derivative(1), f.derivative(2)]
}

/// A 3×3 matrix acting by linear substitution.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSubstitution<F> {
    pub m: [[F; 3]; 3],
}

impl<F: Field> LinearSubstitution<F> {
    pub fn new(m: [[F; 3]; 3]) -> Self {
        LinearSubstitution { m }
    }

    pub fn identity(template: &F) -> Self {
        let z = template.zero_like();
        let o = template.one_like();
        LinearSubstitution {
            m: [
                [o.clone(), z.clone(), z.clone()],
                [z.clone(), o.clone(), z.clone()],
                [z.clone(), z, o],
            ],
        }
    }

    pub fn diagonal(d: [F; 3]) -> Self {
        let z = d[0].zero_like();
        let [a, b, c] = d;
        LinearSubstitution {
            m: [
                [a, z.clone(), z.clone()],
                [z.clone(), b, z.clone()],
                [z.clone(), z, c],
            ],
        }
    }

    pub fn det(&self) -> F {
        let m = &self.m;
        m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
            - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
            + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let z = self.m[0][0].zero_like();
        let mut m: [[F; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| z.clone()));
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *cell = cell.clone() + self.m[i][k].clone() * o.m[k][j].clone();
                }
            }
        }
        LinearSubstitution { m }
    }

    pub fn apply(&self, v: &[F; 3]) -> [F; 3] {
        std::array::from_fn(|i| {
            self.m[i][0].clone() * v[0].clone()
                + self.m[i][1].clone() * v[1].clone()
                + self.m[i][2].clone() * v[2].clone()
        })
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().try_inv()?;
        let m = &self.m;
        let cof = |a: usize, b: usize, c: usize, e: usize| {
            m[a][b].clone() * m[c][e].clone() - m[a][e].clone() * m[c][b].clone()
        };
        let adj = [
            [cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)],
            [-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)],
            [cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)],
        ];
        Some(LinearSubstitution {
            m: adj.map(|row| row.map(|x| x * d.clone())),
        })
    }
}

/// Substitutes variables linearly: returns `F(A v)`. Composition contract:
/// `act(A·B, F) = act(B, act(A, F))`.
pub fn act<F: Field>(a: &LinearSubstitution<F>, f: &Form<F>) -> Result<Form<F>> {
    if a.det().is_zero_elem() {
        return Err(Error::Input("singular substitution matrix".into()));
    }
    Ok(f.act(a))
}

/// Local expansion of a form at a point in an affine chart: a bivariate
/// polynomial `f(u, v)` truncated at total degree `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalForm<F> {
    order: usize,
    /// `c[i][j]` is the coefficient of `u^i v^j`, for `i + j <= order`.
    c: Vec<Vec<F>>,
    /// Index of the coordinate set to 1.
    chart: usize,
}

impl<F: Field> LocalForm<F> {
    /// Builds a local form directly from coefficients `(i, j, c)` of `u^i v^j`.
    pub fn from_terms(order: usize, template: &F, terms: &[(usize, usize, F)]) -> Self {
        let mut c = vec![vec![template.zero_like(); order + 1]; order + 1];
        for (i, j, v) in terms {
            if i + j <= order {
                c[*i][*j] = c[*i][*j].clone() + v.clone();
            }
        }
        LocalForm { order, c, chart: 2 }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn template(&self) -> F {
        self.c[0][0].zero_like()
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        if i + j <= self.order {
            self.c[i][j].clone()
        } else {
            self.template()
        }
    }

    /// Lowest total degree with a nonzero coefficient (`None` for zero).
    pub fn multiplicity(&self) -> Option<usize> {
        (0..=self.order).find(|&d| (0..=d).any(|i| !self.c[i][d - i].is_zero_elem()))
    }

    /// Homogeneous part of degree `d`, as coefficients of `u^d, u^{d-1} v, ..., v^d`.
    pub fn jet(&self, d: usize) -> Vec<F> {
        (0..=d).rev().map(|i| self.coeff(i, d - i)).collect()
    }

    pub fn eval(&self, u: &F, v: &F) -> F {
        let mut acc = self.template();
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                if !self.c[i][j].is_zero_elem() {
                    acc = acc + self.c[i][j].clone() * u.pow_u64(i as u64) * v.pow_u64(j as u64);
                }
            }
        }
        acc
    }

    /// Partial derivatives `(f_u, f_v)` as local forms of one lower order.
    pub fn gradient(&self) -> (Self, Self) {
        let o = self.order.saturating_sub(1);
        let z = self.template();
        let mut fu = vec![vec![z.clone(); o + 1]; o + 1];
        let mut fv = vec![vec![z.clone(); o + 1]; o + 1];
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                let c = &self.c[i][j];
                if c.is_zero_elem() {
                    continue;
                }
                if i > 0 && i - 1 + j <= o {
                    fu[i - 1][j] = c.clone() * c.int_like(i as i64);
                }
                if j > 0 && i + j - 1 <= o {
                    fv[i][j - 1] = c.clone() * c.int_like(j as i64);
                }
            }
        }
        (
            LocalForm { order: o, c: fu, chart: self.chart },
            LocalForm { order: o, c: fv, chart: self.chart },
        )
    }

    /// Applies the linear change `(u, v) ↦ (a u + b v, c u + d v)`.
    pub fn linear_change(&self, m: [[F; 2]; 2]) -> Self {
        let z = self.template();
        let mut out = vec![vec![z.clone(); self.order + 1]; self.order + 1];
        // Powers of the two linear forms as bivariate coefficient vectors.
        let lin = |a: &F, b: &F| -> Vec<Vec<F>> {
            let mut v = vec![vec![z.clone(); 2]; 2];
            v[1][0] = a.clone();
            v[0][1] = b.clone();
            v
        };
        let l1 = lin(&m[0][0], &m[0][1]);
        let l2 = lin(&m[1][0], &m[1][1]);
        let mul = |a: &Vec<Vec<F>>, b: &Vec<Vec<F>>| -> Vec<Vec<F>> {
            let n = a.len() + b.len() - 1;
            let mut r = vec![vec![z.clone(); n]; n];
            for i in 0..a.len() {
                for j in 0..a[i].len() {
                    if a[i][j].is_zero_elem() {
                        continue;
                    }
                    for k in 0..b.len() {
                        for l in 0..b[k].len() {
                            if !b[k][l].is_zero_elem() {
                                r[i + k][j + l] = r[i + k][j + l].clone() + a[i][j].clone() * b[k][l].clone();
                            }
                        }
                    }
                }
            }
            r
        };
        let one = vec![vec![z.one_like()]];
        let mut p1 = vec![one.clone()];
        let mut p2 = vec![one];
        for k in 1..=self.order {
            p1.push(mul(&p1[k - 1], &l1));
            p2.push(mul(&p2[k - 1], &l2));
        }
        for i in 0..=self.order {
            for j in 0..=(self.order - i) {
                let c = &self.c[i][j];
                if c.is_zero_elem() {
                    continue;
                }
                let t = mul(&p1[i], &p2[j]);
                for (a, row) in t.iter().enumerate() {
                    for (b, val) in row.iter().enumerate() {
                        if a + b <= self.order && !val.is_zero_elem() {
                            out[a][b] = out[a][b].clone() + c.clone() * val.clone();
                        }
                    }
                }
            }
        }
        LocalForm { order: self.order, c: out, chart: self.chart }
    }
}

/// Expands `f` at `point` in the affine chart of the last nonzero coordinate,
/// with local coordinates `(u, v)` given by the two remaining coordinates in
/// increasing index order, truncated at total degree `order`.
pub fn localize<F: Field>(f: &Form<F>, point: &[F; 3], order: usize) -> Result<LocalForm<F>> {
    let chart = (0..3)
        .rev()
        .find(|&i| !point[i].is_zero_elem())
        .ok_or_else(|| Error::Input("the zero vector is not a projective point".into()))?;
    let inv = point[chart].try_inv().expect("nonzero chart coordinate");
    let pt: [F; 3] = std::array::from_fn(|i| point[i].clone() * inv.clone());
    if !f.eval(&pt).is_zero_elem() {
        return Err(Error::Input("the point does not lie on the curve".into()));
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    let z = f.template();
    let deg = f.degree();
    let size = deg.max(order) + 1;
    // Each coordinate as a bivariate polynomial in (u, v) of degree <= 1.
    let coord = |i: usize| -> Vec<Vec<F>> {
        let mut v = vec![vec![z.clone(); 2]; 2];
        v[0][0] = pt[i].clone();
        if i == others[0] {
            v[1][0] = z.one_like();
        } else if i == others[1] {
            v[0][1] = z.one_like();
        }
        v
    };
    let mul = |a: &Vec<Vec<F>>, b: &Vec<Vec<F>>| -> Vec<Vec<F>> {
        let n = a.len() + b.len() - 1;
        let mut r = vec![vec![z.clone(); n]; n];
        for i in 0..a.len() {
            for j in 0..a[i].len() {
                if a[i][j].is_zero_elem() {
                    continue;
                }
                for k in 0..b.len() {
                    for l in 0..b[k].len() {
                        if !b[k][l].is_zero_elem() {
                            r[i + k][j + l] = r[i + k][j + l].clone() + a[i][j].clone() * b[k][l].clone();
                        }
                    }
                }
            }
        }
        r
    };
    let mut pows: Vec<Vec<Vec<Vec<F>>>> = Vec::new();
    for i in 0..3 {
        let base = coord(i);
        let mut v = vec![vec![vec![z.one_like()]]];
        for k in 1..=deg {
            v.push(mul(&v[k - 1], &base));
        }
        pows.push(v);
    }
    let mut c = vec![vec![z.clone(); size]; size];
    for (e, coef) in monos(deg).iter().zip(f.coeffs()) {
        if coef.is_zero_elem() {
            continue;
        }
        let t = mul(&mul(&pows[0][e[0]], &pows[1][e[1]]), &pows[2][e[2]]);
        for (a, row) in t.iter().enumerate() {
            for (b, val) in row.iter().enumerate() {
                if !val.is_zero_elem() {
                    c[a][b] = c[a][b].clone() + coef.clone() * val.clone();
                }
            }
        }
    }
    let mut out = vec![vec![z.clone(); order + 1]; order + 1];
    for i in 0..=order {
        for j in 0..=(order - i) {
            if i < size && j < size {
                out[i][j] = c[i][j].clone();
            }
        }
    }
    Ok(LocalForm { order, c: out, chart })
}
