// SPDX-License-Identifier: MIT OR Apache-2.0
//! Geometric components of a quartic: the shape of a non-reduced quartic and
//! the degree partition of the components of a reduced one.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::locus::{random_fp, random_substitution};
use crate::arith::ext::{ExtContext, Fq};
use crate::arith::upoly::UPoly;
use crate::arith::{Field, Fp};
use crate::error::{Error, Result};
use crate::forms::{monos, Form, LinearSubstitution};
use crate::linalg::{kernel, rank, solve};

/// Shape of a quartic with a repeated component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NonIsolatedLabel {
    /// Double line and a smooth conic meeting it in two points.
    LineSqConic,
    /// Double line tangent to a smooth conic.
    LineSqConicTangent,
    /// Double line and two further lines, not concurrent.
    LineLineLineSq,
    /// Double line and two further lines through a common point.
    LineLineLineSqConcurrent,
    /// Double smooth conic.
    ConicSq,
    /// Two double lines.
    LineSqLineSq,
    /// A line and a triple line.
    LineLineCube,
    /// Quadruple line.
    LineFourth,
}

impl NonIsolatedLabel {
    pub const ALL: [NonIsolatedLabel; 8] = [
        NonIsolatedLabel::LineSqConic,
        NonIsolatedLabel::LineSqConicTangent,
        NonIsolatedLabel::LineLineLineSq,
        NonIsolatedLabel::LineLineLineSqConcurrent,
        NonIsolatedLabel::ConicSq,
        NonIsolatedLabel::LineSqLineSq,
        NonIsolatedLabel::LineLineCube,
        NonIsolatedLabel::LineFourth,
    ];

    /// ASCII name, for instance `l^2c'`.
    pub fn name(&self) -> &'static str {
        match self {
            NonIsolatedLabel::LineSqConic => "l^2c",
            NonIsolatedLabel::LineSqConicTangent => "l^2c'",
            NonIsolatedLabel::LineLineLineSq => "lll^2",
            NonIsolatedLabel::LineLineLineSqConcurrent => "lll^2'",
            NonIsolatedLabel::ConicSq => "c^2",
            NonIsolatedLabel::LineSqLineSq => "l^2l^2",
            NonIsolatedLabel::LineLineCube => "ll^3",
            NonIsolatedLabel::LineFourth => "l^4",
        }
    }
}

impl fmt::Display for NonIsolatedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NonIsolatedLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let norm = s
            .replace('ℓ', "l")
            .replace('′', "'")
            .replace('²', "^2")
            .replace('³', "^3")
            .replace('⁴', "^4");
        NonIsolatedLabel::ALL
            .into_iter()
            .find(|l| l.name() == norm)
            .ok_or_else(|| Error::Input(format!("unknown non-isolated label {s:?}")))
    }
}

/// Symmetric matrix `M` with `q(v) = v^T M v / 2` for a quadratic form `q`.
fn conic_matrix<F: Field>(q: &Form<F>) -> [[F; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut e = [0usize; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(e).clone();
            if i == j {
                c.clone() + c
            } else {
                c
            }
        })
    })
}

fn rows_of<F: Field>(m: &[[F; 3]; 3]) -> Vec<Vec<F>> {
    m.iter().map(|r| r.to_vec()).collect()
}

/// `F / l^2` for a linear form `l` dividing `F` twice.
fn divide_by_square(f: &Form<Fp>, l: &Form<Fp>) -> Result<Form<Fp>> {
    let l2 = l.mul(l);
    let z = f.template();
    let basis: Vec<Form<Fp>> = monos(2).iter().map(|&e| l2.mul(&Form::monomial(e, z.one_like()))).collect();
    let a: Vec<Vec<Fp>> = (0..15).map(|r| basis.iter().map(|b| b.coeffs()[r]).collect()).collect();
    let x = solve(&a, f.coeffs()).ok_or_else(|| Error::Internal("repeated line does not divide the quartic twice".into()))?;
    Form::new(2, x)
}

/// Classifies a non-reduced quartic from its repeated part `gcd(F, ∂F)`.
pub fn non_reduced_shape(f: &Form<Fp>, repeated: &Form<Fp>) -> Result<NonIsolatedLabel> {
    match repeated.degree() {
        3 => Ok(NonIsolatedLabel::LineFourth),
        2 => match rank(&rows_of(&conic_matrix(repeated))) {
            1 => Ok(NonIsolatedLabel::LineLineCube),
            2 => Ok(NonIsolatedLabel::LineSqLineSq),
            3 => Ok(NonIsolatedLabel::ConicSq),
            _ => Err(Error::Internal("zero repeated part".into())),
        },
        1 => {
            let q = divide_by_square(f, repeated)?;
            let m = conic_matrix(&q);
            let l: Vec<Fp> = (0..3)
                .map(|i| {
                    let mut e = [0usize; 3];
                    e[i] = 1;
                    *repeated.coeff(e)
                })
                .collect();
            match rank(&rows_of(&m)) {
                3 => {
                    // The line is tangent iff it lies on the dual conic adj(M).
                    let adj = |i: usize, j: usize| {
                        let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
                        let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
                        m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
                    };
                    let mut s = l[0].zero_like();
                    for i in 0..3 {
                        for j in 0..3 {
                            s = s + l[i] * adj(i, j) * l[j];
                        }
                    }
                    Ok(if s.is_zero_elem() {
                        NonIsolatedLabel::LineSqConicTangent
                    } else {
                        NonIsolatedLabel::LineSqConic
                    })
                }
                2 => {
                    let vertex = kernel(&rows_of(&m), 3, &l[0]);
                    let v = &vertex[0];
                    let through = (l[0] * v[0] + l[1] * v[1] + l[2] * v[2]).is_zero_elem();
                    Ok(if through {
                        NonIsolatedLabel::LineLineLineSqConcurrent
                    } else {
                        NonIsolatedLabel::LineLineLineSq
                    })
                }
                _ => Err(Error::Internal("cofactor of the double line is a double line".into())),
            }
        }
        d => Err(Error::Internal(format!("repeated part of unexpected degree {d}"))),
    }
}

const SERIES_LEN: usize = 14;

fn series_mul(a: &[Fq], b: &[Fq]) -> Vec<Fq> {
    let z = a[0].zero_like();
    let mut r = vec![z; SERIES_LEN];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_elem() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(SERIES_LEN - i) {
            r[i + j] = r[i + j].clone() + x.clone() * y.clone();
        }
    }
    r
}

fn series_pows(base: &[Fq], n: usize) -> Vec<Vec<Fq>> {
    let z = base[0].zero_like();
    let mut one = vec![z; SERIES_LEN];
    one[0] = base[0].one_like();
    let mut out = vec![one];
    for k in 1..=n {
        let next = series_mul(&out[k - 1], base);
        out.push(next);
    }
    out
}

/// `g(1, t, y(t))` for a form `g` and power series `y(t)`.
fn substitute(g: &Form<Fq>, t_pows: &[Vec<Fq>], y_pows: &[Vec<Fq>]) -> Vec<Fq> {
    let z = g.template();
    let mut acc = vec![z; SERIES_LEN];
    for (e, c) in monos(g.degree()).iter().zip(g.coeffs()) {
        if c.is_zero_elem() {
            continue;
        }
        let term = series_mul(&t_pows[e[1]], &y_pows[e[2]]);
        for (a, b) in acc.iter_mut().zip(term) {
            *a = a.clone() + c.clone() * b;
        }
    }
    acc
}

/// Degree of the component of `g = 0` through the smooth point `(1:0:0)`,
/// where the line `y = 0` is transverse to the curve.
fn component_degree(g: &Form<Fq>) -> Result<usize> {
    let z = g.template();
    let slope = g.coeff([3, 0, 1]).clone();
    let inv = slope
        .try_inv()
        .ok_or_else(|| Error::Internal("chosen line is not transverse".into()))?;
    let mut t = vec![z.clone(); SERIES_LEN];
    t[1] = z.one_like();
    let t_pows = series_pows(&t, 4);
    let mut y = vec![z.clone(); SERIES_LEN];
    for _ in 0..SERIES_LEN {
        let y_pows = series_pows(&y, 4);
        let r = substitute(g, &t_pows, &y_pows);
        for (a, b) in y.iter_mut().zip(r) {
            *a = a.clone() - b * inv.clone();
        }
    }
    let y_pows = series_pows(&y, 4);
    if substitute(g, &t_pows, &y_pows).iter().any(|c| !c.is_zero_elem()) {
        return Err(Error::Internal("branch expansion did not converge".into()));
    }
    for d in 1..=3usize {
        let ms = monos(d);
        let contact = 4 * d + 1;
        let columns: Vec<Vec<Fq>> = ms
            .iter()
            .map(|e| series_mul(&t_pows[e[1]], &y_pows[e[2]]))
            .collect();
        let rows: Vec<Vec<Fq>> = (0..contact)
            .map(|k| columns.iter().map(|c| c[k].clone()).collect())
            .collect();
        if rank(&rows) < ms.len() {
            return Ok(d);
        }
    }
    Ok(4)
}

/// Degrees of the irreducible components (over the algebraic closure) of a
/// reduced quartic, in decreasing order.
pub fn component_partition(f: &Form<Fp>, seed: u64) -> Result<Vec<usize>> {
    let p = f.template().modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0de_face);
    for _ in 0..40 {
        let a = random_substitution(&mut rng, p);
        let (p0, p1) = (a.m.map(|r| r[0]), a.m.map(|r| r[1]));
        // Restriction of F to the line p0 + s p1.
        let nodes: Vec<Fp> = (0..5).map(|k| Fp::from_u64(k, p)).collect();
        let vals: Vec<Fp> = nodes
            .iter()
            .map(|s| {
                let pt: [Fp; 3] = std::array::from_fn(|i| p0[i] + *s * p1[i]);
                f.eval(&pt)
            })
            .collect();
        let r = UPoly::interpolate(&nodes, &vals);
        if r.degree() != Some(4) || r.gcd(&r.derivative()).degree() != Some(0) {
            continue;
        }
        let mut degrees = Vec::new();
        let mut failed = false;
        for (phi, _) in r.factor(rng.gen()) {
            let k = phi.degree().unwrap_or(0);
            let ctx = ExtContext::new(p, phi.coeffs().iter().map(|c| c.value()).collect());
            let s = ctx.generator();
            let q: [Fq; 3] = std::array::from_fn(|i| ctx.embed(p0[i]) + s.clone() * ctx.embed(p1[i]));
            let v: [Fq; 3] = std::array::from_fn(|_| ctx.embed(random_fp(&mut rng, p)));
            let w: [Fq; 3] = std::array::from_fn(|i| ctx.embed(p1[i]));
            let m = LinearSubstitution::new(std::array::from_fn(|i| [q[i].clone(), v[i].clone(), w[i].clone()]));
            if m.det().is_zero_elem() {
                failed = true;
                break;
            }
            let g = f.map(|c| ctx.embed(*c)).act(&m);
            let d = component_degree(&g)?;
            degrees.extend(std::iter::repeat(d).take(k));
        }
        if failed {
            continue;
        }
        let mut parts = Vec::new();
        for d in (1..=4).rev() {
            let n = degrees.iter().filter(|&&x| x == d).count();
            if n % d != 0 {
                return Err(Error::Internal(format!("inconsistent component degrees {degrees:?}")));
            }
            parts.extend(std::iter::repeat(d).take(n / d));
        }
        return Ok(parts);
    }
    Err(Error::Internal("no transverse line found for component analysis".into()))
}
