// SPDX-License-Identifier: MIT OR Apache-2.0
//! Singular points of a quartic over a prime field (found over extensions by
//! bivariate elimination) and the repeated part of a non-reduced quartic.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::ext::{ExtContext, Fq};
use crate::arith::upoly::UPoly;
use crate::arith::{Field, Fp};
use crate::error::{Error, Result};
use crate::forms::{monos, partials, Form, LinearSubstitution};

/// A singular point, with coordinates in an extension of `F_p` whose degree
/// equals the number of Galois conjugates of the point.
#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub coords: [Fq; 3],
    /// Number of conjugate points represented (the extension degree).
    pub conjugates: usize,
    /// Multiplicity of the point on the curve (2 for a double point, ...).
    pub multiplicity: usize,
}

/// Singular locus of a quartic.
#[derive(Clone, Debug)]
pub enum SingularLocus {
    /// Finitely many singular points (the quartic is squarefree).
    Isolated(Vec<SingularPoint>),
    /// The quartic has a repeated factor; the form is `gcd(F, ∂F)` up to scaling.
    NonReduced(Form<Fp>),
}

pub(crate) fn random_fp(rng: &mut ChaCha8Rng, p: u64) -> Fp {
    Fp::from_u64(rng.gen::<u64>(), p)
}

pub(crate) fn random_substitution(rng: &mut ChaCha8Rng, p: u64) -> LinearSubstitution<Fp> {
    loop {
        let m: [[Fp; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| random_fp(rng, p)));
        let a = LinearSubstitution::new(m);
        if !a.det().is_zero_elem() {
            return a;
        }
    }
}

/// Univariate polynomial in the second variable of `g(t, y, 1)` for a form `g`.
fn restrict_x<F: Field>(g: &Form<F>, t: &F) -> UPoly<F> {
    let z = g.template();
    let mut c = vec![z.clone(); g.degree() + 1];
    for (e, coef) in monos(g.degree()).iter().zip(g.coeffs()) {
        if !coef.is_zero_elem() {
            c[e[1]] = c[e[1]].clone() + coef.clone() * t.pow_u64(e[0] as u64);
        }
    }
    UPoly::new(c, z)
}

/// Univariate polynomial `g(x, 1, 0)` in `x`.
fn restrict_infinity<F: Field>(g: &Form<F>) -> UPoly<F> {
    let z = g.template();
    let mut c = vec![z.clone(); g.degree() + 1];
    for (e, coef) in monos(g.degree()).iter().zip(g.coeffs()) {
        if e[2] == 0 {
            c[e[0]] = c[e[0]].clone() + coef.clone();
        }
    }
    UPoly::new(c, z)
}

fn embed_form(f: &Form<Fp>, ctx: &Arc<ExtContext>) -> Form<Fq> {
    f.map(|c| ctx.embed(*c))
}

fn eval_nodes(p: u64, count: usize) -> Vec<Fp> {
    (1..=count as u64).filter(|&t| t < p).map(|t| Fp::from_u64(t, p)).collect()
}

/// `Res_y(a(x, y), b(x, y))` as a polynomial in `x`, by evaluation at `x = t`
/// and interpolation; both inputs must have constant nonzero leading
/// coefficient in `y`.
fn resultant_in_x(a: &Form<Fp>, b: &Form<Fp>, nodes: &[Fp]) -> UPoly<Fp> {
    let vals: Vec<Fp> = nodes
        .iter()
        .map(|t| restrict_x(a, t).resultant(&restrict_x(b, t)))
        .collect();
    UPoly::interpolate(nodes, &vals)
}

/// Leading coefficient in `y` (the coefficient of `y^deg`).
fn y_lead(f: &Form<Fp>) -> Fp {
    f.coeff([0, f.degree(), 0]).clone()
}

/// Repeated part `gcd(F, F_y)` of a quartic (in its own coordinates) when it
/// is not squarefree.
fn repeated_part(f: &Form<Fp>, rng: &mut ChaCha8Rng) -> Result<Option<Form<Fp>>> {
    let p = f.template().modulus();
    for _ in 0..20 {
        let a = random_substitution(rng, p);
        let g = f.act(&a);
        if y_lead(&g).is_zero_elem() {
            continue;
        }
        let gy = g.derivative(1);
        let nodes = eval_nodes(p, 24);
        let mut gcds: Vec<(Fp, UPoly<Fp>)> = nodes
            .iter()
            .map(|t| (*t, restrict_x(&g, t).gcd(&restrict_x(&gy, t))))
            .collect();
        let r = gcds.iter().map(|(_, h)| h.degree().unwrap_or(0)).min().unwrap_or(0);
        if r == 0 {
            return Ok(None);
        }
        gcds.retain(|(_, h)| h.degree() == Some(r));
        if gcds.len() < 8 {
            continue;
        }
        // R(x, y) = y^r + Σ_{j<r} c_j(x) y^j with deg c_j ≤ r - j.
        let xs: Vec<Fp> = gcds.iter().map(|(t, _)| *t).collect();
        let mut rform = Form::zero(r, &f.template());
        let mut consistent = true;
        for j in 0..=r {
            let ys: Vec<Fp> = gcds.iter().map(|(_, h)| h.coeff(j)).collect();
            let cj = UPoly::interpolate(&xs[..r + 1], &ys[..r + 1]);
            if xs.iter().zip(&ys).any(|(x, y)| cj.eval(x) != *y) {
                consistent = false;
                break;
            }
            for (i, c) in cj.coeffs().iter().enumerate() {
                if i + j > r {
                    consistent = false;
                    break;
                }
                *rform.coeff_mut([i, j, r - i - j]) = *c;
            }
        }
        if !consistent {
            continue;
        }
        let back = a.inverse().expect("invertible substitution");
        return Ok(Some(rform.act(&back)));
    }
    Err(Error::Internal("repeated-factor detection did not stabilize".into()))
}

/// All singular points of a quartic over `F_p` (over the algebraic closure,
/// grouped in Galois orbits), or the repeated part of a non-reduced quartic.
pub fn singular_points(f: &Form<Fp>, seed: u64) -> Result<SingularLocus> {
    if f.degree() != 4 {
        return Err(Error::Input("singular_points expects a quartic".into()));
    }
    if f.is_zero() {
        return Err(Error::Input("the zero form does not define a curve".into()));
    }
    let p = f.template().modulus();
    if p < 11 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51a9_c0de);
    if let Some(r) = repeated_part(f, &mut rng)? {
        return Ok(SingularLocus::NonReduced(r));
    }
    'attempt: for _ in 0..40 {
        let a = random_substitution(&mut rng, p);
        let g = f.act(&a);
        let [gx, gy, gz] = partials(&g);
        // Points at infinity (z = 0) are avoided by the random substitution.
        let inf = restrict_infinity(&gx)
            .gcd(&restrict_infinity(&gy))
            .gcd(&restrict_infinity(&gz));
        let at_x_axis = [gx.coeff([3, 0, 0]), gy.coeff([3, 0, 0]), gz.coeff([3, 0, 0])]
            .iter()
            .all(|c| c.is_zero_elem());
        if inf.degree().map_or(true, |d| d > 0) || at_x_axis {
            continue;
        }
        // Three random combinations of the partials with nonzero y^3 term.
        let mut combos = Vec::new();
        for _ in 0..3 {
            let (s, t, u) = (random_fp(&mut rng, p), random_fp(&mut rng, p), random_fp(&mut rng, p));
            let l = gx.scale(&s).add(&gy.scale(&t)).add(&gz.scale(&u));
            if y_lead(&l).is_zero_elem() {
                continue 'attempt;
            }
            combos.push(l);
        }
        let nodes = eval_nodes(p, 14);
        if nodes.len() < 10 {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        let r1 = resultant_in_x(&combos[0], &combos[1], &nodes);
        let r2 = resultant_in_x(&combos[0], &combos[2], &nodes);
        let h = r1.gcd(&r2);
        if h.is_zero() {
            continue;
        }
        let mut points = Vec::new();
        for (phi, _) in h.factor(rng.gen()) {
            let k = phi.degree().unwrap_or(0);
            if k == 0 {
                continue;
            }
            let modulus: Vec<u64> = phi.coeffs().iter().map(|c| c.value()).collect();
            let ctx = ExtContext::new(p, modulus);
            let x0 = ctx.generator();
            let parts: Vec<UPoly<Fq>> = [&gx, &gy, &gz]
                .iter()
                .map(|q| restrict_x(&embed_form(q, &ctx), &x0))
                .collect();
            let common = parts[0].gcd(&parts[1]).gcd(&parts[2]);
            let common = common.divrem(&common.gcd(&common.derivative())).0.monic();
            match common.degree() {
                Some(0) | None => continue,
                Some(1) => {}
                Some(_) => continue 'attempt,
            }
            let y0 = -common.coeff(0);
            let one = x0.one_like();
            let pt_g = [x0.clone(), y0, one];
            let a_ext = LinearSubstitution::new(a.m.map(|row| row.map(|c| ctx.embed(c))));
            let pt = a_ext.apply(&pt_g);
            let fq = embed_form(f, &ctx);
            let local = crate::forms::localize(&fq, &pt, 4)?;
            let multiplicity = local.multiplicity().unwrap_or(4);
            if multiplicity < 2 {
                continue 'attempt;
            }
            points.push(SingularPoint {
                coords: pt,
                conjugates: k,
                multiplicity,
            });
        }
        return Ok(SingularLocus::Isolated(points));
    }
    Err(Error::Internal("singular point search did not find a generic substitution".into()))
}
