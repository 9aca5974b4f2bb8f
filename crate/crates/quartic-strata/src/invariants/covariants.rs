// SPDX-License-Identifier: MIT OR Apache-2.0
//! Symbolic-method covariants of a ternary quartic, evaluated on concrete
//! coefficients over any field.
//!
//! `σ` is the contravariant obtained from `det(∂_X, ∂_Y, u)^4 f(X) f(Y)` and `ψ`
//! the one obtained from `D_{XY}^2 D_{YZ}^2 D_{ZX}^2 f(X) f(Y) f(Z)` with
//! `D_{XY} = det(∂_X, ∂_Y, u)`. Differential operators act through
//! `op(∂) form`, and `⟨a, b⟩` denotes the full contraction of equal orders.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::arith::Field;
use crate::forms::{mono_count, mono_index, monos, Form};

/// Coefficient table of a multilinear contravariant:
/// `out[g] += coef · f[a_0] · f[a_1] · ...`.
pub(crate) struct ContraTable {
    pub out_deg: usize,
    pub entries: Vec<(usize, Vec<usize>, i64)>,
}

type Mono = [u8; 12];

fn mul_poly(a: &HashMap<Mono, i128>, b: &HashMap<Mono, i128>) -> HashMap<Mono, i128> {
    let mut r: HashMap<Mono, i128> = HashMap::new();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k = *ka;
            for i in 0..12 {
                k[i] += kb[i];
            }
            *r.entry(k).or_insert(0) += va * vb;
        }
    }
    r.retain(|_, v| *v != 0);
    r
}

/// `det(∂_{X_s1}, ∂_{X_s2}, u)` with `u` in slots 0..3 and the variables of
/// copy `s` in slots `3 + 3s .. 6 + 3s`.
fn cross_op(s1: usize, s2: usize) -> HashMap<Mono, i128> {
    let mut r = HashMap::new();
    let perms: [([usize; 3], i128); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([2, 1, 0], -1),
    ];
    for (p, sign) in perms {
        let mut k = [0u8; 12];
        k[p[0]] += 1;
        k[3 + 3 * s1 + p[1]] += 1;
        k[3 + 3 * s2 + p[2]] += 1;
        *r.entry(k).or_insert(0) += sign;
    }
    r
}

fn factorial(n: u8) -> i128 {
    (1..=n as i128).product()
}

fn build_table(op: &HashMap<Mono, i128>, nslots: usize, out_deg: usize) -> ContraTable {
    let mut merged: HashMap<(usize, Vec<usize>), i128> = HashMap::new();
    for (k, c) in op {
        let g = mono_index(out_deg, k[0] as usize, k[1] as usize);
        let mut slots = Vec::with_capacity(nslots);
        let mut coef = *c;
        for s in 0..nslots {
            let a = &k[3 + 3 * s..6 + 3 * s];
            let d = (a[0] + a[1] + a[2]) as usize;
            slots.push(mono_index(d, a[0] as usize, a[1] as usize));
            coef *= factorial(a[0]) * factorial(a[1]) * factorial(a[2]);
        }
        slots.sort_unstable();
        *merged.entry((g, slots)).or_insert(0) += coef;
    }
    let mut entries: Vec<(usize, Vec<usize>, i64)> = merged
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((g, s), c)| (g, s, i64::try_from(c).expect("table coefficient fits in i64")))
        .collect();
    entries.sort();
    ContraTable { out_deg, entries }
}

pub(crate) fn sigma_table() -> &'static ContraTable {
    static T: OnceLock<ContraTable> = OnceLock::new();
    T.get_or_init(|| {
        let c = cross_op(0, 1);
        let op = mul_poly(&mul_poly(&c, &c), &mul_poly(&c, &c));
        build_table(&op, 2, 4)
    })
}

pub(crate) fn psi_table() -> &'static ContraTable {
    static T: OnceLock<ContraTable> = OnceLock::new();
    T.get_or_init(|| {
        let a = cross_op(0, 1);
        let b = cross_op(1, 2);
        let c = cross_op(2, 0);
        let op = mul_poly(
            &mul_poly(&mul_poly(&a, &a), &mul_poly(&b, &b)),
            &mul_poly(&c, &c),
        );
        build_table(&op, 3, 6)
    })
}

/// Evaluates a contravariant table on the coefficients of `f`.
pub(crate) fn contravariant<F: Field>(table: &ContraTable, f: &Form<F>) -> Form<F> {
    let z = f.template();
    let mut out = vec![z.clone(); mono_count(table.out_deg)];
    let c = f.coeffs();
    for (g, slots, coef) in &table.entries {
        let mut prod = c[slots[0]].clone();
        if prod.is_zero_elem() {
            continue;
        }
        let mut zero = false;
        for &s in &slots[1..] {
            if c[s].is_zero_elem() {
                zero = true;
                break;
            }
            prod = prod * c[s].clone();
        }
        if zero {
            continue;
        }
        out[*g] = out[*g].clone() + prod * z.int_like(*coef);
    }
    Form::new(table.out_deg, out).expect("table output size")
}

fn falling(n: usize, k: usize) -> i64 {
    ((n - k + 1)..=n).map(|x| x as i64).product()
}

/// `op(∂) form`: the differential operator `op` applied to `form`.
pub(crate) fn apply<F: Field>(op: &Form<F>, form: &Form<F>) -> Form<F> {
    let (m, n) = (op.degree(), form.degree());
    assert!(m <= n, "operator order exceeds form degree");
    let z = form.template();
    let mut out = vec![z.clone(); mono_count(n - m)];
    let mb = monos(n);
    for (a, ca) in monos(m).iter().zip(op.coeffs()) {
        if ca.is_zero_elem() {
            continue;
        }
        for (b, cb) in mb.iter().zip(form.coeffs()) {
            if cb.is_zero_elem() || b[0] < a[0] || b[1] < a[1] || b[2] < a[2] {
                continue;
            }
            let k = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
            let mult = falling(b[0], a[0]) * falling(b[1], a[1]) * falling(b[2], a[2]);
            let idx = mono_index(n - m, k[0], k[1]);
            out[idx] = out[idx].clone() + ca.clone() * cb.clone() * z.int_like(mult);
        }
    }
    Form::new(n - m, out).expect("apply output size")
}

/// Full contraction of two forms of equal degree.
pub(crate) fn pair<F: Field>(a: &Form<F>, b: &Form<F>) -> F {
    assert_eq!(a.degree(), b.degree());
    apply(a, b).coeffs()[0].clone()
}

pub(crate) fn hessian<F: Field>(f: &Form<F>) -> Form<F> {
    let d: Vec<Vec<Form<F>>> = (0..3)
        .map(|i| (0..3).map(|j| f.derivative(i).derivative(j)).collect())
        .collect();
    let t = |a: &Form<F>, b: &Form<F>, c: &Form<F>| a.mul(b).mul(c);
    t(&d[0][0], &d[1][1], &d[2][2])
        .add(&t(&d[0][1], &d[1][2], &d[2][0]))
        .add(&t(&d[0][2], &d[1][0], &d[2][1]))
        .sub(&t(&d[0][2], &d[1][1], &d[2][0]))
        .sub(&t(&d[0][0], &d[1][2], &d[2][1]))
        .sub(&t(&d[0][1], &d[1][0], &d[2][2]))
}

/// Symmetric matrix `M` with `q(v) = vᵀ M v`.
pub(crate) fn quad_matrix<F: Field>(q: &Form<F>) -> [[F; 3]; 3] {
    assert_eq!(q.degree(), 2);
    let z = q.template();
    let half = z.int_like(2).try_inv().expect("characteristic is not 2");
    let mut m: [[F; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| z.clone()));
    for (e, c) in monos(2).iter().zip(q.coeffs()) {
        let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat(i).take(e[i])).collect();
        if idx[0] == idx[1] {
            m[idx[0]][idx[0]] = c.clone();
        } else {
            let h = c.clone() * half.clone();
            m[idx[0]][idx[1]] = h.clone();
            m[idx[1]][idx[0]] = h;
        }
    }
    m
}

pub(crate) fn det3<F: Field>(m: &[[F; 3]; 3]) -> F {
    m[0][0].clone() * (m[1][1].clone() * m[2][2].clone() - m[1][2].clone() * m[2][1].clone())
        - m[0][1].clone() * (m[1][0].clone() * m[2][2].clone() - m[1][2].clone() * m[2][0].clone())
        + m[0][2].clone() * (m[1][0].clone() * m[2][1].clone() - m[1][1].clone() * m[2][0].clone())
}

/// Adjugate of the matrix of `q`, returned as a quadratic form
/// `Σ C_ij v_i v_j`.
pub(crate) fn adjugate<F: Field>(q: &Form<F>) -> Form<F> {
    let m = quad_matrix(q);
    let z = q.template();
    let mut out = Form::zero(2, &z);
    for i in 0..3 {
        for j in 0..3 {
            let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
            let mut c = m[rows[0]][cols[0]].clone() * m[rows[1]][cols[1]].clone()
                - m[rows[0]][cols[1]].clone() * m[rows[1]][cols[0]].clone();
            if (i + j) % 2 == 1 {
                c = -c;
            }
            let mut e = [0usize; 3];
            e[i] += 1;
            e[j] += 1;
            let slot = out.coeff_mut(e);
            *slot = slot.clone() + c;
        }
    }
    out
}

/// The twelve uncalibrated invariants of weights 3..21, in the fixed order
/// (the J9 entry is `⟨ρ, τ₂⟩` before its correction).
pub(crate) fn raw_invariants<F: Field>(f: &Form<F>) -> [F; 12] {
    let sg = contravariant(sigma_table(), f);
    let ps = contravariant(psi_table(), f);
    let h = hessian(f);
    let rho = apply(f, &ps);
    let tau = apply(&rho, f);
    let tau2 = apply(&sg, &h);
    let xi2 = apply(&tau2, &sg);
    let i3 = pair(&sg, f);
    let k6 = pair(&ps, &h);
    let sixth = f.template().int_like(6).try_inv().expect("characteristic is not 2 or 3");
    let i6 = k6 - i3.clone() * i3.clone() * sixth;
    let adj_rho = adjugate(&rho);
    [
        i3,
        i6,
        pair(&rho, &tau),
        pair(&rho, &tau2),
        det3(&quad_matrix(&rho)),
        pair(&xi2, &tau),
        det3(&quad_matrix(&tau)),
        det3(&quad_matrix(&tau2)),
        pair(&adjugate(&tau), &adj_rho),
        pair(&adjugate(&tau2), &adj_rho),
        det3(&quad_matrix(&xi2)),
        pair(&rho, &apply(&xi2, &apply(&xi2, &h))),
    ]
}
