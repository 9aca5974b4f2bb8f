// SPDX-License-Identifier: MIT OR Apache-2.0
//! Quartic discriminant through the Macaulay resultant of the three partial
//! derivatives, normalized by `Res(x^3, y^3, z^3) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, Rational};
use crate::forms::{mono_index, monos, partials, Form, LinearSubstitution};

/// Unimodular integer substitutions tried when the extraneous Macaulay minor
/// of the form vanishes: a fixed list followed by seeded random products of
/// unipotent lower and upper triangular matrices.
pub(crate) fn unimodular_moves() -> Vec<[[i64; 3]; 3]> {
    let mut out = vec![
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 2, 3], [0, 1, 5], [0, 0, 1]],
        [[1, 0, 0], [4, 1, 0], [-2, 3, 1]],
        [[1, 1, 0], [0, 1, 1], [1, 1, 1]],
        [[2, 1, 1], [1, 1, 0], [3, 1, 2]],
        [[1, -3, 2], [2, -5, 4], [-1, 4, 0]],
        [[1, 7, 0], [0, 1, 0], [-3, 2, 1]],
        [[5, 2, 0], [2, 1, 0], [1, 4, 1]],
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d15c);
    for _ in 0..40 {
        let (a, b, c) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        let (d, e, f) = (rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9));
        // [[1,0,0],[a,1,0],[b,c,1]] * [[1,d,e],[0,1,f],[0,0,1]]
        out.push([
            [1, d, e],
            [a, a * d + 1, a * e + f],
            [b, b * d + c, b * e + c * f + 1],
        ]);
    }
    out
}

/// Rows of the degree-7 Macaulay matrix of three ternary cubics, and the
/// indices of the extraneous minor.
fn macaulay<T: Clone>(cubics: &[Vec<T>; 3], zero: &T) -> (Vec<Vec<T>>, Vec<usize>) {
    let m7 = monos(7);
    let m3 = monos(3);
    let mut rows = Vec::with_capacity(m7.len());
    let mut minor = Vec::new();
    for (r, m) in m7.iter().enumerate() {
        let which = if m[0] >= 3 {
            0
        } else if m[1] >= 3 {
            1
        } else {
            2
        };
        let mut q = *m;
        q[which] -= 3;
        let mut row = vec![zero.clone(); m7.len()];
        for (e, c) in m3.iter().zip(&cubics[which]) {
            row[mono_index(7, e[0] + q[0], e[1] + q[1])] = c.clone();
        }
        rows.push(row);
        if m.iter().filter(|&&k| k >= 3).count() >= 2 {
            minor.push(r);
        }
    }
    (rows, minor)
}

fn field_det<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    let z = a[0][0].zero_like();
    let mut det = z.one_like();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero_elem()) else {
            return z;
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let inv = a[col][col].try_inv().expect("nonzero pivot");
        det = det * a[col][col].clone();
        for r in (col + 1)..n {
            if a[r][col].is_zero_elem() {
                continue;
            }
            let f = a[r][col].clone() * inv.clone();
            for c in col..n {
                let t = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - t;
            }
        }
    }
    det
}

/// Fraction-free determinant of an integer matrix.
pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = ((k + 1)..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, piv);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn submatrix<T: Clone>(a: &[Vec<T>], idx: &[usize]) -> Vec<Vec<T>> {
    idx.iter().map(|&r| idx.iter().map(|&c| a[r][c].clone()).collect()).collect()
}

/// `Res(F_x, F_y, F_z)` over a field.
pub(crate) fn resultant_of_partials<F: Field>(f: &Form<F>) -> F {
    resultant_by_moves(f).unwrap_or_else(|| resultant_by_perturbation(f))
}

fn cubic_partials<F: Field>(f: &Form<F>) -> [Vec<F>; 3] {
    let p = partials(f);
    [p[0].coeffs().to_vec(), p[1].coeffs().to_vec(), p[2].coeffs().to_vec()]
}

/// Interpolates `t ↦ Res(F_x + t x^3, F_y + t y^3, F_z + t z^3)` (degree at
/// most 27 in `t`) at `t = 0`, using nodes where the extraneous minor is
/// invertible.
fn resultant_by_perturbation<F: Field>(f: &Form<F>) -> F {
    let z = f.template();
    let base = cubic_partials(f);
    let corner = [0usize, mono_index(3, 0, 3), mono_index(3, 0, 0)];
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut t = 1i64;
    let limit = match f.template().characteristic() {
        0 => i64::MAX,
        p => p.min(1 << 40) as i64,
    };
    while xs.len() < 28 && t < limit {
        let tv = z.int_like(t);
        t += 1;
        if tv.is_zero_elem() {
            continue;
        }
        let mut cubics = base.clone();
        for (k, c) in cubics.iter_mut().enumerate() {
            c[corner[k]] = c[corner[k]].clone() + tv.clone();
        }
        let (rows, minor) = macaulay(&cubics, &z);
        let dm = field_det(submatrix(&rows, &minor));
        if dm.is_zero_elem() {
            continue;
        }
        let full = field_det(rows);
        xs.push(tv);
        ys.push(full * dm.try_inv().expect("nonzero minor"));
    }
    assert!(xs.len() == 28, "field too small to interpolate the perturbed resultant");
    crate::arith::upoly::UPoly::interpolate(&xs, &ys).coeff(0)
}

fn resultant_by_moves<F: Field>(f: &Form<F>) -> Option<F> {
    let z = f.template();
    for mv in unimodular_moves() {
        let a = LinearSubstitution::new(mv.map(|row| row.map(|v| z.int_like(v))));
        let cubics = cubic_partials(&f.act(&a));
        let (rows, minor) = macaulay(&cubics, &z);
        let dm = field_det(submatrix(&rows, &minor));
        if dm.is_zero_elem() {
            continue;
        }
        let full = field_det(rows);
        return Some(full * dm.try_inv().expect("nonzero minor"));
    }
    None
}

/// Exact `Res(F_x, F_y, F_z)` for a quartic with integer coefficients.
pub(crate) fn resultant_of_partials_int(coeffs: &[BigInt]) -> BigInt {
    let fr: Form<Rational> =
        Form::quartic(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()).expect("15 coefficients");
    for mv in unimodular_moves() {
        let a = LinearSubstitution::new(mv.map(|row| row.map(|v| Rational::from_integer(BigInt::from(v)))));
        let g = fr.act(&a);
        let p = partials(&g);
        let to_int = |h: &Form<Rational>| -> Vec<BigInt> { h.coeffs().iter().map(|c| c.to_integer()).collect() };
        let cubics = [to_int(&p[0]), to_int(&p[1]), to_int(&p[2])];
        let (rows, minor) = macaulay(&cubics, &BigInt::zero());
        let dm = bareiss_det(submatrix(&rows, &minor));
        if dm.is_zero() {
            continue;
        }
        let full = bareiss_det(rows);
        let (q, r) = full.div_rem(&dm);
        debug_assert!(r.is_zero(), "Macaulay minor divides the full determinant");
        return q;
    }
    resultant_by_perturbation(&fr).to_integer()
}
