// SPDX-License-Identifier: MIT OR Apache-2.0
//! Dense univariate polynomials over a [`Field`], with factorization over
//! prime fields (distinct-degree plus Cantor-Zassenhaus splitting).

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Fp};

/// Polynomial with coefficients in ascending order and no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F: Field> {
    c: Vec<F>,
    zero: F,
}

impl<F: Field> UPoly<F> {
    pub fn new(mut c: Vec<F>, zero: F) -> Self {
        let zero = zero.zero_like();
        while c.last().map_or(false, |x| x.is_zero_elem()) {
            c.pop();
        }
        UPoly { c, zero }
    }

    pub fn zero(template: &F) -> Self {
        UPoly::new(vec![], template.zero_like())
    }

    pub fn constant(v: F) -> Self {
        let z = v.zero_like();
        UPoly::new(vec![v], z)
    }

    /// The polynomial `t - a`.
    pub fn linear_root(a: F) -> Self {
        let one = a.one_like();
        let z = a.zero_like();
        UPoly::new(vec![-a, one], z)
    }

    pub fn template(&self) -> &F {
        &self.zero
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> F {
        self.c.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.is_empty() {
            None
        } else {
            Some(self.c.len() - 1)
        }
    }

    pub fn lead(&self) -> F {
        self.c.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.zero.clone();
        for c in self.c.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i) + o.coeff(i)).collect();
        UPoly::new(c, self.zero.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i) - o.coeff(i)).collect();
        UPoly::new(c, self.zero.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.zero);
        }
        let mut c = vec![self.zero.clone(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(c, self.zero.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        UPoly::new(self.c.iter().map(|a| a.clone() * s.clone()).collect(), self.zero.clone())
    }

    pub fn monic(&self) -> Self {
        match self.lead().try_inv() {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.clone() * a.int_like(i as i64))
            .collect();
        UPoly::new(c, self.zero.clone())
    }

    /// Euclidean division; panics on division by zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.lead().try_inv().expect("leading coefficient invertible");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UPoly::zero(&self.zero), self.clone());
        }
        let mut q = vec![self.zero.clone(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let coef = r[k].clone() * inv.clone();
            if coef.is_zero_elem() {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].clone() - coef.clone() * dc.clone();
            }
            q[k - dd] = coef;
        }
        r.truncate(dd);
        (UPoly::new(q, self.zero.clone()), UPoly::new(r, self.zero.clone()))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &Self) -> Self {
        let mut result = UPoly::constant(self.zero.one_like()).rem(m);
        let base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    /// Resultant of two polynomials over a field.
    pub fn resultant(&self, o: &Self) -> F {
        let (Some(da), Some(db)) = (self.degree(), o.degree()) else {
            return self.zero.clone();
        };
        if db == 0 {
            return o.lead().pow_u64(da as u64);
        }
        if da == 0 {
            return self.lead().pow_u64(db as u64);
        }
        let r = self.rem(o);
        let sign_flip = (da * db) % 2 == 1;
        match r.degree() {
            None => self.zero.clone(),
            Some(dr) => {
                let mut v = o.lead().pow_u64((da - dr) as u64) * o.resultant(&r);
                if sign_flip {
                    v = -v;
                }
                v
            }
        }
    }

    /// Lagrange interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[F], ys: &[F]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let zero = xs[0].zero_like();
        let mut result = UPoly::zero(&zero);
        for i in 0..xs.len() {
            let mut basis = UPoly::constant(zero.one_like());
            let mut denom = zero.one_like();
            for j in 0..xs.len() {
                if i != j {
                    basis = basis.mul(&UPoly::linear_root(xs[j].clone()));
                    denom = denom * (xs[i].clone() - xs[j].clone());
                }
            }
            let s = ys[i].clone() * denom.try_inv().expect("distinct interpolation nodes");
            result = result.add(&basis.scale(&s));
        }
        result
    }
}

impl UPoly<Fp> {
    fn prime(&self) -> u64 {
        self.zero.modulus()
    }

    /// Squarefree decomposition `f = Π g_i^i` (characteristic larger than the degree).
    pub fn squarefree_parts(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        let f = self.monic();
        let fp = f.derivative();
        let mut c = f.gcd(&fp);
        let mut w = f.divrem(&c).0;
        let mut i = 1;
        while w.degree().map_or(false, |d| d > 0) {
            let y = w.gcd(&c);
            let z = w.divrem(&y).0;
            if z.degree().map_or(false, |d| d > 0) {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.divrem(&w).0;
        }
        out
    }

    /// Full factorization into monic irreducibles with multiplicities.
    pub fn factor(&self, seed: u64) -> Vec<(Self, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (g, mult) in self.squarefree_parts() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, &mut rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            let ka: Vec<u64> = a.0.c.iter().map(|x| x.value()).collect();
            let kb: Vec<u64> = b.0.c.iter().map(|x| x.value()).collect();
            (a.0.c.len(), ka).cmp(&(b.0.c.len(), kb))
        });
        out
    }

    /// Distinct-degree factorization of a squarefree monic polynomial.
    fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let p = BigUint::from(self.prime());
        let t = UPoly::new(vec![self.zero, self.zero.one_like()], self.zero);
        let mut out = Vec::new();
        let mut f = self.clone();
        let mut h = t.clone();
        let mut d = 0;
        while let Some(df) = f.degree() {
            if df < 2 * (d + 1) {
                if df > 0 {
                    out.push((f.clone(), df));
                }
                break;
            }
            d += 1;
            h = h.powmod(&p, &f);
            let g = h.sub(&t).gcd(&f);
            if g.degree().map_or(false, |x| x > 0) {
                out.push((g.clone(), d));
                f = f.divrem(&g).0;
                h = h.rem(&f);
            }
        }
        out
    }

    /// Splits a product of distinct irreducibles of common degree `d`.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<Self> {
        let n = self.degree().unwrap_or(0);
        if n == d {
            return vec![self.monic()];
        }
        let p = self.prime();
        let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let c: Vec<Fp> = (0..n).map(|_| Fp::from_u64(rng.gen::<u64>(), p)).collect();
            let a = UPoly::new(c, self.zero);
            if a.degree().is_none() {
                continue;
            }
            let b = a.powmod(&e, self).sub(&UPoly::constant(self.zero.one_like()));
            let g = b.gcd(self);
            if let Some(dg) = g.degree() {
                if dg > 0 && dg < n {
                    let other = self.divrem(&g).0;
                    let mut res = g.equal_degree(d, rng);
                    res.extend(other.equal_degree(d, rng));
                    return res;
                }
            }
        }
    }

    /// Roots in the prime field, with multiplicity.
    pub fn roots(&self, seed: u64) -> Vec<(Fp, usize)> {
        self.factor(seed)
            .into_iter()
            .filter(|(f, _)| f.degree() == Some(1))
            .map(|(f, m)| (-f.coeff(0), m))
            .collect()
    }
}
