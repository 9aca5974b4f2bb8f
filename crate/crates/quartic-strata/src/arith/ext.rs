// SPDX-License-Identifier: MIT OR Apache-2.0
//! Finite extension fields `F_p[t]/(m(t))` with `m` monic irreducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Field, Fp};
use super::{inv_mod, mul_mod, Rational};

/// Shared description of an extension field.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtContext {
    p: u64,
    /// Monic modulus, coefficients in ascending order, length `degree + 1`.
    modulus: Vec<u64>,
}

impl ExtContext {
    /// Builds the context from a monic irreducible polynomial over `F_p`
    /// (ascending coefficients). Irreducibility is the caller's responsibility.
    pub fn new(p: u64, modulus: Vec<u64>) -> Arc<Self> {
        assert!(modulus.len() >= 2, "extension modulus must have positive degree");
        assert_eq!(*modulus.last().unwrap(), 1, "extension modulus must be monic");
        Arc::new(ExtContext { p, modulus })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The class of `t`, a root of the modulus.
    pub fn generator(self: &Arc<Self>) -> Fq {
        let mut c = vec![0; self.degree()];
        if self.degree() == 1 {
            c[0] = (self.p - self.modulus[0]) % self.p;
        } else {
            c[1] = 1;
        }
        Fq { c, ctx: self.clone() }
    }

    pub fn embed(self: &Arc<Self>, a: Fp) -> Fq {
        let mut c = vec![0; self.degree()];
        c[0] = a.value();
        Fq { c, ctx: self.clone() }
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let k = self.degree();
        let p = self.p;
        while v.len() > k {
            let top = v.pop().unwrap();
            if top != 0 {
                let base = v.len() - k;
                for (i, m) in self.modulus[..k].iter().enumerate() {
                    let s = mul_mod(top, *m, p);
                    v[base + i] = (v[base + i] + p - s) % p;
                }
            }
        }
        v.resize(k, 0);
        v
    }
}

/// Element of an extension field of `F_p`.
#[derive(Clone)]
pub struct Fq {
    c: Vec<u64>,
    ctx: Arc<ExtContext>,
}

impl Fq {
    pub fn context(&self) -> &Arc<ExtContext> {
        &self.ctx
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.c
    }

    /// The element as an `F_p` value when it lies in the prime field.
    pub fn as_prime(&self) -> Option<Fp> {
        if self.c[1..].iter().all(|&x| x == 0) {
            Some(Fp::from_u64(self.c[0], self.ctx.p))
        } else {
            None
        }
    }
}

impl PartialEq for Fq {
    fn eq(&self, o: &Self) -> bool {
        (Arc::ptr_eq(&self.ctx, &o.ctx) || self.ctx == o.ctx) && self.c == o.c
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} in F_{}^{}", self.c, self.ctx.p, self.ctx.degree())
    }
}

impl Add for Fq {
    type Output = Fq;
    fn add(mut self, o: Fq) -> Fq {
        let p = self.ctx.p;
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            *a = (*a + *b) % p;
        }
        self
    }
}

impl Sub for Fq {
    type Output = Fq;
    fn sub(mut self, o: Fq) -> Fq {
        let p = self.ctx.p;
        for (a, b) in self.c.iter_mut().zip(o.c.iter()) {
            *a = (*a + p - *b) % p;
        }
        self
    }
}

impl Neg for Fq {
    type Output = Fq;
    fn neg(mut self) -> Fq {
        let p = self.ctx.p;
        for a in self.c.iter_mut() {
            *a = (p - *a) % p;
        }
        self
    }
}

impl Mul for Fq {
    type Output = Fq;
    fn mul(self, o: Fq) -> Fq {
        let p = self.ctx.p;
        let k = self.c.len();
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                if b != 0 {
                    prod[i + j] = (prod[i + j] + mul_mod(a, b, p)) % p;
                }
            }
        }
        let c = self.ctx.reduce(prod);
        Fq { c, ctx: self.ctx }
    }
}

/// Extended Euclid over `F_p[t]`; returns the inverse of `a` modulo `m`.
fn poly_inverse(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    fn trim(v: &mut Vec<u64>) {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    }
    fn deg(v: &[u64]) -> isize {
        let mut d = v.len() as isize - 1;
        while d >= 0 && v[d as usize] == 0 {
            d -= 1;
        }
        d
    }
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1) = (vec![0u64], vec![1u64]);
    trim(&mut r1);
    while deg(&r1) >= 0 {
        let d1 = deg(&r1) as usize;
        let lead_inv = inv_mod(r1[d1], p)?;
        let mut q = vec![0u64; r0.len().max(1)];
        let mut r = r0.clone();
        while deg(&r) >= d1 as isize {
            let dr = deg(&r) as usize;
            let coef = mul_mod(r[dr], lead_inv, p);
            q[dr - d1] = (q[dr - d1] + coef) % p;
            for i in 0..=d1 {
                let s = mul_mod(coef, r1[i], p);
                r[dr - d1 + i] = (r[dr - d1 + i] + p - s) % p;
            }
        }
        // s_next = s0 - q*s1
        let mut qs = vec![0u64; q.len() + s1.len()];
        for (i, &qa) in q.iter().enumerate() {
            for (j, &sb) in s1.iter().enumerate() {
                qs[i + j] = (qs[i + j] + mul_mod(qa, sb, p)) % p;
            }
        }
        let mut s2 = vec![0u64; qs.len().max(s0.len())];
        for (i, v) in s0.iter().enumerate() {
            s2[i] = *v;
        }
        for (i, v) in qs.iter().enumerate() {
            s2[i] = (s2[i] + p - *v) % p;
        }
        trim(&mut s2);
        trim(&mut r);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if deg(&r0) != 0 {
        return None;
    }
    let c = inv_mod(r0[0], p)?;
    Some(s0.iter().map(|&v| mul_mod(v, c, p)).collect())
}

impl Field for Fq {
    fn zero_like(&self) -> Self {
        Fq {
            c: vec![0; self.c.len()],
            ctx: self.ctx.clone(),
        }
    }
    fn one_like(&self) -> Self {
        let mut c = vec![0; self.c.len()];
        c[0] = 1;
        Fq { c, ctx: self.ctx.clone() }
    }
    fn int_like(&self, v: i64) -> Self {
        self.ctx.embed(Fp::new(v, self.ctx.p))
    }
    fn rational_like(&self, q: &Rational) -> Option<Self> {
        Fp::new(0, self.ctx.p)
            .rational_like(q)
            .map(|x| self.ctx.embed(x))
    }
    fn is_zero_elem(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        let inv = poly_inverse(&self.c, &self.ctx.modulus, self.ctx.p)?;
        let c = self.ctx.reduce(inv);
        Some(Fq { c, ctx: self.ctx.clone() })
    }
    fn characteristic(&self) -> u64 {
        self.ctx.p
    }
}
