// SPDX-License-Identifier: MIT OR Apache-2.0
//! Coefficient fields: the rationals and prime fields with their extensions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{inv_mod, mul_mod, Rational};

/// Arithmetic interface shared by every coefficient field.
///
/// Elements carry their own context (a modulus, an extension polynomial), so
/// constants are produced from an existing element with the `*_like` methods.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, v: i64) -> Self;
    /// Image of a rational number; `None` when the denominator is not invertible.
    fn rational_like(&self, q: &Rational) -> Option<Self>;
    fn is_zero_elem(&self) -> bool;
    fn try_inv(&self) -> Option<Self>;
    /// Characteristic of the field, 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// The element as a rational number, for fields of characteristic 0.
    fn to_rational(&self) -> Option<Rational> {
        None
    }

    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    fn div_elem(&self, other: &Self) -> Option<Self> {
        other.try_inv().map(|i| self.clone() * i)
    }
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn int_like(&self, v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn rational_like(&self, q: &Rational) -> Option<Self> {
        Some(q.clone())
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Element of the prime field `Z/pZ` for a prime `p < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        let r = (v as i128).rem_euclid(p as i128) as u64;
        Fp { v: r, p }
    }

    pub fn from_u64(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_bigint(v: &BigInt, p: u64) -> Self {
        let r = v.mod_floor(&BigInt::from(p));
        Fp {
            v: r.to_u64().expect("reduced residue fits in u64"),
            p,
        }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i64 {
        if self.v > self.p / 2 {
            -((self.p - self.v) as i64)
        } else {
            self.v as i64
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let (s, over) = self.v.overflowing_add(o.v);
        let s = if over || s >= self.p { s.wrapping_sub(self.p) } else { s };
        Fp { v: s, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let v = if self.v >= o.v { self.v - o.v } else { self.v + (self.p - o.v) };
        Fp { v, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        Fp {
            v: mul_mod(self.v, o.v, self.p),
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.p, p: self.p }
    }
    fn int_like(&self, v: i64) -> Self {
        Fp::new(v, self.p)
    }
    fn rational_like(&self, q: &Rational) -> Option<Self> {
        let d = Fp::from_bigint(q.denom(), self.p);
        let n = Fp::from_bigint(q.numer(), self.p);
        d.try_inv().map(|i| n * i)
    }
    fn is_zero_elem(&self) -> bool {
        self.v == 0
    }
    fn try_inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(Fp {
                v: inv_mod(self.v, self.p).expect("nonzero residue modulo a prime"),
                p: self.p,
            })
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Integer content helper used when clearing denominators of rational vectors.
pub fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Greatest common divisor of the absolute values of a list of integers.
pub fn content<'a, I: IntoIterator<Item = &'a BigInt>>(it: I) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(&v.abs()))
}
