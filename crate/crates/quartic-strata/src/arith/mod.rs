// SPDX-License-Identifier: MIT OR Apache-2.0
//! Exact arithmetic over the rationals and prime fields, with p-adic
//! valuations on weighted projective points.

pub mod ext;
pub mod field;
pub mod upoly;

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use field::{Field, Fp};

/// Exact rational number with a canonical (reduced, positive denominator) form.
pub type Rational = BigRational;

/// Weights of the 13 Dixmier-Ohno invariants in the fixed order
/// I3, I6, I9, J9, I12, J12, I15, J15, I18, J18, I21, J21, I27.
pub const WEIGHTS: [u32; 13] = [3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27];

/// Names of the 13 invariants in the fixed order.
pub const INVARIANT_NAMES: [&str; 13] = [
    "I3", "I6", "I9", "J9", "I12", "J12", "I15", "J15", "I18", "J18", "I21", "J21", "I27",
];

/// Builds a rational from a numerator and denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a`, `-a/b` style rational literals.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

// ---------------------------------------------------------------------------
// Modular helpers
// ---------------------------------------------------------------------------

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest prime strictly below `n`.
pub fn prev_prime(mut n: u64) -> u64 {
    loop {
        n -= 1;
        if is_prime_u64(n) {
            return n;
        }
    }
}

/// Probabilistic primality test for arbitrary-size integers (Miller-Rabin with
/// 24 fixed bases; exact for inputs below 2^64).
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let bases: [u64; 24] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    ];
    'witness: for a in bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::Input(format!("{p} is not prime")))
    }
}

/// Rejects the residue characteristics excluded from the theory.
pub fn require_supported_prime(p: u64) -> Result<()> {
    require_prime(p)?;
    if p <= 7 {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// Value of a discrete valuation: an integer or `+∞` (the valuation of zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

/// Valuation of a nonzero integer at `p`.
pub fn val_int(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Exact p-adic valuation of a rational number.
pub fn val_p(q: &Rational, p: u64) -> Result<Valuation> {
    require_prime(p)?;
    if q.is_zero() {
        return Ok(Valuation::Infinity);
    }
    Ok(Valuation::Finite(val_int(q.numer(), p) - val_int(q.denom(), p)))
}

/// A rational number or `+∞`; used for normalized valuations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    pub fn is_positive(&self) -> bool {
        match self {
            ExtRational::Finite(q) => q.is_positive(),
            ExtRational::Infinity => true,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(q) => write!(f, "{q}"),
            ExtRational::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// ---------------------------------------------------------------------------
// Weighted projective points
// ---------------------------------------------------------------------------

/// A point of the weighted projective space with weights [`WEIGHTS`].
///
/// The all-zero tuple is representable (it is the GIT-unstable marker) but is
/// rejected by the comparison operations.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedPoint<F> {
    pub coords: Vec<F>,
}

impl<F: Field> WeightedPoint<F> {
    pub fn new(coords: Vec<F>) -> Self {
        assert_eq!(coords.len(), 13, "a weighted point has 13 coordinates");
        WeightedPoint { coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero_elem())
    }

    /// The point `(λ^w P_w)`.
    pub fn scaled(&self, lambda: &F) -> Self {
        WeightedPoint {
            coords: self
                .coords
                .iter()
                .zip(WEIGHTS)
                .map(|(c, w)| c.clone() * lambda.pow_u64(w as u64))
                .collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> WeightedPoint<G> {
        WeightedPoint {
            coords: self.coords.iter().map(f).collect(),
        }
    }
}

impl WeightedPoint<Rational> {
    /// Reduction modulo a prime not dividing any denominator.
    pub fn reduce_mod(&self, p: u64) -> Option<WeightedPoint<Fp>> {
        let zero = Fp::new(0, p);
        let coords: Option<Vec<Fp>> = self.coords.iter().map(|c| zero.rational_like(c)).collect();
        coords.map(|coords| WeightedPoint { coords })
    }
}

/// Weighted-projective equality: `Q = λ·P` for some λ in an algebraic closure.
pub fn wp_equal<F: Field>(p: &WeightedPoint<F>, q: &WeightedPoint<F>) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::Input("weighted-projective comparison of the zero point".into()));
    }
    for i in 0..13 {
        if p.coords[i].is_zero_elem() != q.coords[i].is_zero_elem() {
            return Ok(false);
        }
    }
    for i in 0..13 {
        for j in (i + 1)..13 {
            let (wi, wj) = (WEIGHTS[i] as u64, WEIGHTS[j] as u64);
            let g = wi.gcd(&wj);
            let (ei, ej) = (wj / g, wi / g);
            // P_i^{w_j} Q_j^{w_i} = P_j^{w_i} Q_i^{w_j}, with exponents divided by gcd.
            let lhs = p.coords[i].pow_u64(ei) * q.coords[j].pow_u64(ej);
            let rhs = p.coords[j].pow_u64(ej) * q.coords[i].pow_u64(ei);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Normalized valuations `v(I_w)/w − min_ω v(I_ω)/ω` of a rational point.
pub fn normalized_valuations(p_vec: &WeightedPoint<Rational>, p: u64) -> Result<Vec<ExtRational>> {
    require_supported_prime(p)?;
    if p_vec.is_zero() {
        return Err(Error::Unstable);
    }
    let m = min_scaled_valuation(p_vec, p)?;
    p_vec
        .coords
        .iter()
        .zip(WEIGHTS)
        .map(|(c, w)| {
            Ok(match val_p(c, p)? {
                Valuation::Infinity => ExtRational::Infinity,
                Valuation::Finite(v) => ExtRational::Finite(rat(v, w as i64) - m.clone()),
            })
        })
        .collect()
}

/// `min_w v(I_w)/w` over the nonzero coordinates.
pub fn min_scaled_valuation(p_vec: &WeightedPoint<Rational>, p: u64) -> Result<Rational> {
    let mut best: Option<Rational> = None;
    for (c, w) in p_vec.coords.iter().zip(WEIGHTS) {
        if let Valuation::Finite(v) = val_p(c, p)? {
            let r = rat(v, w as i64);
            if best.as_ref().map_or(true, |b| r < *b) {
                best = Some(r);
            }
        }
    }
    best.ok_or(Error::Unstable)
}

// ---------------------------------------------------------------------------
// Chinese remaindering and rational reconstruction
// ---------------------------------------------------------------------------

/// Combines residues modulo pairwise distinct primes into a residue modulo
/// their product.
pub fn crt_combine(residues: &[u64], moduli: &[u64]) -> (BigInt, BigInt) {
    assert_eq!(residues.len(), moduli.len());
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (&r, &p) in residues.iter().zip(moduli) {
        let pb = BigInt::from(p);
        let cur = (&x).mod_floor(&pb).to_u64().unwrap();
        let minv = inv_mod((&m).mod_floor(&pb).to_u64().unwrap(), p).expect("distinct primes");
        let t = mul_mod((r % p + p - cur) % p, minv, p);
        x += &m * BigInt::from(t);
        m *= pb;
    }
    (x, m)
}

/// Rational reconstruction: the unique `n/d` with `|n|, d ≤ sqrt(m/2)` and
/// `n ≡ a·d (mod m)`, if it exists.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let a = a.mod_floor(m);
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    Some(Rational::new(n, d))
}

/// Recovers a small rational from its residues modulo distinct primes.
/// `None` signals that the moduli do not determine a small rational.
pub fn crt_reconstruct(residues: &[u64], moduli: &[u64]) -> Option<Rational> {
    if residues.is_empty() || residues.len() != moduli.len() {
        return None;
    }
    let (x, m) = crt_combine(residues, moduli);
    let q = rational_reconstruct(&x, &m)?;
    // The reconstruction must reproduce every residue.
    for (&r, &p) in residues.iter().zip(moduli) {
        let img = Fp::new(0, p).rational_like(&q)?;
        if img.value() != r % p {
            return None;
        }
    }
    Some(q)
}
