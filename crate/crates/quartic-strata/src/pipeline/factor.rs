// SPDX-License-Identifier: MIT OR Apache-2.0
//! Factorization of discriminants: trial division, then Pollard's rho with
//! Brent's cycle detection under an iteration budget.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::is_probable_prime;

/// Trial division bound.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Iterations of Pollard's rho allowed per composite cofactor and start value.
pub const RHO_BUDGET: u64 = 200_000;

/// Pollard-rho start values tried before giving up on a cofactor.
const RHO_STARTS: u64 = 4;

/// Prime factorization, possibly with an unfactored composite part.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// Prime factors in increasing order with multiplicities.
    #[serde(serialize_with = "ser_pairs")]
    pub primes: Vec<(BigUint, u32)>,
    /// Product of the composite cofactors that resisted the budget.
    #[serde(serialize_with = "ser_opt")]
    pub remainder: Option<BigUint>,
}

fn ser_pairs<S: serde::Serializer>(v: &[(BigUint, u32)], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<(String, u32)> = v.iter().map(|(p, e)| (p.to_string(), *e)).collect();
    strs.serialize(s)
}

fn ser_opt<S: serde::Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(|x| x.to_string()).serialize(s)
}

impl Factorization {
    /// Prime factors that fit in a machine word.
    pub fn small_primes(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.primes.iter().filter_map(|(p, e)| p.to_u64().map(|p| (p, *e)))
    }
}

/// Factors `n > 0`.
pub fn factor(n: &BigUint) -> Factorization {
    let mut primes: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    let push = |p: BigUint, primes: &mut Vec<(BigUint, u32)>| match primes.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => primes.push((p, 1)),
    };
    if rest.is_zero() {
        return Factorization::default();
    }
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            push(bd.clone(), &mut primes);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut remainder = BigUint::one();
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut primes);
            continue;
        }
        match (1..=RHO_STARTS).find_map(|c| pollard_brent(&m, c)) {
            Some(f) => {
                let g = &m / &f;
                stack.push(f);
                stack.push(g);
            }
            None => remainder *= m,
        }
    }
    primes.sort();
    Factorization { primes, remainder: (!remainder.is_one()).then_some(remainder) }
}

/// A nontrivial factor of the odd composite `n`, or `None` within the budget.
fn pollard_brent(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32);
    let mut r: u64 = 1;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut steps = 0u64;
    const BATCH: u64 = 64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += BATCH;
            steps += BATCH;
            if steps > RHO_BUDGET {
                return None;
            }
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_products_of_large_primes() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let n = &p * &p * &q * BigUint::from(720u32);
        let f = factor(&n);
        assert_eq!(f.remainder, None);
        let expected: Vec<(BigUint, u32)> = vec![
            (2u32.into(), 4),
            (3u32.into(), 2),
            (5u32.into(), 1),
            (q.clone(), 1),
            (p.clone(), 2),
        ];
        assert_eq!(f.primes, expected);
    }

    #[test]
    fn one_has_no_factors() {
        assert_eq!(factor(&BigUint::one()), Factorization::default());
    }
}
