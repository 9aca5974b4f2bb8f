// SPDX-License-Identifier: MIT OR Apache-2.0
//! Row reduction of dense matrices modulo a word-sized prime, with Montgomery
//! multiplication. Entries are stored as plain residues in `[0, p)`.

/// Arithmetic modulo an odd prime `p < 2^63`.
#[derive(Clone, Copy, Debug)]
pub struct ModRing {
    pub p: u64,
    /// `-p^{-1} mod 2^64`.
    neg_inv: u64,
    /// `2^128 mod p`.
    r2: u64,
}

impl ModRing {
    pub fn new(p: u64) -> Self {
        assert!(p % 2 == 1 && p < (1 << 63), "odd prime below 2^63 expected");
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        ModRing { p, neg_inv: inv.wrapping_neg(), r2 }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    /// Montgomery image `a·2^64 mod p`, used as a multiplier for [`Self::mul_by`].
    #[inline]
    pub fn to_mont(&self, a: u64) -> u64 {
        self.redc(a as u128 * self.r2 as u128)
    }

    /// `a·b mod p` when `am` is the Montgomery image of `a`.
    #[inline]
    pub fn mul_by(&self, am: u64, b: u64) -> u64 {
        self.redc(am as u128 * b as u128)
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_by(self.to_mont(a), b)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }
}

/// Subtracts `f·src` from `dst` for columns `from..`.
#[inline]
fn axpy(ring: &ModRing, dst: &mut [u64], src: &[u64], f: u64, from: usize) {
    let fm = ring.to_mont(f);
    for (d, s) in dst[from..].iter_mut().zip(&src[from..]) {
        if *s != 0 {
            *d = ring.sub(*d, ring.mul_by(fm, *s));
        }
    }
}

/// Reduced row echelon form in place; zero rows are removed and the pivot
/// columns returned. Column order is the priority order of pivots.
pub fn rref(ring: &ModRing, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = ring.to_mont(ring.inv(rows[r][c]));
        for x in rows[r][c..].iter_mut() {
            *x = ring.mul_by(inv, *x);
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for row in before.iter_mut().chain(after.iter_mut()) {
            let f = row[c];
            if f != 0 {
                axpy(ring, row, pivot_row, f, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}` for a matrix with `ncols` columns, as the
/// canonical basis indexed by the free columns.
pub fn kernel(ring: &ModRing, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = rref(ring, &mut m);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|fc| {
            let mut v = vec![0; ncols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = ring.neg(m[r][fc]);
            }
            v
        })
        .collect()
}

/// Dot product of two residue vectors.
pub fn dot(ring: &ModRing, a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .zip(b)
        .filter(|(x, y)| **x != 0 && **y != 0)
        .fold(0, |acc, (x, y)| ring.add(acc, ring.mul(*x, *y)))
}

/// Incrementally maintained reduced echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    pub ncols: usize,
    /// Rows normalized so that the pivot entry is 1; pivot of row i is `pivots[i]`.
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
    pivot_of_col: Vec<Option<usize>>,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis { ncols, rows: Vec::new(), pivots: Vec::new(), pivot_of_col: vec![None; ncols] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis (semi-reduced: only pivot columns are cleared).
    pub fn reduce(&self, ring: &ModRing, v: &mut [u64]) {
        for c in 0..self.ncols {
            if v[c] != 0 {
                if let Some(r) = self.pivot_of_col[c] {
                    let f = v[c];
                    axpy(ring, v, &self.rows[r], f, c);
                }
            }
        }
    }

    /// Inserts `v`; returns whether the dimension grew.
    pub fn insert(&mut self, ring: &ModRing, mut v: Vec<u64>) -> bool {
        self.reduce(ring, &mut v);
        let Some(c) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = ring.to_mont(ring.inv(v[c]));
        for x in v[c..].iter_mut() {
            *x = ring.mul_by(inv, *x);
        }
        self.pivot_of_col[c] = Some(self.rows.len());
        self.rows.push(v);
        self.pivots.push(c);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn montgomery_matches_naive() {
        let p = 4611686018427387847u64;
        let ring = ModRing::new(p);
        for (a, b) in [(3u64, 5u64), (p - 1, p - 1), (123456789123, 987654321987)] {
            assert_eq!(ring.mul(a, b), ((a as u128 * b as u128) % p as u128) as u64);
        }
        assert_eq!(ring.mul(ring.inv(12345), 12345), 1);
    }

    #[test]
    fn kernel_of_small_matrix() {
        let ring = ModRing::new(101);
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&ring, &rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &rows {
                assert_eq!(dot(&ring, r, v), 0);
            }
        }
    }
}
