// SPDX-License-Identifier: MIT OR Apache-2.0
//! Interpolation of stratum ideals from sampled invariant points.
//!
//! At each weighted degree `d`, the relations vanishing on stratum samples
//! form a space `K_d` and multiples of the generators found so far span
//! `M_d`. New generators are the canonical complement of `M_d` in `K_d`,
//! computed modulo large primes and lifted by Chinese remaindering and
//! rational reconstruction. Relations vanishing on generic quartics (`Z_d`)
//! are measured at every degree and, under [`SyzygyRule::Quotient`],
//! quotiented out before new generators are counted.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::modmat::{dot, kernel, rref, EchelonBasis, ModRing};
use super::poly::{monomials_of_degree, InvPoly, InvariantMonomial};
use super::{StratumId, StratumIdeal};
use crate::arith::{crt_reconstruct, is_prime_u64, Field, Fp};
use crate::error::{Error, Result};
use crate::forms::Form;
use crate::huicatalog::{HuiCatalog, StratumLabel};
use crate::invariants::dixmier_ohno;

/// Reconstruction primes are taken downward from this bound.
pub const RECONSTRUCTION_PRIME_START: u64 = 1 << 62;

/// Extra rows beyond the column count used for the first kernel attempt.
const KERNEL_MARGIN: usize = 24;

/// Fresh stratum samples used to verify lifted generators.
const VERIFY_STRATUM_SAMPLES: usize = 50;

/// Generic samples on which the lifted generators must not all vanish.
const VERIFY_GENERIC_SAMPLES: usize = 20;

/// Upper bound on the number of primes used for lifting.
const MAX_PRIMES: usize = 64;

/// Dimensions observed at one weighted degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: u32,
    pub monomials: usize,
    /// `dim K_d`: relations vanishing on the stratum samples.
    pub stratum_relations: usize,
    /// `dim Z_d`: relations vanishing on generic samples.
    pub generic_relations: usize,
    /// `dim (Z_d + M_d)`.
    pub inherited: usize,
    /// `dim M_d`: multiples of lower-degree generators alone.
    pub multiples: usize,
    pub new_generators: usize,
}

/// Result of [`reconstruct_ideal`].
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub ideal: StratumIdeal,
    pub degrees: Vec<DegreeReport>,
    pub primes: Vec<u64>,
    pub expected_profile: Option<Vec<u32>>,
}

impl Reconstruction {
    pub fn profile_matches(&self) -> Option<bool> {
        self.expected_profile.as_ref().map(|e| *e == self.ideal.profile())
    }
}

/// Three times the number of monomials at the budget degree.
pub fn default_sample_count(degree_budget: u32) -> usize {
    3 * monomials_of_degree(degree_budget - degree_budget % 3).len().max(1)
}

fn mix(seed: u64, a: u64, b: u64) -> u64 {
    let mut h = seed ^ 0x2545_f491_4f6c_dd1d;
    for x in [a, b] {
        h = (h ^ x).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h ^= h >> 29;
    }
    h
}

/// Invariant points of `count` stratum samples over `F_p`, as residues.
fn stratum_points(id: StratumId, count: usize, seed: u64, p: u64) -> Result<Vec<Vec<u64>>> {
    label_points(HuiCatalog::standard(), &id.sample_label(), count, seed, p)
}

/// Invariant points of `count` uncertified normal-form samples over `F_p`.
pub(crate) fn label_points(
    cat: &HuiCatalog,
    label: &StratumLabel,
    count: usize,
    seed: u64,
    p: u64,
) -> Result<Vec<Vec<u64>>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut k = 0u64;
            loop {
                let f = cat.sample_uncertified_mod_p(label, mix(seed, i as u64, k), p)?;
                let v = dixmier_ohno(&f)?;
                if !v.is_zero() {
                    return Ok(v.coords.iter().map(|c| c.value()).collect());
                }
                k += 1;
                if k > 8 {
                    return Err(Error::Sampling(format!("{label}: samples have zero invariants")));
                }
            }
        })
        .collect()
}

/// Invariant points of random quartics over `F_p`.
fn generic_points(count: usize, seed: u64, p: u64) -> Result<Vec<Vec<u64>>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix(seed, i as u64, 0x6e6e));
            let coeffs: Vec<Fp> = (0..15).map(|_| Fp::from_u64(rng.gen(), p)).collect();
            let v = dixmier_ohno(&Form::quartic(coeffs)?)?;
            Ok(v.coords.iter().map(|c| c.value()).collect())
        })
        .collect()
}

/// Values of the monomials of a degree at each point.
fn evaluation_rows(ring: &ModRing, mons: &[InvariantMonomial], points: &[Vec<u64>]) -> Vec<Vec<u64>> {
    points
        .par_iter()
        .map(|pt| {
            let powers: Vec<Vec<u64>> = (0..13)
                .map(|i| {
                    let top = mons.iter().map(|m| m.0[i]).max().unwrap_or(0) as usize;
                    let mut v = vec![1u64; top + 1];
                    for e in 1..=top {
                        v[e] = ring.mul(v[e - 1], pt[i]);
                    }
                    v
                })
                .collect();
            mons.iter()
                .map(|m| {
                    (0..13)
                        .filter(|&i| m.0[i] > 0)
                        .fold(1, |acc, i| ring.mul(acc, powers[i][m.0[i] as usize]))
                })
                .collect()
        })
        .collect()
}

/// Kernel of the evaluation matrix: computed on a leading block of rows and
/// checked against every row.
fn sampled_kernel(ring: &ModRing, rows: &[Vec<u64>], ncols: usize) -> Vec<Vec<u64>> {
    let head = (ncols + KERNEL_MARGIN).min(rows.len());
    let k = kernel(ring, &rows[..head], ncols);
    let ok = k
        .par_iter()
        .all(|v| rows[head..].iter().all(|r| dot(ring, r, v) == 0));
    if ok {
        k
    } else {
        kernel(ring, rows, ncols)
    }
}

/// All relations up to a degree vanishing on the invariant points of one
/// normal-form family, modulo a prime.
#[derive(Clone, Debug)]
pub struct LabelRelations {
    pub label: StratumLabel,
    pub p: u64,
    /// Monomials and kernel basis at each degree.
    degrees: Vec<(Vec<InvariantMonomial>, Vec<Vec<u64>>)>,
}

impl LabelRelations {
    /// Relations up to `degree_budget`, from three samples per monomial.
    pub fn sample(
        cat: &HuiCatalog,
        label: &StratumLabel,
        degree_budget: u32,
        seed: u64,
        p: u64,
    ) -> Result<LabelRelations> {
        let ring = ModRing::new(p);
        let points = label_points(cat, label, default_sample_count(degree_budget), mix(seed, p, 5), p)?;
        let degrees = (3..=degree_budget)
            .step_by(3)
            .map(|d| {
                let mons = monomials_of_degree(d);
                let k = sampled_kernel(&ring, &evaluation_rows(&ring, &mons, &points), mons.len());
                (mons, k)
            })
            .collect();
        Ok(LabelRelations { label: label.clone(), p, degrees })
    }

    /// Number of independent relations found.
    pub fn count(&self) -> usize {
        self.degrees.iter().map(|(_, k)| k.len()).sum()
    }

    /// Whether every relation vanishes at an invariant point given as residues mod `p`.
    pub fn vanish_at(&self, point: &[u64]) -> bool {
        let ring = ModRing::new(self.p);
        self.degrees.iter().all(|(mons, k)| {
            let row = &evaluation_rows(&ring, mons, &[point.to_vec()])[0];
            k.iter().all(|v| dot(&ring, row, v) == 0)
        })
    }
}

/// Treatment of relations that hold on every quartic (generic syzygies).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SyzygyRule {
    /// Generic syzygies are quotiented out before counting new generators.
    Quotient,
    /// Generic syzygies not implied by lower generators count as generators.
    Keep,
}

/// Generators found modulo one prime: degree, leading columns, coefficient vectors.
struct ModularRun {
    degrees: Vec<DegreeReport>,
    generators: Vec<(u32, Vec<u64>)>,
    /// Pivot column of each generator (the structural fingerprint of the run).
    shape: Vec<(u32, usize)>,
}

fn modular_run(id: StratumId, budget: u32, samples: usize, seed: u64, p: u64, rule: SyzygyRule) -> Result<ModularRun> {
    let ring = ModRing::new(p);
    let stratum = stratum_points(id, samples, mix(seed, p, 1), p)?;
    let generic = generic_points(samples, mix(seed, p, 2), p)?;
    let mut generators: Vec<(u32, InvPolyMod)> = Vec::new();
    let mut degrees = Vec::new();
    let mut out = Vec::new();
    let mut shape = Vec::new();
    for d in (3..=budget).step_by(3) {
        let mons = monomials_of_degree(d);
        let n = mons.len();
        let index: HashMap<InvariantMonomial, usize> = mons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let k = sampled_kernel(&ring, &evaluation_rows(&ring, &mons, &stratum), n);
        let z = sampled_kernel(&ring, &evaluation_rows(&ring, &mons, &generic), n);
        let mut multiples = EchelonBasis::new(n);
        for (dg, g) in &generators {
            for m in monomials_of_degree(d - dg) {
                if multiples.dim() == k.len() {
                    break;
                }
                let mut v = vec![0u64; n];
                for (c, gm) in &g.terms {
                    v[index[&gm.mul(&m)]] = *c;
                }
                multiples.insert(&ring, v);
            }
        }
        let mut w = multiples.clone();
        for v in &z {
            w.insert(&ring, v.clone());
        }
        if w.dim() > k.len() {
            return Err(Error::Reconstruction(format!(
                "{id}, degree {d}: inherited relations exceed the sampled kernel (too few samples)"
            )));
        }
        let base = match rule {
            SyzygyRule::Quotient => &w,
            SyzygyRule::Keep => &multiples,
        };
        let mut stacked: Vec<Vec<u64>> = base.rows.iter().cloned().chain(k.iter().cloned()).collect();
        let pivots = rref(&ring, &mut stacked);
        if pivots.len() != k.len() {
            return Err(Error::Reconstruction(format!(
                "{id}, degree {d}: inherited relations do not vanish on the stratum samples"
            )));
        }
        let inherited: std::collections::HashSet<usize> = base.pivots.iter().copied().collect();
        let mut fresh = 0;
        for (row, &pc) in stacked.iter().zip(&pivots) {
            if inherited.contains(&pc) {
                continue;
            }
            fresh += 1;
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(j, c)| (*c, mons[j]))
                .collect();
            generators.push((d, InvPolyMod { terms }));
            out.push((d, row.clone()));
            shape.push((d, pc));
        }
        degrees.push(DegreeReport {
            degree: d,
            monomials: n,
            stratum_relations: k.len(),
            generic_relations: z.len(),
            inherited: w.dim(),
            multiples: multiples.dim(),
            new_generators: fresh,
        });
    }
    Ok(ModularRun { degrees, generators: out, shape })
}

struct InvPolyMod {
    terms: Vec<(u64, InvariantMonomial)>,
}

/// Per-degree dimensions of the reconstruction modulo one prime, without lifting.
pub fn modular_profile(
    id: StratumId,
    degree_budget: u32,
    sample_count: usize,
    seed: u64,
    rule: SyzygyRule,
) -> Result<Vec<DegreeReport>> {
    check_request(id, degree_budget, sample_count)?;
    let p = crate::arith::prev_prime(RECONSTRUCTION_PRIME_START);
    Ok(modular_run(id, degree_budget, sample_count, seed, p, rule)?.degrees)
}

fn check_request(id: StratumId, degree_budget: u32, sample_count: usize) -> Result<()> {
    if id.is_point() {
        return Err(Error::Input(format!("{id} is a point; its ideal is given by its coordinates")));
    }
    if degree_budget < 3 {
        return Err(Error::Input("degree budget must be at least 3".into()));
    }
    if sample_count < default_sample_count(degree_budget) {
        return Err(Error::Input(format!(
            "{sample_count} samples are fewer than three times the {} monomials of degree {}",
            default_sample_count(degree_budget) / 3,
            degree_budget - degree_budget % 3
        )));
    }
    Ok(())
}

fn lift(runs: &[(u64, &ModularRun)]) -> Option<Vec<InvPoly>> {
    let moduli: Vec<u64> = runs.iter().map(|(p, _)| *p).collect();
    let first = runs[0].1;
    let mut out = Vec::new();
    for (gi, (d, row)) in first.generators.iter().enumerate() {
        let mons = monomials_of_degree(*d);
        let mut terms = Vec::new();
        for j in 0..row.len() {
            let residues: Vec<u64> = runs.iter().map(|(_, r)| r.generators[gi].1[j]).collect();
            if residues.iter().all(|&r| r == 0) {
                continue;
            }
            terms.push((crt_reconstruct(&residues, &moduli)?, mons[j]));
        }
        out.push(InvPoly::new(terms).ok()?.primitive());
    }
    Some(out)
}

fn verify(id: StratumId, gens: &[InvPoly], seed: u64, p: u64) -> Result<bool> {
    let zero = Fp::new(0, p);
    let reduce = |g: &InvPoly| -> Option<Vec<(Fp, InvariantMonomial)>> {
        g.terms.iter().map(|(c, m)| zero.rational_like(c).map(|x| (x, *m))).collect()
    };
    let reduced: Option<Vec<_>> = gens.iter().map(reduce).collect();
    let Some(reduced) = reduced else { return Ok(false) };
    let eval = |g: &[(Fp, InvariantMonomial)], pt: &[u64]| -> Fp {
        let pt: Vec<Fp> = pt.iter().map(|&x| Fp::from_u64(x, p)).collect();
        g.iter().fold(zero, |acc, (c, m)| acc + *c * m.eval(&pt))
    };
    let stratum = stratum_points(id, VERIFY_STRATUM_SAMPLES, mix(seed, p, 3), p)?;
    if !stratum.iter().all(|pt| reduced.iter().all(|g| eval(g, pt) == zero)) {
        return Ok(false);
    }
    let generic = generic_points(VERIFY_GENERIC_SAMPLES, mix(seed, p, 4), p)?;
    Ok(generic.iter().all(|pt| reduced.iter().any(|g| eval(g, pt) != zero)))
}

/// Primes below `start` in decreasing order.
fn primes_below(start: u64) -> impl Iterator<Item = u64> {
    (0..start).rev().filter(|&n| n % 2 == 1 && is_prime_u64(n))
}

/// Reconstructs the ideal of a stratum of positive dimension up to a weighted
/// degree, with exact rational generators verified on fresh samples modulo
/// an independent prime.
pub fn reconstruct_ideal(
    id: StratumId,
    degree_budget: u32,
    sample_count: usize,
    seed: u64,
    rule: SyzygyRule,
) -> Result<Reconstruction> {
    check_request(id, degree_budget, sample_count)?;
    let mut primes = primes_below(RECONSTRUCTION_PRIME_START);
    let mut runs: Vec<(u64, ModularRun)> = Vec::new();
    let mut pending = 2;
    loop {
        let batch: Vec<u64> = primes.by_ref().take(pending).collect();
        let new_runs: Vec<(u64, Result<ModularRun>)> = batch
            .par_iter()
            .map(|&p| (p, modular_run(id, degree_budget, sample_count, seed, p, rule)))
            .collect();
        for (p, r) in new_runs {
            runs.push((p, r?));
        }
        // Keep the runs sharing the most common structure; others had unlucky primes.
        let mut counts: HashMap<&Vec<(u32, usize)>, usize> = HashMap::new();
        for (_, r) in &runs {
            *counts.entry(&r.shape).or_default() += 1;
        }
        let best = counts.iter().max_by_key(|(_, c)| **c).map(|(s, _)| (*s).clone()).expect("at least one run");
        let agreeing: Vec<(u64, &ModularRun)> = runs.iter().filter(|(_, r)| r.shape == best).map(|(p, r)| (*p, r)).collect();
        if agreeing.len() >= 2 {
            if let Some(gens) = lift(&agreeing) {
                let check_prime = primes.next().expect("primes remain");
                if verify(id, &gens, seed, check_prime)? {
                    let ideal = StratumIdeal { id, generators: gens };
                    return Ok(Reconstruction {
                        ideal,
                        degrees: agreeing[0].1.degrees.clone(),
                        primes: agreeing.iter().map(|(p, _)| *p).collect(),
                        expected_profile: id.expected_profile(),
                    });
                }
            }
        }
        if runs.len() >= MAX_PRIMES {
            return Err(Error::Reconstruction(format!(
                "{id}: coefficients did not stabilize after {} primes",
                runs.len()
            )));
        }
        pending = runs.len().clamp(1, 8);
    }
}
