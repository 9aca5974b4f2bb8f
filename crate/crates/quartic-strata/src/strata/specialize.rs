// SPDX-License-Identifier: MIT OR Apache-2.0
//! Specialization relation between normal-form families, derived by sampling:
//! `B` specializes `A` when `B` has fewer moduli and the invariant points of
//! samples of `B` satisfy every relation found on samples of `A`.

use rayon::prelude::*;

use super::reconstruct::{label_points, LabelRelations};
use super::{StrataCatalog, StratumId};
use crate::arith::{Fp, WeightedPoint};
use crate::error::Result;
use crate::huicatalog::{HuiCatalog, StratumLabel};
use crate::invariants::DOVector;

/// Degree up to which relations of each family are interpolated.
pub const SPECIALIZATION_DEGREE: u32 = 36;

/// Samples of the smaller family tested against each relation set.
pub const SPECIALIZATION_SAMPLES: usize = 10;

/// For every non-unstable label, the non-unstable labels strictly below it.
pub fn derive_specializations(
    hui: &HuiCatalog,
    strata: &StrataCatalog,
    seed: u64,
) -> Result<Vec<(StratumLabel, Vec<StratumLabel>)>> {
    let p = crate::arith::prev_prime(super::RECONSTRUCTION_PRIME_START);
    let labels = hui.non_unstable_labels();
    let relations: Vec<LabelRelations> = labels
        .par_iter()
        .map(|l| LabelRelations::sample(hui, l, SPECIALIZATION_DEGREE, seed, p))
        .collect::<Result<_>>()?;
    let points: Vec<Vec<Vec<u64>>> = labels
        .par_iter()
        .map(|l| label_points(hui, l, SPECIALIZATION_SAMPLES, seed ^ 0x5bec, p))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (a, rel) in labels.iter().zip(&relations) {
        let dim_a = hui.get(a)?.dimension;
        let own = StratumId::of_label(a).filter(|id| id.sample_label() == *a);
        let mut below = Vec::new();
        for (b, pts) in labels.iter().zip(&points) {
            if hui.get(b)?.dimension >= dim_a {
                continue;
            }
            let mut all = true;
            for pt in pts {
                let on_ideal = match own {
                    Some(id) => {
                        let v: DOVector<Fp> = WeightedPoint::new(pt.iter().map(|&x| Fp::from_u64(x, p)).collect());
                        strata.member(&v, id)?
                    }
                    None => true,
                };
                if !(on_ideal && rel.vanish_at(pt)) {
                    all = false;
                    break;
                }
            }
            if all {
                below.push(b.clone());
            }
        }
        out.push((a.clone(), below));
    }
    Ok(out)
}

