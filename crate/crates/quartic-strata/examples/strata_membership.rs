// SPDX-License-Identifier: MIT OR Apache-2.0
// Stratum ideals of the invariant space and the singularity classification
// of invariant points.

use quartic_strata::classify::singularity_candidates;
use quartic_strata::huicatalog::HuiCatalog;
use quartic_strata::invariants::dixmier_ohno;
use quartic_strata::strata::{attained_point, StrataCatalog, StratumId};
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let strata = StrataCatalog::standard();
    let hui = HuiCatalog::standard();
    for id in [StratumId::A2, StratumId::RA1p3, StratumId::A1p3] {
        println!("{id}: degree profile {:?}", strata.get(id)?.profile());
    }
    let braid = attained_point(StratumId::RA1p6)?;
    println!("rA1p6 point: {:?}", braid.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    for label in ["A2", "A1^2A2", "rA1^4(cubic)", "E6", "Smooth"] {
        let f = hui.sample_mod_p(&label.parse()?, 0, 1_000_003)?;
        let c = singularity_candidates(&dixmier_ohno(&f)?, strata)?;
        println!("a {label} sample is classified as {c}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
