// SPDX-License-Identifier: MIT OR Apache-2.0
// The 42 stable reduction types and their association with singularity types.

use quartic_strata::classify::{expand_wildcard, singularity_to_reduction, ReductionType};
use quartic_strata::huicatalog::HuiCatalog;
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let names: Vec<&str> = ReductionType::all().map(|t| t.name()).collect();
    println!("{} reduction types: {}", names.len(), names.join(" "));
    println!("(*=0e)_H expands to {}", expand_wildcard("(*=0e)_H")?);
    for label in HuiCatalog::standard().non_unstable_labels() {
        println!("{label:<16} -> {}", singularity_to_reduction(&label)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
