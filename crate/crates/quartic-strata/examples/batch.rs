// SPDX-License-Identifier: MIT OR Apache-2.0
// Parallel classification of the demo corpus with an ordered report stream.

use quartic_strata::pipeline::{run_batch_str, BatchItem, BatchOptions, DEMO_CORPUS};
use quartic_strata::strata::StrataCatalog;
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let opts = BatchOptions { jobs: 4, ..BatchOptions::default() };
    let summary = run_batch_str(DEMO_CORPUS, StrataCatalog::standard(), &opts, |item: &BatchItem| {
        println!("{}", item.to_text());
    })?;
    println!("{}", summary.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
