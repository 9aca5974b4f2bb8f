// SPDX-License-Identifier: MIT OR Apache-2.0
// Reconstruction of a stratum ideal by interpolation on sampled normal forms,
// lifted from several primes to the rationals.

use quartic_strata::strata::{default_sample_count, reconstruct_ideal, StratumId, SyzygyRule};
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let id = StratumId::RA1p3;
    let budget = id.degree_budget();
    let r = reconstruct_ideal(id, budget, default_sample_count(budget), 7, SyzygyRule::Quotient)?;
    for d in &r.degrees {
        println!(
            "degree {:>2}: {:>4} monomials, {:>3} relations, {:>2} new generators",
            d.degree, d.monomials, d.stratum_relations, d.new_generators
        );
    }
    println!("primes used: {}", r.primes.len());
    println!("profile {:?} matches the expected one: {:?}", r.ideal.profile(), r.profile_matches());
    println!("first generator: {}", r.ideal.generators[0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
