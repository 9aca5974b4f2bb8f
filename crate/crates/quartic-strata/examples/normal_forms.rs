// SPDX-License-Identifier: MIT OR Apache-2.0
// Normal forms of the singularity catalog and the specializations between them.

use quartic_strata::arith::rat;
use quartic_strata::huicatalog::{HuiCatalog, StratumLabel};
use quartic_strata::singclass::quartic_singularity_type;
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let cat = HuiCatalog::standard();
    let a1p3: StratumLabel = "A1^3".parse()?;
    let f = cat.normal_form_rational(&a1p3, &[rat(3, 1), rat(5, 1), rat(7, 1)])?;
    println!("A1^3 at (3, 5, 7): {f}");
    println!("its type: {}", quartic_singularity_type(&f, 1)?.name());

    let sample = cat.sample_rational(&a1p3, 4)?;
    println!("certified sample: {sample}");

    let below: Vec<String> = cat.specializations(&a1p3)?.iter().map(|l| l.to_string()).collect();
    println!("A1^3 specializes to {}", below.join(", "));

    let unicode: StratumLabel = "ʳA₁⁴_con".parse()?;
    println!("unicode label normalizes to {unicode}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
