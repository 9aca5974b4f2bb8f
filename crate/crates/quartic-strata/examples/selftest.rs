// SPDX-License-Identifier: MIT OR Apache-2.0
// The self-test over the shipped calibration and catalogs.

use quartic_strata::pipeline::selftest;
use quartic_strata::{Error, Result};

pub fn run_example() -> Result<()> {
    let report = selftest();
    println!("{}", report.to_text());
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Calibration(report.failures().join("; ")))
    }
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
