// SPDX-License-Identifier: MIT OR Apache-2.0
// Dixmier-Ohno invariants of a quartic over the rationals and modulo a prime.

use quartic_strata::arith::{wp_equal, INVARIANT_NAMES};
use quartic_strata::forms::Form;
use quartic_strata::invariants::{discriminant, dixmier_ohno, verify_calibration};
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    verify_calibration()?;
    let klein = Form::parse("x^3*y + y^3*z + z^3*x")?;
    let v = dixmier_ohno(&klein)?;
    for (name, value) in INVARIANT_NAMES.iter().zip(&v.coords) {
        println!("{name:>4} = {value}");
    }
    println!("discriminant 2^40 I27 = {}", discriminant(&klein)?);

    let modp = dixmier_ohno(&klein.reduce_mod(10007).expect("integral form"))?;
    println!("I27 mod 10007 = {}", modp.coords[12]);

    let tacnode = dixmier_ohno(&Form::parse("x^2*z^2 + y^4 + y*x^3")?)?;
    let tacnode_and_node = dixmier_ohno(&Form::parse("x^2*z^2 + y^4 + y^3*z + y^2*z^2")?)?;
    println!("two tacnodal quartics share a weighted point: {}", wp_equal(&tacnode, &tacnode_and_node)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
