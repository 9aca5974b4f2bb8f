// SPDX-License-Identifier: MIT OR Apache-2.0
// Singular points and their ADE types, over the rationals and over prime fields.

use quartic_strata::forms::{localize, Form};
use quartic_strata::arith::Field;
use quartic_strata::singclass::{milnor_number, quartic_singularity_type, quartic_singularity_type_mod_p};
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    for src in ["x*y*z*(x+y+z)", "x^2*z^2 + y^4 + y*x^3", "(x*z - y^2)^2", "x^3*z - y^4"] {
        let t = quartic_singularity_type(&Form::parse(src)?, 1)?;
        println!("{src:<24} {t}");
    }

    let a6 = Form::parse("x^2*z^2 + 2*y^2*x*z + y^4 - y*x^3")?;
    for p in [7, 11, 13] {
        let f = a6.reduce_mod(p).expect("integral form");
        let z = f.template();
        let mu = milnor_number(&localize(&f, &[z.zero_like(), z.zero_like(), z.one_like()], 12)?)?;
        println!("A6 normal form over F_{p}: Milnor number at (0:0:1) is {mu:?}");
    }
    let t = quartic_singularity_type_mod_p(&a6.reduce_mod(11).expect("integral form"), 1)?;
    println!("type over F_11: {}", t.name());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
