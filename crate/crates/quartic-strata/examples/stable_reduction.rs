// SPDX-License-Identifier: MIT OR Apache-2.0
// Stable-reduction candidates of rational quartics from valuations of
// their invariants.

use quartic_strata::classify::reduction_candidates;
use quartic_strata::forms::Form;
use quartic_strata::strata::StrataCatalog;
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let strata = StrataCatalog::standard();
    let cases = [
        ("x*y*z*(x+y+z) + 11*z^4", 11),
        ("11^5*z^4 + x^2*z^2 + 11^2*y^2*z^2 + 11*y^3*z + y^4 + y*x^3", 11),
        ("11*z^4 + x^2*z^2 + y^2*z^2 + y^3*z + y^4 + 11^3*y*x^3", 11),
        ("x^3*y + y^3*z + z^3*x", 13),
    ];
    for (src, p) in cases {
        let r = reduction_candidates(&Form::parse(src)?, p, strata)?;
        println!("{src}\n  at {p}: singularities {} reduction {}", r.singularities, r.types);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
