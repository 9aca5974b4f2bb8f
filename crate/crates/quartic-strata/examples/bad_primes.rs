// SPDX-License-Identifier: MIT OR Apache-2.0
// Bad primes from the discriminant and a per-prime classification report.

use quartic_strata::forms::Form;
use quartic_strata::pipeline::{bad_primes, classify_record, CurveRecord};
use quartic_strata::strata::StrataCatalog;
use quartic_strata::Result;

pub fn run_example() -> Result<()> {
    let rec = CurveRecord::from_form("braid", &Form::parse("x*y*z*(x+y+z) + 11*(x^4 + y^4 + z^4)")?)?;
    let bad = bad_primes(&rec)?;
    println!("discriminant {}", bad.discriminant);
    println!("supported bad primes {:?}, skipped {:?}", bad.supported(), bad.unsupported());
    println!("{}", classify_record(&rec, StrataCatalog::standard(), false)?.to_text());

    let line = CurveRecord::parse_line(r#"{"id": "fermat", "coeffs": [1,0,0,0,0,0,0,0,0,0,1,0,0,0,1]}"#)?
        .expect("a record");
    println!("{}", classify_record(&line, StrataCatalog::standard(), false)?.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
