// SPDX-License-Identifier: MIT OR Apache-2.0
//! Batch workflow over curve records. Bad primes come from factoring the
//! discriminant, and each one gets its own classification entry.

mod batch;
pub mod factor;
mod records;
mod report;
mod selftest;

pub use batch::{run_batch, run_batch_str, BatchItem, BatchOptions, BatchSummary, DEFAULT_CHUNK, DEMO_CORPUS};
pub use factor::{factor, Factorization, RHO_BUDGET, TRIAL_DIVISION_BOUND};
pub use records::{coefficient_monomials, CurveRecord};
pub use report::{bad_primes, classify_record, BadPrimes, ClassificationReport, PrimeEntry};
pub use selftest::{selftest, selftest_with, CheckResult, SelftestReport, SELFTEST_PRIME, SELFTEST_SAMPLES};
