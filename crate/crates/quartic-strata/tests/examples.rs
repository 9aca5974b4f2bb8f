// SPDX-License-Identifier: MIT OR Apache-2.0

mod invariants_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/invariants.rs"));
}

mod singularity_type_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/singularity_type.rs"));
}

mod normal_forms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normal_forms.rs"));
}

mod strata_membership_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/strata_membership.rs"));
}

mod reconstruct_stratum_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reconstruct_stratum.rs"));
}

mod reduction_types_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reduction_types.rs"));
}

mod stable_reduction_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stable_reduction.rs"));
}

mod bad_primes_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bad_primes.rs"));
}

mod batch_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/batch.rs"));
}

mod selftest_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/selftest.rs"));
}

#[test]
fn invariants_example_runs() {
    invariants_example::run_example().expect("invariants example should run");
}

#[test]
fn singularity_type_example_runs() {
    singularity_type_example::run_example().expect("singularity_type example should run");
}

#[test]
fn normal_forms_example_runs() {
    normal_forms_example::run_example().expect("normal_forms example should run");
}

#[test]
fn strata_membership_example_runs() {
    strata_membership_example::run_example().expect("strata_membership example should run");
}

#[test]
fn reconstruct_stratum_example_runs() {
    reconstruct_stratum_example::run_example().expect("reconstruct_stratum example should run");
}

#[test]
fn reduction_types_example_runs() {
    reduction_types_example::run_example().expect("reduction_types example should run");
}

#[test]
fn stable_reduction_example_runs() {
    stable_reduction_example::run_example().expect("stable_reduction example should run");
}

#[test]
fn bad_primes_example_runs() {
    bad_primes_example::run_example().expect("bad_primes example should run");
}

#[test]
fn batch_example_runs() {
    batch_example::run_example().expect("batch example should run");
}

#[test]
fn selftest_example_runs() {
    selftest_example::run_example().expect("selftest example should run");
}
