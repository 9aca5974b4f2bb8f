// SPDX-License-Identifier: MIT OR Apache-2.0
use std::process::Command;

use num_bigint::BigUint;
use quartic_strata::arith::Rational;
use quartic_strata::forms::Form;
use quartic_strata::huicatalog::HuiCatalog;
use quartic_strata::pipeline::{
    bad_primes, classify_record, factor, run_batch_str, selftest, selftest_with, BatchItem, BatchOptions,
    CurveRecord, DEMO_CORPUS,
};
use quartic_strata::strata::StrataCatalog;
use quartic_strata::Error;

fn record(id: &str, src: &str) -> CurveRecord {
    CurveRecord::from_form(id, &Form::<Rational>::parse(src).unwrap()).unwrap()
}

fn collect(input: &str, jobs: usize) -> (Vec<BatchItem>, quartic_strata::pipeline::BatchSummary) {
    let mut items = Vec::new();
    let opts = BatchOptions { jobs, chunk: 7, ..BatchOptions::default() };
    let summary = run_batch_str(input, StrataCatalog::standard(), &opts, |i| items.push(i.clone())).unwrap();
    (items, summary)
}

#[test]
fn braid_perturbation_is_bad_at_eleven() {
    let bad = bad_primes(&record("b", "x*y*z*(x+y+z) + 11*(x^4 + y^4 + z^4)")).unwrap();
    assert!(bad.supported().contains(&(11, 6)));
    assert_eq!(bad.factorization.remainder, None);
    let r = classify_record(&record("b", "x*y*z*(x+y+z) + 11*(x^4 + y^4 + z^4)"), StrataCatalog::standard(), false)
        .unwrap();
    let at11 = r.entries.iter().find(|e| e.report.prime == 11).unwrap();
    assert_eq!(at11.report.types.names(), ["BRAID"]);
}

#[test]
fn fermat_quartic_has_only_the_prime_two() {
    let bad = bad_primes(&record("f", "x^4 + y^4 + z^4")).unwrap();
    assert_eq!(bad.discriminant, num_bigint::BigInt::from(1u64 << 40));
    assert!(bad.supported().is_empty());
    assert_eq!(bad.unsupported(), [2]);
    let r = classify_record(&record("f", "x^4 + y^4 + z^4"), StrataCatalog::standard(), false).unwrap();
    assert!(r.entries.is_empty());
    assert!(r.to_text().contains("no supported bad primes"));
}

#[test]
fn singular_curves_are_rejected() {
    let err = bad_primes(&record("s", "x*y*z*(x+y+z) + 11*z^4")).unwrap_err();
    assert!(matches!(err, Error::SingularCurve(_)));
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn rational_records_use_a_primitive_integral_model() {
    let a = CurveRecord::parse_line("a 1/2 0 0 0 0 0 0 0 0 0 1/2 0 0 0 1/2").unwrap().unwrap();
    let b = record("a", "x^4 + y^4 + z^4");
    assert_eq!(a.form().unwrap(), b.form().unwrap());
    assert_eq!(bad_primes(&a).unwrap(), bad_primes(&b).unwrap());
}

#[test]
fn factorization_surfaces_what_it_cannot_split() {
    let p = BigUint::parse_bytes(b"1000000000000000000000000000057", 10).unwrap();
    let q = BigUint::parse_bytes(b"1000000000000000000000000000099", 10).unwrap();
    let f = factor(&(&p * &q * BigUint::from(13u32)));
    assert_eq!(f.primes, vec![(BigUint::from(13u32), 1)]);
    assert_eq!(f.remainder, Some(&p * &q));
}

#[test]
fn demo_corpus_is_dominated_by_single_nodes() {
    let (items, summary) = collect(DEMO_CORPUS, 0);
    assert_eq!(summary.records, 30);
    assert_eq!(summary.failed, 0);
    assert_eq!(summary.without_supported_bad_primes, 0);
    assert_eq!(items.len(), 30);
    let top = summary.reduction_types.iter().max_by_key(|(_, n)| **n).unwrap();
    assert_eq!(top.0, "{2n}");
    assert!(2 * top.1 > summary.pairs);
    assert_eq!(summary.strata.get("A1"), Some(top.1));
}

#[test]
fn batch_reports_keep_input_order_and_are_deterministic() {
    let (one, s1) = collect(DEMO_CORPUS, 1);
    let (four, s4) = collect(DEMO_CORPUS, 4);
    assert_eq!(s1, s4);
    let json = |v: &[BatchItem]| serde_json::to_string(v).unwrap();
    assert_eq!(json(&one), json(&four));
    let ids: Vec<String> = one
        .iter()
        .map(|i| match i {
            BatchItem::Report(r) => r.id.clone(),
            BatchItem::Error { .. } => panic!("unexpected error item"),
        })
        .collect();
    let expected: Vec<String> = DEMO_CORPUS
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(ids, expected);
}

#[test]
fn empty_batch_has_an_empty_summary() {
    let (items, summary) = collect("", 2);
    assert!(items.is_empty());
    assert_eq!(summary, Default::default());
}

#[test]
fn bad_records_are_reported_and_skipped() {
    let input = "good 1 0 0 0 0 0 0 0 0 0 1 0 0 0 1\n\
                 short 1 2 3\n\
                 {\"id\": \"node\", \"coeffs\": [0,0,0,0,1,0,0,1,1,0,0,0,0,0,0]}\n\
                 {\"id\": \"ok\", \"coeffs\": [1,0,0,0,0,0,0,0,0,0,1,0,0,0,13]}\n";
    let (items, summary) = collect(input, 2);
    assert_eq!(summary.records, 4);
    assert_eq!(summary.classified, 2);
    assert_eq!(summary.failed, 2);
    assert!(matches!(&items[1], BatchItem::Error { line: 2, id: None, .. }));
    assert!(matches!(&items[2], BatchItem::Error { line: 3, id: Some(id), .. } if id == "node"));
    let BatchItem::Report(r) = &items[3] else { panic!("ok record failed") };
    assert_eq!(r.entries.iter().map(|e| e.report.prime).collect::<Vec<_>>(), [13]);
}

#[test]
fn timings_are_opt_in() {
    let rec = record("b", "x*y*z*(x+y+z) + 11*(x^4 + y^4 + z^4)");
    let plain = classify_record(&rec, StrataCatalog::standard(), false).unwrap();
    assert!(plain.entries.iter().all(|e| e.elapsed_ms.is_none()));
    assert!(!serde_json::to_string(&plain).unwrap().contains("elapsed_ms"));
    let timed = classify_record(&rec, StrataCatalog::standard(), true).unwrap();
    assert!(timed.entries.iter().all(|e| e.elapsed_ms.is_some()));
}

#[test]
fn selftest_passes_on_the_shipped_catalogs() {
    let report = selftest();
    assert!(report.passed(), "{}", report.to_text());
}

fn corrupted_catalog() -> StrataCatalog {
    let text = StrataCatalog::standard().to_text();
    let start = text.find("[A2]\n").unwrap();
    let gen = start + text[start..].find("gen = ").unwrap();
    let end = gen + text[gen..].find('\n').unwrap();
    let bad = format!("{}gen = 1 [1 0 0 0 0 0 0 0 0 0 0 0 0]{}", &text[..gen], &text[end..]);
    StrataCatalog::parse(&bad).unwrap()
}

#[test]
fn selftest_names_a_corrupted_stratum() {
    let report = selftest_with(HuiCatalog::standard(), &corrupted_catalog());
    assert!(!report.passed());
    let failures = report.failures();
    assert!(failures.iter().any(|f| f.contains("stratum A2:")), "{failures:?}");
}

fn quartic(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quartic")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_exit_codes() {
    let (code, out) = quartic(&["invariants", "x^2*z^2 + y^4 + y*x^3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("I3 = 1/12\n"));
    let (code, out) = quartic(&["classify", "--prime", "11", "x*y*z*(x+y+z) + 11*z^4"]);
    assert_eq!(code, 0);
    assert!(out.contains("{BRAID}"));
    assert_eq!(quartic(&["invariants", "x^3"]).0, 1);
    assert_eq!(quartic(&["classify", "--prime", "7", "x^4 + y^4 + z^4"]).0, 1);
    assert_eq!(quartic(&["no-such-command"]).0, 1);
    let dir = std::env::temp_dir().join(format!("quartic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corrupt.txt");
    std::fs::write(&path, corrupted_catalog().to_text()).unwrap();
    let (code, out) = quartic(&["selftest", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("stratum A2:"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cli_structured_output_parses() {
    let (code, out) = quartic(&["sing-type", "--format", "structured", "--prime", "11", "x^3*z - y^4 + x^2*y^2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["name"], "E6");
    let (code, out) = quartic(&["batch", "--demo", "--format", "structured", "--jobs", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 31);
    let last: serde_json::Value = serde_json::from_str(lines[30]).unwrap();
    assert_eq!(last["summary"]["records"], 30);
}
