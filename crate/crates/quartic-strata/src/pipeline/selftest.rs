// SPDX-License-Identifier: MIT OR Apache-2.0
//! End-to-end health check of the shipped calibration and catalogs.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::arith::{wp_equal, WeightedPoint};
use crate::classify::{reduction_candidates, singularity_candidates};
use crate::forms::Form;
use crate::huicatalog::HuiCatalog;
use crate::invariants::{anchors, dixmier_ohno, verify_calibration};
use crate::strata::{attained_point, StrataCatalog, StratumId};
use crate::Result;

/// Prime used for the sampled checks.
pub const SELFTEST_PRIME: u64 = 1_000_003;

/// Samples per label in the soundness check.
pub const SELFTEST_SAMPLES: u64 = 2;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Failure details, one entry per failing item.
    pub failures: Vec<String>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Every failure detail, prefixed by its check.
    pub fn failures(&self) -> Vec<String> {
        self.checks.iter().flat_map(|c| c.failures.iter().map(move |f| format!("{}: {f}", c.name))).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} ({:.0} ms)", c.name, c.elapsed_ms);
            for f in &c.failures {
                let _ = writeln!(out, "     {f}");
            }
        }
        let _ = write!(out, "{}", if self.passed() { "selftest passed" } else { "selftest FAILED" });
        out
    }
}

fn run_check(name: &str, body: impl FnOnce() -> Result<Vec<String>>) -> CheckResult {
    let start = Instant::now();
    let failures = match body() {
        Ok(f) => f,
        Err(e) => vec![e.to_string()],
    };
    CheckResult { name: name.into(), passed: failures.is_empty(), failures, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 }
}

/// Runs the self-test against the shipped catalogs.
pub fn selftest() -> SelftestReport {
    selftest_with(HuiCatalog::standard(), StrataCatalog::standard())
}

/// Runs the self-test against the given catalogs.
pub fn selftest_with(hui: &HuiCatalog, strata: &StrataCatalog) -> SelftestReport {
    let mut checks = Vec::new();
    checks.push(run_check("calibration anchors", || verify_calibration().map(|_| vec![])));
    checks.push(run_check("dimension-zero points", || {
        let mut bad = Vec::new();
        let expected = [
            (StratumId::RA1p6, anchors::ra1p6()),
            (StratumId::A2p3, anchors::a2p3()),
            (StratumId::A4Group, anchors::a4_group()),
            (StratumId::RA1A3Group, anchors::ra1a3_group()),
        ];
        for (id, coords) in expected {
            let pt = attained_point(id)?;
            if !wp_equal(&pt.as_point(), &WeightedPoint::new(coords))? {
                bad.push(format!("{id}: attained point differs from its anchor"));
            }
            if !strata.member(&pt.as_point(), id)? {
                bad.push(format!("{id}: catalog ideal does not vanish at its point"));
            }
        }
        Ok(bad)
    }));
    checks.push(run_check("stratum catalog consistency", || {
        let mut bad = Vec::new();
        for id in StratumId::ALL {
            for m in id.members() {
                let label = m.parse()?;
                let f = hui.sample_mod_p(&label, 0, SELFTEST_PRIME)?;
                if !strata.member(&dixmier_ohno(&f)?, id)? {
                    bad.push(format!("stratum {id}: ideal does not vanish on a {m} sample"));
                }
            }
        }
        Ok(bad)
    }));
    checks.push(run_check("braid reduction at 11", || {
        let f = Form::parse("x*y*z*(x+y+z) + 11*z^4")?;
        let r = reduction_candidates(&f, 11, strata)?;
        Ok(if r.types.names() == ["BRAID"] && !r.types.hyperelliptic_wildcard {
            vec![]
        } else {
            vec![format!("expected {{BRAID}}, found {}", r.types)]
        })
    }));
    checks.push(run_check("classification soundness", || {
        let mut bad = Vec::new();
        for label in hui.non_unstable_labels() {
            for seed in 0..SELFTEST_SAMPLES {
                let f = hui.sample_mod_p(&label, seed, SELFTEST_PRIME)?;
                let c = singularity_candidates(&dixmier_ohno(&f)?, strata)?;
                if !c.contains(&label) {
                    bad.push(format!("{label} sample {seed} classified as {c}"));
                }
            }
        }
        Ok(bad)
    }));
    SelftestReport { checks }
}
