//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All comparisons are exact (congruences either hold at the stated modulus
//! or they do not); there are no tolerances to tune.

use wzcheck::checks::{self, Disposition};
use wzcheck::combinatorics::Context;
use wzcheck::exact::int;
use wzcheck::primes::primes_in;
use wzcheck::scan::{scan, OutputFormat, ScanConfig, Selector};
use wzcheck::theorems::{self, Section, TheoremId};
use wzcheck::wz::{self, SummandFamily, WzPairId};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion} failed: {detail}");
}

#[test]
fn criterion_1_theorems_full_moduli() {
    let memo = &mut Context::new();
    let mut failures = Vec::new();
    for p in primes_in(3, 499).unwrap() {
        for id in [
            TheoremId::T1_1,
            TheoremId::T1_2,
            TheoremId::T1_3,
            TheoremId::T1_4,
        ] {
            if !theorems::verify_fast(memo, id, p).pass {
                failures.push((id, p));
            }
        }
    }
    report(
        "criterion 1",
        failures.is_empty(),
        &format!(
            "T1.1/T1.2 mod p^5 and T1.3/T1.4 mod p^3 for all odd p <= 499 (failures: {failures:?})"
        ),
    );
}

#[test]
fn criterion_2_proven_congruences() {
    let memo = &mut Context::new();
    let mut failures = Vec::new();
    for p in primes_in(3, 499).unwrap() {
        for id in [TheoremId::Gz10, TheoremId::Gz12] {
            if !theorems::verify_fast(memo, id, p).pass {
                failures.push((id, p));
            }
        }
    }
    report(
        "criterion 2",
        failures.is_empty(),
        &format!("GZ.10 and GZ.12 mod p^3 for all odd p <= 499 (failures: {failures:?})"),
    );
}

#[test]
fn criterion_3_wz_certificates() {
    let memo = &mut Context::new();
    let mut ok = true;
    for n in 0..=40i64 {
        for k in 0..=40i64 {
            match wz::wz_residual(memo, WzPairId::PairA, n, k) {
                Ok(r) => ok &= r == int(0),
                Err(e) => panic!("pair A residual at ({n},{k}): {e}"),
            }
            match wz::wz_residual(memo, WzPairId::PairB, n, k) {
                Ok(r) => ok &= r == int(0),
                Err(wz::WzError::PoleAtArgument { .. }) => {} // the n+k=1 guard
                Err(e) => panic!("pair B residual at ({n},{k}): {e}"),
            }
        }
    }
    for m in 1..=30i64 {
        for n_up in 1..=30i64 {
            ok &= wz::check_telescope(memo, WzPairId::PairA, m, n_up).unwrap() == int(0);
            if m >= 2 {
                ok &= wz::check_telescope(memo, WzPairId::PairB, m, n_up).unwrap() == int(0);
            }
        }
    }
    report(
        "criterion 3",
        ok,
        "WZ residuals vanish on [0,40]^2 for both pairs; telescoping vanishes for 1 <= m,N <= 30",
    );
}

#[test]
fn criterion_4_exact_identities() {
    let memo = &mut Context::new();
    let mut ok = true;
    for n in 0..=100i64 {
        ok &= wz::summand_identity_residual(memo, SummandFamily::Quartic, n) == int(0);
        ok &= wz::summand_identity_residual(memo, SummandFamily::Cubic, n) == int(0);
        ok &= wz::g_closed_form_residual(memo, n) == int(0);
        if n >= 2 {
            ok &= wz::gb_difference_residual(memo, n) == int(0);
        }
    }
    for p in primes_in(5, 101).unwrap() {
        for section in Section::ALL {
            ok &= theorems::section_reduction_residual(memo, section, p) == int(0);
        }
    }
    report(
        "criterion 4",
        ok,
        "summand identities, closed forms, forward difference (n <= 100) and section reductions (p <= 101) are exactly zero",
    );
}

#[test]
fn criterion_5_lemma_and_intermediate_suite() {
    // every manifest check at every admissible prime in [min_prime, 499]
    let config = ScanConfig {
        lo: 3,
        hi: 499,
        selector: Selector::All,
        jobs: 1,
        ..Default::default()
    };
    let scan_report = scan(&config).unwrap();
    let all_pass = scan_report.all_pass();

    // coverage: no unmapped rows, and every referenced id resolves
    let mut coverage_ok = true;
    for row in checks::coverage_table() {
        match &row.disposition {
            Disposition::Checks(ids) => {
                coverage_ok &= !ids.is_empty();
                for id in *ids {
                    let resolves = checks::find(id).is_some()
                        || TheoremId::ALL.iter().any(|t| t.as_str() == *id)
                        || matches!(*id, "wz:grid" | "wz:telescope");
                    coverage_ok &= resolves;
                }
            }
            Disposition::OutOfScope(reason) | Disposition::Definition(reason) => {
                coverage_ok &= !reason.is_empty();
            }
        }
    }
    // and every registered check is reachable from the coverage table
    let mut referenced: std::collections::HashSet<&str> = std::collections::HashSet::new();
    for row in checks::coverage_table() {
        if let Disposition::Checks(ids) = &row.disposition {
            referenced.extend(ids.iter().copied());
        }
    }
    for c in checks::manifest() {
        coverage_ok &= referenced.contains(c.id);
    }

    report(
        "criterion 5",
        all_pass && coverage_ok,
        &format!(
            "{} records over p <= 499, {} failures; coverage table complete: {}",
            scan_report.runs(),
            scan_report.failures.len(),
            coverage_ok
        ),
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let memo = &mut Context::new();
    let mut ok = true;
    for p in primes_in(3, 199).unwrap() {
        for id in TheoremId::ALL {
            let fast = theorems::verify_fast(memo, id, p);
            let oracle = theorems::verify(memo, id, p);
            ok &= fast.lhs_residue == oracle.lhs_residue;
            ok &= fast.rhs_residue == oracle.rhs_residue;
            ok &= fast.pass && oracle.pass;
        }
    }
    report(
        "criterion 6",
        ok,
        "fast modular route and exact-rational oracle route produce identical residues for p <= 199",
    );
}

#[test]
fn criterion_7_determinism() {
    let dir = std::env::temp_dir().join(format!("wzcheck-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out1 = dir.join("scan-j1.jsonl");
    let out8 = dir.join("scan-j8.jsonl");
    let mk = |jobs: usize, out: std::path::PathBuf| ScanConfig {
        lo: 3,
        hi: 499,
        selector: Selector::Theorems,
        jobs,
        out: Some(out),
        format: OutputFormat::JsonLines,
        fail_fast: false,
        oracle: false,
    };
    let a = scan(&mk(1, out1.clone())).unwrap();
    let b = scan(&mk(8, out8.clone())).unwrap();
    let bytes1 = std::fs::read(&out1).unwrap();
    let bytes8 = std::fs::read(&out8).unwrap();
    let identical = bytes1 == bytes8 && !bytes1.is_empty();
    report(
        "criterion 7",
        identical && a.all_pass() && b.all_pass(),
        &format!(
            "theorem scan output files byte-identical at parallelism 1 and 8 ({} bytes)",
            bytes1.len()
        ),
    );
    let _ = std::fs::remove_dir_all(&dir);
}
