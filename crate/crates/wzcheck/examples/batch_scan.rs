//! Programmatic batch scanning: configure a scan, run it, inspect the report,
//! and write a json-lines result file.
//!
//! Run with: cargo run --release --example batch_scan

use wzcheck::scan::{scan, OutputFormat, ScanConfig, Selector};

fn main() {
    let out = std::env::temp_dir().join("wzcheck-example-scan.jsonl");
    let config = ScanConfig {
        lo: 3,
        hi: 199,
        selector: Selector::Theorems,
        jobs: 4,
        out: Some(out.clone()),
        format: OutputFormat::JsonLines,
        fail_fast: false,
        oracle: false,
    };
    let report = scan(&config).expect("valid configuration");

    for s in &report.summaries {
        println!(
            "{:<8} {} runs, {} passes, {} failures (p = {}..{})",
            s.check_id,
            s.runs,
            s.passes,
            s.failures,
            s.min_prime.unwrap_or(0),
            s.max_prime.unwrap_or(0)
        );
    }
    println!(
        "\n{} records in {:.2?}; all pass: {}",
        report.runs(),
        report.elapsed,
        report.all_pass()
    );
    println!("records written to {}", out.display());

    let first = std::fs::read_to_string(&out)
        .unwrap()
        .lines()
        .next()
        .map(str::to_string)
        .unwrap_or_default();
    println!("first record: {first}");
}
