//! Print the display coverage table: which check verifies which displayed
//! equation, and what is deliberately out of scope.
//!
//! Run with: cargo run --example coverage_report

use wzcheck::checks::{coverage_table, manifest, Disposition};

fn main() {
    let mut mapped = 0;
    let mut out_of_scope = 0;
    let mut definitions = 0;
    for row in coverage_table() {
        match &row.disposition {
            Disposition::Checks(ids) => {
                mapped += 1;
                println!("{:<62} -> {}", row.display, ids.join(", "));
            }
            Disposition::OutOfScope(reason) => {
                out_of_scope += 1;
                println!("{:<62} -> out of scope: {reason}", row.display);
            }
            Disposition::Definition(reason) => {
                definitions += 1;
                println!("{:<62} -> definition: {reason}", row.display);
            }
        }
    }
    println!(
        "\n{} displays: {mapped} checked, {definitions} definitions, {out_of_scope} out of scope",
        coverage_table().len()
    );
    println!("{} runnable checks registered", manifest().len());
}
