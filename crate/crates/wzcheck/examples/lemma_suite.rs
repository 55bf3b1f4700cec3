//! Run the harmonic-number lemma suite at one prime and show the evidence
//! each check produces.
//!
//! Run with: cargo run --example lemma_suite

use wzcheck::checks::{manifest, run_check, CheckGroup};
use wzcheck::combinatorics::Context;

fn main() {
    let p = 13;
    let memo = &mut Context::new();
    println!("lemma suite at p = {p}:\n");
    for desc in manifest() {
        if desc.group != CheckGroup::Lemmas {
            continue;
        }
        let res = run_check(memo, desc.id, p, None).unwrap();
        println!(
            "{:<28} mod {:<6} lhs={:<12} rhs={:<12} {}",
            res.check_id,
            res.modulus,
            res.lhs,
            res.rhs,
            if res.pass { "pass" } else { "FAIL" }
        );
    }
    println!("\nstatements:");
    for desc in manifest().iter().filter(|d| d.group == CheckGroup::Lemmas) {
        println!("  {:<28} {}", desc.id, desc.statement);
    }
}
