//! Verify the six headline congruences at their full moduli over a prime
//! range, exercising both evaluation routes.
//!
//! Run with: cargo run --release --example theorem_check

use wzcheck::combinatorics::Context;
use wzcheck::primes::primes_in;
use wzcheck::theorems::{truncated_sum, verify, verify_fast, TheoremId};

fn main() {
    let memo = &mut Context::new();

    // the exact truncated sums at a small prime
    println!("exact sums at p = 3:");
    for id in TheoremId::ALL {
        println!("  {id}: {}", truncated_sum(memo, id, 3));
    }

    println!("\nfast modular route over p <= 101:");
    for p in primes_in(3, 101).unwrap() {
        let mut line = format!("p = {p:>3}:");
        for id in TheoremId::ALL {
            let v = verify_fast(memo, id, p);
            line.push_str(&format!(" {id}={}", if v.pass { "ok" } else { "FAIL" }));
        }
        println!("{line}");
    }

    // the oracle route sums exact rationals and reduces once; residues agree
    let p = 61;
    println!("\nboth routes at p = {p}:");
    for id in TheoremId::ALL {
        let fast = verify_fast(memo, id, p);
        let slow = verify(memo, id, p);
        assert_eq!(fast.lhs_residue, slow.lhs_residue);
        println!(
            "  {id} mod {}: residue {} (routes agree, {})",
            fast.modulus,
            fast.lhs_residue,
            if fast.pass { "pass" } else { "FAIL" }
        );
    }
}
