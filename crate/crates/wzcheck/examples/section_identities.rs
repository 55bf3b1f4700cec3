//! The exact pre-congruence identities each derivation stage rests on:
//! telescoped sums reduced to boundary terms, verified as rational identities.
//!
//! Run with: cargo run --release --example section_identities

use wzcheck::combinatorics::Context;
use wzcheck::primes::primes_in;
use wzcheck::theorems::{section_reduction_residual, Section};

fn main() {
    let memo = &mut Context::new();
    for p in primes_in(5, 61).unwrap() {
        let mut line = format!("p = {p:>2}:");
        for section in Section::ALL {
            let r = section_reduction_residual(memo, section, p);
            line.push_str(&format!(
                " {}={}",
                section.as_str(),
                if r == wzcheck::exact::int(0) { "0" } else { "NONZERO" }
            ));
        }
        println!("{line}");
    }
    println!("\neach residual is an exact rational; zero means the identity holds on the nose");
}
