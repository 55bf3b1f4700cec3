//! The combinatorial primitives: factorials, binomials, Pochhammer symbols,
//! harmonic numbers, Fermat quotients.
//!
//! Run with: cargo run --example combinatorics_tour

use wzcheck::combinatorics::{
    binomial, factorial, fermat_quotient, harmonic, pochhammer, HarmonicKind,
};
use wzcheck::exact::rat;

fn main() {
    println!("12! = {}", factorial(12).unwrap());
    println!("C(6,3) = {}", binomial(6, 3));
    println!("C(-2,3) = {} (negative upper index)", binomial(-2, 3));

    println!("(1/2)_3 = {}", pochhammer(&rat(1, 2), 3));
    println!("(1/3)_5 = {}", pochhammer(&rat(1, 3), 5));

    println!("H_4 = {}", harmonic(4, HarmonicKind::Plain(1)));
    println!("H_4(2) = {}", harmonic(4, HarmonicKind::Plain(2)));
    println!("H_3(-1) = {}", harmonic(3, HarmonicKind::Signed(1)));
    println!("H(1,1;3) = {}", harmonic(3, HarmonicKind::Double));

    for p in [3u64, 5, 7, 11, 13] {
        println!("q_{p}(2) = {}", fermat_quotient(2, p).unwrap());
    }
}
