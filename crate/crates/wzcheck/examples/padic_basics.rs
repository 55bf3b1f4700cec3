//! Exact rationals, p-adic valuation, and reduction into Z/p^r.
//!
//! Run with: cargo run --example padic_basics

use wzcheck::exact::{congruent, int, padic_valuation, rat, reduce_mod, PrimePowerModulus};

fn main() {
    // valuations read straight off the reduced fraction
    let x = rat(9135, 1024);
    println!("v_3({x}) = {}", padic_valuation(&x, 3));
    println!("v_5(25/12) = {}", padic_valuation(&rat(25, 12), 5));
    println!("v_7(0) = {}", padic_valuation(&int(0), 7));

    // reduction into Z/p^r via the extended-Euclid inverse of the denominator
    let m = PrimePowerModulus::new(3, 3).unwrap();
    println!("9135/1024 mod 3^3 = {}", reduce_mod(&x, m).unwrap());

    // a congruence between rationals means the difference has high valuation
    let m25 = PrimePowerModulus::new(5, 2).unwrap();
    let h4 = rat(25, 12); // H_4, the p = 5 instance of the classical congruence
    println!(
        "H_4 == 0 (mod 5^2): {}",
        congruent(&h4, &int(0), m25)
    );

    // non-p-integral values still compare meaningfully
    let m5 = PrimePowerModulus::new(5, 1).unwrap();
    let with_pole = rat(-4, 5) + int(7); // -4/p + 7 at p = 5
    println!(
        "-4/p + 7 == -4/p + 2 (mod 5): {}",
        congruent(&with_pole, &(rat(-4, 5) + int(2)), m5)
    );
    println!(
        "1/3 is 3-integral: {}",
        reduce_mod(&rat(1, 3), PrimePowerModulus::new(3, 1).unwrap()).is_ok()
    );
}
