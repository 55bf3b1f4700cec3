//! The two WZ pairs: equation residuals on a grid, rectangle telescoping,
//! and the closed forms the telescoped sums reduce to.
//!
//! Run with: cargo run --example wz_certificates

use wzcheck::combinatorics::Context;
use wzcheck::exact::int;
use wzcheck::wz::{
    certificate_poly, check_telescope, evaluate_term, g_closed_form_residual,
    gb_difference_residual, wz_residual, WzPairId, WzTermKind,
};

fn main() {
    let memo = &mut Context::new();

    println!("certificate values:");
    println!("  alpha(1,0) = {}", certificate_poly(WzPairId::PairA, 1, 0));
    println!("  beta(3,2)  = {}", certificate_poly(WzPairId::PairB, 3, 2));

    println!("\nboundary behavior:");
    println!(
        "  F(0,4) = {}",
        evaluate_term(memo, WzPairId::PairA, WzTermKind::F, 0, 4).unwrap()
    );
    println!(
        "  G(2,3) = {}  (zero above the diagonal)",
        evaluate_term(memo, WzPairId::PairA, WzTermKind::G, 2, 3).unwrap()
    );
    println!(
        "  G'(2,0) = {}  (the k = 0 value the telescoping needs)",
        evaluate_term(memo, WzPairId::PairB, WzTermKind::G, 2, 0).unwrap()
    );

    let mut worst = (0, 0);
    let mut all_zero = true;
    for n in 0..=25 {
        for k in 0..=25 {
            let a = wz_residual(memo, WzPairId::PairA, n, k).unwrap();
            if a != int(0) {
                all_zero = false;
                worst = (n, k);
            }
        }
    }
    println!("\nWZ equation for pair A on [0,25]^2: all residuals zero = {all_zero} {worst:?}");

    let t = check_telescope(memo, WzPairId::PairA, 3, 7).unwrap();
    println!("telescoped rectangle (m=3, N=7) residual: {t}");

    println!("\nclosed forms:");
    for n in [0i64, 1, 5, 10, 25] {
        println!(
            "  G({n},0) - closed form = {}",
            g_closed_form_residual(memo, n)
        );
    }
    for n in [2i64, 3, 10, 25] {
        println!(
            "  g_{n} - 48 G'({n},0) - forward difference = {}",
            gb_difference_residual(memo, n)
        );
    }
}
