//! The two WZ pairs behind the truncated-series congruences: exact term
//! evaluation with pole accounting, certificate polynomials, the WZ-equation
//! residual, rectangle telescoping, and the closed-form identities the
//! telescoping rests on.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinatorics::{pochhammer, rational_pow, sign_pow, Context};
use crate::exact::{int, rat, Rational};

/// Which of the two WZ pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzPairId {
    /// The pair certifying the quartic-series results (certificate alpha).
    PairA,
    /// The pair certifying the cubic-series results (certificate beta).
    PairB,
}

/// Which member of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WzTermKind {
    F,
    G,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WzError {
    #[error("term undefined at (n,k)=({n},{k}): numerator pole excess")]
    Undefined { n: i64, k: i64 },
    #[error("balanced factorial poles at (n,k)=({n},{k})")]
    BalancedPole { n: i64, k: i64 },
    #[error("pole of a non-factorial factor at (n,k)=({n},{k})")]
    PoleAtArgument { n: i64, k: i64 },
}

/// Certificate polynomial of the pair, evaluated exactly.
pub fn certificate_poly(pair: WzPairId, n: i64, k: i64) -> BigInt {
    let (n, k) = (BigInt::from(n), BigInt::from(k));
    match pair {
        WzPairId::PairA => {
            16 * k.pow(4) - 128 * k.pow(2) * n.pow(2) + 688 * n.pow(4) - 76 * k.pow(2) * &n
                + 988 * n.pow(3)
                - 16 * k.pow(2)
                + 508 * n.pow(2)
                + 111 * &n
                + 9
        }
        WzPairId::PairB => {
            22 * n.pow(3) + (32 * &k - 3) * n.pow(2) + (10 * k.pow(2) + 2 * &k - 3) * &n
                + k.pow(2)
                - &k
        }
    }
}

/// An affine expression a*n + b*k + c used as a factorial or plain factor.
#[derive(Debug, Clone, Copy)]
struct Affine {
    n: i64,
    k: i64,
    c: i64,
}

impl Affine {
    const fn new(n: i64, k: i64, c: i64) -> Affine {
        Affine { n, k, c }
    }

    fn eval(&self, n: i64, k: i64) -> i64 {
        self.n * n + self.k * k + self.c
    }
}

#[derive(Debug, Clone, Copy)]
enum SignRule {
    NPlusK,
    K,
    KPlusOne,
}

/// A term of the form
/// sign * certificate? * prod(plain_num) * prod(fact_num)! /
/// (2^{pow2} * prod(plain_den) * prod(fact_den)!).
struct TermSpec {
    sign: SignRule,
    certificate: bool,
    pow2: Affine,
    plain_num: &'static [Affine],
    plain_den: &'static [Affine],
    fact_num: &'static [Affine],
    fact_den: &'static [Affine],
}

const fn a(n: i64, k: i64, c: i64) -> Affine {
    Affine::new(n, k, c)
}

const PAIR_A_F: TermSpec = TermSpec {
    sign: SignRule::NPlusK,
    certificate: false,
    pow2: Affine::new(12, 0, 0),
    plain_num: &[a(1, 0, 0)],
    plain_den: &[],
    fact_num: &[a(2, 2, 0), a(2, -2, -2), a(4, 0, 0), a(3, 0, 0)],
    fact_den: &[
        a(1, 1, 0),
        a(1, 1, 0),
        a(2, -1, -1),
        a(1, -1, -1),
        a(1, -1, -1),
        a(1, 0, 0),
        a(1, 0, 0),
        a(1, 0, 0),
        a(2, 1, 0),
    ],
};

const PAIR_A_G: TermSpec = TermSpec {
    sign: SignRule::NPlusK,
    certificate: true,
    pow2: Affine::new(12, 0, 8),
    plain_num: &[],
    plain_den: &[],
    fact_num: &[a(2, 2, 0), a(2, -2, 0), a(4, 0, 0), a(3, 0, 0)],
    fact_den: &[
        a(1, 1, 0),
        a(1, 1, 0),
        a(2, -1, 1),
        a(1, -1, 0),
        a(1, -1, 0),
        a(1, 0, 0),
        a(1, 0, 0),
        a(1, 0, 0),
        a(2, 1, 1),
    ],
};

const PAIR_B_F: TermSpec = TermSpec {
    sign: SignRule::K,
    certificate: false,
    pow2: Affine::new(6, 2, 0),
    plain_num: &[a(1, 0, 0), a(3, 3, -1)],
    plain_den: &[a(1, 1, -1)],
    fact_num: &[a(2, 2, -2), a(3, 1, -1), a(2, 0, 0), a(0, 1, 0)],
    fact_den: &[
        a(1, 1, 0),
        a(1, 1, 0),
        a(1, -1, -1),
        a(2, 1, -1),
        a(1, 0, 0),
        a(1, 0, 0),
        a(0, 2, 0),
    ],
};

// The printed G' carries (k-1)!/(2k-2)!, which balances two poles at k = 0
// right where the telescoping needs a value. 2(2k-1) k!/(2k)! is the same
// quantity for k >= 1 and carries the limit value at k = 0.
const PAIR_B_G: TermSpec = TermSpec {
    sign: SignRule::KPlusOne,
    certificate: true,
    pow2: Affine::new(6, 2, 1),
    plain_num: &[a(0, 2, -1)],
    plain_den: &[],
    fact_num: &[a(2, 2, -3), a(3, 1, -1), a(2, 0, 0), a(0, 1, 0)],
    fact_den: &[
        a(1, 1, 0),
        a(1, 1, 0),
        a(1, -1, 0),
        a(2, 1, 0),
        a(1, 0, 0),
        a(1, 0, 0),
        a(0, 2, 0),
    ],
};

fn term_spec(pair: WzPairId, kind: WzTermKind) -> &'static TermSpec {
    match (pair, kind) {
        (WzPairId::PairA, WzTermKind::F) => &PAIR_A_F,
        (WzPairId::PairA, WzTermKind::G) => &PAIR_A_G,
        (WzPairId::PairB, WzTermKind::F) => &PAIR_B_F,
        (WzPairId::PairB, WzTermKind::G) => &PAIR_B_G,
    }
}

/// Exact value of F or G at integer (n, k), with simple-pole accounting on
/// factorial factors: denominator pole excess gives exactly 0, numerator
/// excess is `Undefined`, a balance is `BalancedPole` (never reached on the
/// domain these pairs are summed over).
pub fn evaluate_term(
    ctx: &mut Context,
    pair: WzPairId,
    kind: WzTermKind,
    n: i64,
    k: i64,
) -> Result<Rational, WzError> {
    let cache_key = (
        match (pair, kind) {
            (WzPairId::PairA, WzTermKind::F) => 0u8,
            (WzPairId::PairA, WzTermKind::G) => 1,
            (WzPairId::PairB, WzTermKind::F) => 2,
            (WzPairId::PairB, WzTermKind::G) => 3,
        },
        n,
        k,
    );
    if let Some(v) = ctx.wz_term_cached(cache_key) {
        return Ok(v);
    }
    let value = evaluate_term_uncached(ctx, pair, kind, n, k)?;
    ctx.wz_term_insert(cache_key, value.clone());
    Ok(value)
}

fn evaluate_term_uncached(
    ctx: &mut Context,
    pair: WzPairId,
    kind: WzTermKind,
    n: i64,
    k: i64,
) -> Result<Rational, WzError> {
    let spec = term_spec(pair, kind);

    for plain in spec.plain_den {
        if plain.eval(n, k) == 0 {
            return Err(WzError::PoleAtArgument { n, k });
        }
    }

    let num_poles = spec.fact_num.iter().filter(|a| a.eval(n, k) < 0).count();
    let den_poles = spec.fact_den.iter().filter(|a| a.eval(n, k) < 0).count();
    if den_poles > num_poles {
        return Ok(Rational::zero());
    }
    if num_poles > den_poles {
        return Err(WzError::Undefined { n, k });
    }
    if num_poles > 0 {
        return Err(WzError::BalancedPole { n, k });
    }

    for plain in spec.plain_num {
        if plain.eval(n, k) == 0 {
            return Ok(Rational::zero());
        }
    }

    // Evaluate through prime-exponent vectors (Legendre's formula) so the
    // result is assembled already in lowest terms; reducing the raw factorial
    // ratio would gcd numbers of tens of thousands of digits per term.
    let mut negative = match spec.sign {
        SignRule::NPlusK => (n + k).rem_euclid(2) == 1,
        SignRule::K => k.rem_euclid(2) == 1,
        SignRule::KPlusOne => (k + 1).rem_euclid(2) == 1,
    };
    let mut largest = 2i64;
    for f in spec.fact_num.iter().chain(spec.fact_den) {
        largest = largest.max(f.eval(n, k));
    }
    for plain in spec.plain_num.iter().chain(spec.plain_den) {
        largest = largest.max(plain.eval(n, k).abs());
    }
    let primes: Vec<u64> = ctx.primes_to(largest as u64).to_vec();
    let mut expo = vec![0i64; primes.len()];

    let legendre = |expo: &mut [i64], a: i64, sign: i64| {
        debug_assert!(a >= 0);
        for (i, &q) in primes.iter().enumerate() {
            if q as i64 > a {
                break;
            }
            let mut power = q as i64;
            let mut e = 0i64;
            while power <= a {
                e += a / power;
                match power.checked_mul(q as i64) {
                    Some(next) => power = next,
                    None => break,
                }
            }
            expo[i] += sign * e;
        }
    };
    let factor_small = |expo: &mut [i64], value: i64, sign: i64| {
        let mut rest = value.unsigned_abs();
        for (i, &q) in primes.iter().enumerate() {
            if rest == 1 {
                break;
            }
            while rest % q == 0 {
                rest /= q;
                expo[i] += sign;
            }
        }
        debug_assert_eq!(rest, 1, "plain factor exceeds the sieve");
    };

    for f in spec.fact_num {
        legendre(&mut expo, f.eval(n, k), 1);
    }
    for f in spec.fact_den {
        legendre(&mut expo, f.eval(n, k), -1);
    }
    for plain in spec.plain_num {
        let value = plain.eval(n, k);
        negative ^= value < 0;
        factor_small(&mut expo, value, 1);
    }
    for plain in spec.plain_den {
        let value = plain.eval(n, k);
        negative ^= value < 0;
        factor_small(&mut expo, value, -1);
    }
    expo[0] -= spec.pow2.eval(n, k);

    // certificate values can contain prime factors beyond the sieve; the
    // leftover cofactor is coprime to the denominator by construction
    let mut cert_leftover = BigInt::one();
    if spec.certificate {
        let cert = certificate_poly(pair, n, k);
        if cert.is_zero() {
            return Ok(Rational::zero());
        }
        negative ^= cert.sign() == num_bigint::Sign::Minus;
        let mut rest: i128 = i128::try_from(cert.magnitude().clone())
            .expect("certificate magnitude fits i128");
        for (i, &q) in primes.iter().enumerate() {
            if rest == 1 {
                break;
            }
            while rest % q as i128 == 0 {
                rest /= q as i128;
                expo[i] += 1;
            }
        }
        cert_leftover = BigInt::from(rest);
    }

    let mut num_factors = vec![cert_leftover];
    let mut den_factors = Vec::new();
    for (i, &e) in expo.iter().enumerate() {
        if e > 0 {
            num_factors.push(BigInt::from(primes[i]).pow(e as u32));
        } else if e < 0 {
            den_factors.push(BigInt::from(primes[i]).pow((-e) as u32));
        }
    }
    let mut numer = crate::combinatorics::tree_product(num_factors);
    let denom = crate::combinatorics::tree_product(den_factors);
    if negative {
        numer = -numer;
    }
    Ok(Rational::new_raw(numer, denom))
}

/// F(n+1,k) - F(n,k) - G(n,k+1) + G(n,k); zero whenever the pair is a WZ pair.
pub fn wz_residual(ctx: &mut Context, pair: WzPairId, n: i64, k: i64) -> Result<Rational, WzError> {
    let f1 = evaluate_term(ctx, pair, WzTermKind::F, n + 1, k)?;
    let f0 = evaluate_term(ctx, pair, WzTermKind::F, n, k)?;
    let g1 = evaluate_term(ctx, pair, WzTermKind::G, n, k + 1)?;
    let g0 = evaluate_term(ctx, pair, WzTermKind::G, n, k)?;
    Ok(f1 - f0 - g1 + g0)
}

/// Residual of the WZ equation summed over the rectangle
/// n0 <= n < m, 0 <= k < N (n0 = 0 for pair A, 2 for pair B):
/// sum_k [F(m,k) - F(n0,k)] - sum_n [G(n,N) - G(n,0)].
pub fn check_telescope(
    ctx: &mut Context,
    pair: WzPairId,
    m: i64,
    n_upper: i64,
) -> Result<Rational, WzError> {
    let n0 = match pair {
        WzPairId::PairA => 0,
        WzPairId::PairB => 2,
    };
    assert!(m >= n0.max(1) && n_upper >= 1, "rectangle out of domain");
    let mut terms = Vec::new();
    for k in 0..n_upper {
        terms.push(evaluate_term(ctx, pair, WzTermKind::F, m, k)?);
        terms.push(-evaluate_term(ctx, pair, WzTermKind::F, n0, k)?);
    }
    for n in n0..m {
        terms.push(-evaluate_term(ctx, pair, WzTermKind::G, n, n_upper)?);
        terms.push(evaluate_term(ctx, pair, WzTermKind::G, n, 0)?);
    }
    Ok(crate::combinatorics::tree_sum(terms))
}

/// The quartic-series summand in binomial form:
/// (-1)^n (172n^2+75n+9)/2^{12n} C(2n,n)^3 C(3n,n) C(4n,2n).
pub fn quartic_term(ctx: &mut Context, n: i64) -> Rational {
    let poly = int(172 * n * n + 75 * n + 9);
    let binoms = ctx.binomial_rat(2 * n, n).pow(3)
        * ctx.binomial_rat(3 * n, n)
        * ctx.binomial_rat(4 * n, 2 * n);
    sign_pow(n) * poly * binoms / ctx.pow2(12 * n)
}

/// The cubic-series summand: (11n+3)/64^n C(2n,n)^2 C(3n,n).
pub fn cubic_term(ctx: &mut Context, n: i64) -> Rational {
    let poly = int(11 * n + 3);
    let binoms = ctx.binomial_rat(2 * n, n).pow(2) * ctx.binomial_rat(3 * n, n);
    poly * binoms / ctx.pow2(6 * n)
}

/// G(n,0) minus its closed form (-1)^n(172n^2+75n+9)/2^{12n+8} C(2n,n)^3 C(3n,n) C(4n,2n).
pub fn g_closed_form_residual(ctx: &mut Context, n: i64) -> Rational {
    let g = evaluate_term(ctx, WzPairId::PairA, WzTermKind::G, n, 0)
        .expect("G(n,0) is defined for n >= 0");
    let closed = quartic_term(ctx, n) / ctx.pow2(8);
    g - closed
}

fn t_term(ctx: &mut Context, n: i64) -> Rational {
    debug_assert!(n >= 2);
    // (2n)!(3n)!/n!^5 = C(2n,n)^2 C(3n,n)
    let binoms = ctx.binomial_rat(2 * n, n).pow(2) * ctx.binomial_rat(3 * n, n);
    int(n).pow(3) * binoms / (ctx.pow2(6 * n - 5) * int((2 * n - 1) * (n - 1)))
}

/// g_n - 48 G'(n,0) - (t_{n+1} - t_n) with
/// t_n = n^3 (2n)!(3n)! / (2^{6n-5}(2n-1)(n-1) n!^5); zero for all n >= 2.
pub fn gb_difference_residual(ctx: &mut Context, n: i64) -> Rational {
    assert!(n >= 2, "t_n has (n-1) in its denominator");
    let g = cubic_term(ctx, n);
    let gb = evaluate_term(ctx, WzPairId::PairB, WzTermKind::G, n, 0)
        .expect("G'(n,0) is defined for n >= 2");
    let delta = t_term(ctx, n + 1) - t_term(ctx, n);
    g - int(48) * gb - delta
}

/// The two summand families whose Pochhammer and binomial forms must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummandFamily {
    Quartic,
    Cubic,
}

/// Pochhammer form minus binomial form of the series summand; zero for all n.
pub fn summand_identity_residual(ctx: &mut Context, family: SummandFamily, n: i64) -> Rational {
    assert!(n >= 0);
    let nu = n as u64;
    let z = rational_pow(&rat(27, 16), n);
    match family {
        SummandFamily::Quartic => {
            let poch = pochhammer(&rat(1, 2), nu)
                * pochhammer(&rat(1, 3), nu)
                * pochhammer(&rat(2, 3), nu)
                * pochhammer(&rat(1, 4), nu)
                * pochhammer(&rat(3, 4), nu)
                / pochhammer(&int(1), nu).pow(5);
            let weighted = poch * sign_pow(n) * int(172 * n * n + 75 * n + 9) * z;
            weighted - quartic_term(ctx, n)
        }
        SummandFamily::Cubic => {
            let poch = pochhammer(&rat(1, 2), nu)
                * pochhammer(&rat(1, 3), nu)
                * pochhammer(&rat(2, 3), nu)
                / pochhammer(&int(1), nu).pow(3);
            let weighted = poch * int(11 * n + 3) * z;
            weighted - cubic_term(ctx, n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn certificate_values() {
        assert_eq!(certificate_poly(WzPairId::PairA, 1, 0), BigInt::from(2304));
        // alpha(n,0) = (172n^2+75n+9)(2n+1)^2; degree 4, six points more than pin it
        for n in 0..=50i64 {
            let expected = BigInt::from((172 * n * n + 75 * n + 9) * (2 * n + 1) * (2 * n + 1));
            assert_eq!(certificate_poly(WzPairId::PairA, n, 0), expected);
        }
        // beta(n,0) = n(22n^2 - 3n - 3) under the adopted reading
        for n in 0..=50i64 {
            let expected = BigInt::from(n * (22 * n * n - 3 * n - 3));
            assert_eq!(certificate_poly(WzPairId::PairB, n, 0), expected);
        }
    }

    #[test]
    fn boundary_conventions() {
        let ctx = &mut Context::new();
        for k in 0..8 {
            assert_eq!(
                evaluate_term(ctx, WzPairId::PairA, WzTermKind::F, 0, k).unwrap(),
                int(0),
                "F(0,{k})"
            );
        }
        for n in 0..6 {
            for k in (n + 1)..8 {
                assert_eq!(
                    evaluate_term(ctx, WzPairId::PairA, WzTermKind::G, n, k).unwrap(),
                    int(0),
                    "G({n},{k})"
                );
                if n + k >= 2 {
                    assert_eq!(
                        evaluate_term(ctx, WzPairId::PairB, WzTermKind::G, n, k).unwrap(),
                        int(0)
                    );
                }
            }
        }
        assert_eq!(
            evaluate_term(ctx, WzPairId::PairA, WzTermKind::G, 2, 3).unwrap(),
            int(0)
        );
        assert_eq!(
            evaluate_term(ctx, WzPairId::PairA, WzTermKind::G, 0, 0).unwrap(),
            rat(9, 256)
        );
        // direct factorial evaluation: G(1,0) = -2304*2*2*24*6/(2^20 * 6 * 6) = -9/256
        assert_eq!(
            evaluate_term(ctx, WzPairId::PairA, WzTermKind::G, 1, 0).unwrap(),
            rat(-9, 256)
        );
        // the k = 0 limit value of G'(n,0) feeds the telescoping
        assert_eq!(
            evaluate_term(ctx, WzPairId::PairB, WzTermKind::G, 2, 0).unwrap(),
            rat(1185, 16384)
        );
    }

    #[test]
    fn pair_b_guard() {
        let ctx = &mut Context::new();
        assert_eq!(
            evaluate_term(ctx, WzPairId::PairB, WzTermKind::F, 1, 0),
            Err(WzError::PoleAtArgument { n: 1, k: 0 })
        );
        assert_eq!(
            evaluate_term(ctx, WzPairId::PairB, WzTermKind::F, 0, 1),
            Err(WzError::PoleAtArgument { n: 0, k: 1 })
        );
    }

    #[test]
    fn wz_equation_spot_values() {
        let ctx = &mut Context::new();
        assert_eq!(wz_residual(ctx, WzPairId::PairA, 3, 1).unwrap(), int(0));
        assert_eq!(wz_residual(ctx, WzPairId::PairA, 5, 5).unwrap(), int(0));
        assert_eq!(wz_residual(ctx, WzPairId::PairB, 4, 2).unwrap(), int(0));
    }

    #[test]
    fn wz_equation_grid() {
        let ctx = &mut Context::new();
        for n in 0..=16i64 {
            for k in 0..=16i64 {
                assert_eq!(
                    wz_residual(ctx, WzPairId::PairA, n, k).unwrap(),
                    int(0),
                    "pair A at ({n},{k})"
                );
                if (n + 1 + k != 1) && (n + k != 1) {
                    assert_eq!(
                        wz_residual(ctx, WzPairId::PairB, n, k).unwrap(),
                        int(0),
                        "pair B at ({n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn telescope_grid() {
        let ctx = &mut Context::new();
        for m in 1..=12i64 {
            for n_up in 1..=12i64 {
                assert_eq!(
                    check_telescope(ctx, WzPairId::PairA, m, n_up).unwrap(),
                    int(0)
                );
                if m >= 2 {
                    assert_eq!(
                        check_telescope(ctx, WzPairId::PairB, m, n_up).unwrap(),
                        int(0)
                    );
                }
            }
        }
        // the half-range instance at p = 7: N = 7 makes all G(n,7) with n < 7 vanish
        assert_eq!(check_telescope(ctx, WzPairId::PairA, 3, 7).unwrap(), int(0));
    }

    #[test]
    fn closed_forms_vanish() {
        let ctx = &mut Context::new();
        for n in 0..=40i64 {
            assert_eq!(g_closed_form_residual(ctx, n), int(0), "g closed form at {n}");
            assert_eq!(
                summand_identity_residual(ctx, SummandFamily::Quartic, n),
                int(0)
            );
            assert_eq!(
                summand_identity_residual(ctx, SummandFamily::Cubic, n),
                int(0)
            );
        }
        for n in 2..=40i64 {
            assert_eq!(gb_difference_residual(ctx, n), int(0), "gb difference at {n}");
        }
    }

    #[test]
    fn summand_identity_spot_values() {
        let ctx = &mut Context::new();
        // cubic at n = 1: both sides are 14 * 12/64 = 21/8
        assert_eq!(cubic_term(ctx, 1), rat(21, 8));
        assert_eq!(
            summand_identity_residual(ctx, SummandFamily::Cubic, 1),
            int(0)
        );
        assert_eq!(
            summand_identity_residual(ctx, SummandFamily::Quartic, 0),
            int(0)
        );
        assert_eq!(
            summand_identity_residual(ctx, SummandFamily::Quartic, 7),
            int(0)
        );
    }
}
