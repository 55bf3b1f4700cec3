//! Per-prime series building blocks shared by the theorem verifier and the
//! congruence suite: the split pieces and master summands of the telescoped
//! identities.

use crate::combinatorics::{sign_pow, Context};
use crate::exact::{rat, Rational};

/// G*(k): summand of the five-piece split of the full-range telescoped sum.
pub fn gstar(ctx: &mut Context, p: i64, k: i64) -> Rational {
    let pre = rat((2 * p - k) * (p - k), 2 * (2 * p - 2 * k - 1));
    sign_pow(k)
        * pre
        * ctx.binomial_rat(2 * p + 2 * k, p + k)
        * ctx.binomial_rat(2 * p - 2 * k, p - k)
        * ctx.binomial_rat(4 * p, 2 * p + k)
}

/// F*(p,k): summand of the four-piece split on the cubic side.
pub fn fstar(ctx: &mut Context, p: i64, k: i64) -> Rational {
    let pre = Rational::new(
        ((6 * p - 3 * k - 1) * k).into(),
        ((2 * p - k - 1) * (2 * p - k) * ((4 * p - 2 * k - 1) * (p - k))).into(),
    );
    sign_pow(k)
        * ctx.pow2(2 * k)
        * pre
        * ctx.binomial_rat(4 * p - 2 * k, 2 * p - k)
        * ctx.binomial_rat(4 * p - k - 1, p)
        * ctx.binomial_rat(p - 1, k)
        / ctx.binomial_rat(2 * p - 2 * k, p - k)
}

/// Summand of the full-range master sum for the cubic series (the quantity
/// multiplied by p^2 C(2p,p)/2^{6p+1} in the reduction identity).
pub fn master5(ctx: &mut Context, p: i64, k: i64) -> Rational {
    let pre = Rational::new(
        (3 * p + 3 * k - 1).into(),
        ((p + k - 1) * (p + k) * (2 * p + 2 * k - 1)).into(),
    );
    sign_pow(k) / ctx.pow2(2 * k)
        * pre
        * ctx.binomial_rat(2 * p + 2 * k, p + k)
        * ctx.binomial_rat(3 * p + k - 1, p)
        * ctx.binomial_rat(p - 1, k)
        / ctx.binomial_rat(2 * k, k)
}

/// Summand of the half-range master sum for the cubic series.
pub fn master6(ctx: &mut Context, p: i64, k: i64) -> Rational {
    let h = (p - 1) / 2;
    let pre = Rational::new(
        ((3 * p + 1 + 6 * k) * (p + 1) * p).into(),
        ((p - 1 + 2 * k) * (p + 1 + 2 * k) * (p + 1 + 2 * k)).into(),
    );
    sign_pow(k) / ctx.pow2(2 * k)
        * pre
        * ctx.central_rat(p - 1 + 2 * k)
        * ctx.binomial_rat((3 * p + 1 + 2 * k) / 2, p + k)
        * ctx.binomial_rat(h, k)
        / ctx.binomial_rat(2 * k, k)
}

/// Summand of the reflected half-range core sum (defined for 2 <= k <= (p-1)/2;
/// k = 1 hits the (p+1-k)^2 factor's zero residue and is treated separately).
pub fn core6(ctx: &mut Context, p: i64, k: i64) -> Rational {
    let h = (p - 1) / 2;
    let pre = Rational::new(
        ((3 * p + 2 - 3 * k) * (2 * p + 1 - k) * k).into(),
        ((p - k) * (p - 2 * k) * ((p + 1 - k) * (p + 1 - k))).into(),
    );
    sign_pow(k)
        * ctx.pow2(2 * k)
        * pre
        * ctx.binomial_rat(h, k)
        * ctx.binomial_rat(2 * p - 2 * k, p - k)
        * ctx.binomial_rat(2 * p - k, h)
        / ctx.central_rat(p - 1 - 2 * k)
}

/// G'(n,0) in closed form: (22n^2-3n-3)/(2^{6n+3} 3n(n-1)(2n-1)) C(2n,n)^2 C(3n,n).
pub fn gprime0(ctx: &mut Context, n: i64) -> Rational {
    debug_assert!(n >= 2);
    let pre = Rational::new(
        (22 * n * n - 3 * n - 3).into(),
        (3 * n * (n - 1) * (2 * n - 1)).into(),
    );
    pre / ctx.pow2(6 * n + 3) * ctx.binomial_rat(2 * n, n).pow(2) * ctx.binomial_rat(3 * n, n)
}

/// The inner alternating sum of the half-range quartic reduction.
pub fn m_inner(ctx: &mut Context, p: i64) -> Rational {
    let h = (p - 1) / 2;
    crate::combinatorics::tree_sum(
        (1..h)
            .map(|k| {
                let pre = rat((p - 1 - k) * (p - 1 - 2 * k), p - 2 - 2 * k);
                sign_pow(k)
                    * pre
                    * ctx.central_rat(p - 1 + 2 * k)
                    * ctx.central_rat(p - 1 - 2 * k)
                    * ctx.binomial_rat(2 * p - 2, p - 1 + k)
            })
            .collect(),
    )
}

/// Quartic-series summand at index k (re-export of the WZ module's form).
pub use crate::wz::{cubic_term, quartic_term};

/// q_p(2) as an exact rational.
pub fn q2(p: u64) -> Rational {
    Rational::from_integer(
        crate::combinatorics::fermat_quotient(2, p).expect("2 is coprime to an odd prime"),
    )
}

/// (-1)^{(p-1)/2}.
pub fn half_sign(p: i64) -> Rational {
    sign_pow((p - 1) / 2)
}

impl Context {
    /// Central binomial as a rational.
    pub fn central_rat(&mut self, m: i64) -> Rational {
        Rational::from_integer(self.central(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::wz::{evaluate_term, WzPairId, WzTermKind};

    #[test]
    fn gprime0_matches_pair_b_term() {
        let ctx = &mut Context::new();
        for n in 2..=30 {
            let direct = evaluate_term(ctx, WzPairId::PairB, WzTermKind::G, n, 0).unwrap();
            assert_eq!(gprime0(ctx, n), direct, "n={n}");
        }
    }

    #[test]
    fn master5_collects_pair_b_f_terms() {
        // F'(p,k) = p^2 C(2p,p)/2^{6p+1} * master5(p,k)
        let ctx = &mut Context::new();
        for p in [5i64, 7, 11] {
            let pre = int(p * p) * ctx.binomial_rat(2 * p, p) / ctx.pow2(6 * p + 1);
            for k in 0..p {
                let direct = evaluate_term(ctx, WzPairId::PairB, WzTermKind::F, p, k).unwrap();
                assert_eq!(&pre * master5(ctx, p, k), direct, "p={p} k={k}");
            }
        }
    }

    #[test]
    fn gstar_rewrites_split_summand() {
        let ctx = &mut Context::new();
        for p in [5i64, 7] {
            for k in 0..p {
                let direct = sign_pow(k)
                    * int(2 * p - k)
                    * ctx.binomial_rat(2 * p + 2 * k, p + k)
                    * ctx.binomial_rat(2 * p - 2 * k - 2, p - k - 1)
                    * ctx.binomial_rat(4 * p, 2 * p + k);
                assert_eq!(gstar(ctx, p, k), direct, "p={p} k={k}");
            }
        }
    }
}
