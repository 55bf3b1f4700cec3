//! Factorials, binomials, Pochhammer symbols, harmonic numbers, Fermat
//! quotients, and the per-scan memo context that caches them.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{int, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("factorial of negative argument {0}")]
    NegativeArgument(i64),
    #[error("{a} is not coprime to {p}")]
    NotCoprime { a: i64, p: u64 },
}

/// n! for n >= 0.
pub fn factorial(n: i64) -> Result<BigInt, CombinatoricsError> {
    if n < 0 {
        return Err(CombinatoricsError::NegativeArgument(n));
    }
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Ok(acc)
}

/// Binomial coefficient with the standard extension to negative upper index:
/// C(n,k) = (-1)^k C(k-n-1, k) for n < 0, k >= 0; zero for k < 0 or k > n >= 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let base = binomial(k - n - 1, k);
        return if k % 2 == 0 { base } else { -base };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1); empty product is 1.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Which harmonic-number variant to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonicKind {
    /// H_n(r) = sum_{k=1}^{n} 1/k^r
    Plain(u32),
    /// H_n(-r) = sum_{k=1}^{n} (-1)^k/k^r (first term negative)
    Signed(u32),
    /// H(1,1;n) = sum_{1<=i<j<=n} 1/(ij)
    Double,
}

/// Evaluate a generalized, alternating, or double harmonic number exactly.
pub fn harmonic(n: u64, kind: HarmonicKind) -> Rational {
    match kind {
        HarmonicKind::Plain(r) => (1..=n)
            .map(|k| Rational::new(BigInt::one(), BigInt::from(k).pow(r)))
            .sum(),
        HarmonicKind::Signed(r) => (1..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                Rational::new(sign, BigInt::from(k).pow(r))
            })
            .sum(),
        HarmonicKind::Double => {
            let mut total = Rational::zero();
            let mut prefix = Rational::zero();
            for j in 1..=n {
                let inv = Rational::new(BigInt::one(), BigInt::from(j));
                total += &prefix * &inv;
                prefix += inv;
            }
            total
        }
    }
}

/// Fermat quotient q_p(a) = (a^{p-1} - 1)/p, exact.
pub fn fermat_quotient(a: i64, p: u64) -> Result<BigInt, CombinatoricsError> {
    if a % p as i64 == 0 {
        return Err(CombinatoricsError::NotCoprime { a, p });
    }
    let num = BigInt::from(a).pow((p - 1) as u32) - 1;
    let (q, rem) = num_integer::Integer::div_rem(&num, &BigInt::from(p));
    debug_assert!(rem.is_zero(), "Fermat's little theorem");
    Ok(q)
}

/// Sum rationals pairwise as a balanced tree. Exact summation reduces after
/// every addition; a sequential fold pays a full-size gcd per term, while the
/// tree pays full-size costs only near the root.
pub fn tree_sum(mut terms: Vec<Rational>) -> Rational {
    if terms.is_empty() {
        return Rational::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len() / 2 + 1);
        let mut iter = terms.into_iter();
        while let Some(a) = iter.next() {
            match iter.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

/// Multiply big integers pairwise as a balanced tree.
pub fn tree_product(mut factors: Vec<BigInt>) -> BigInt {
    if factors.is_empty() {
        return BigInt::one();
    }
    while factors.len() > 1 {
        let mut next = Vec::with_capacity(factors.len() / 2 + 1);
        let mut iter = factors.into_iter();
        while let Some(a) = iter.next() {
            match iter.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        factors = next;
    }
    factors.pop().unwrap()
}

/// Grow-on-demand memo tables for factorials, harmonic prefixes, and
/// binomials.
///
/// One context is built per scan task and shared by all checks at a prime;
/// it is not shared across threads.
#[derive(Default)]
pub struct Context {
    factorials: Vec<BigInt>,
    h1: Vec<Rational>,
    h2: Vec<Rational>,
    h11: Vec<Rational>,
    binomials: std::collections::HashMap<(i64, i64), BigInt>,
    wz_terms: std::collections::HashMap<(u8, i64, i64), Rational>,
    sieve: Vec<u64>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub(crate) fn wz_term_cached(&self, key: (u8, i64, i64)) -> Option<Rational> {
        self.wz_terms.get(&key).cloned()
    }

    pub(crate) fn wz_term_insert(&mut self, key: (u8, i64, i64), value: Rational) {
        self.wz_terms.insert(key, value);
    }

    /// Primes up to `limit` (cached, regrown on demand).
    pub fn primes_to(&mut self, limit: u64) -> &[u64] {
        let have = self.sieve.last().copied().unwrap_or(0);
        if have < limit {
            self.sieve = crate::primes::primes_in(2, limit.max(16)).expect("valid sieve range");
        }
        let end = self.sieve.partition_point(|&q| q <= limit);
        &self.sieve[..end]
    }

    pub fn factorial(&mut self, n: i64) -> BigInt {
        assert!(n >= 0, "factorial table index must be non-negative");
        let n = n as usize;
        if self.factorials.is_empty() {
            self.factorials.push(BigInt::one());
        }
        while self.factorials.len() <= n {
            let next = self.factorials.last().unwrap() * self.factorials.len();
            self.factorials.push(next);
        }
        self.factorials[n].clone()
    }

    /// Binomial through the factorial table (memoized); handles the same
    /// extended domain as [`binomial`].
    pub fn binomial(&mut self, n: i64, k: i64) -> BigInt {
        if k < 0 {
            return BigInt::zero();
        }
        if n < 0 {
            let base = self.binomial(k - n - 1, k);
            return if k % 2 == 0 { base } else { -base };
        }
        if k > n {
            return BigInt::zero();
        }
        if let Some(c) = self.binomials.get(&(n, k)) {
            return c.clone();
        }
        let c = self.factorial(n) / (self.factorial(k) * self.factorial(n - k));
        self.binomials.insert((n, k), c.clone());
        c
    }

    /// Central binomial C(m, m/2) for even m.
    pub fn central(&mut self, m: i64) -> BigInt {
        debug_assert!(m % 2 == 0);
        self.binomial(m, m / 2)
    }

    pub fn binomial_rat(&mut self, n: i64, k: i64) -> Rational {
        Rational::from_integer(self.binomial(n, k))
    }

    pub fn h1(&mut self, n: i64) -> Rational {
        assert!(n >= 0);
        let n = n as usize;
        if self.h1.is_empty() {
            self.h1.push(Rational::zero());
        }
        while self.h1.len() <= n {
            let k = self.h1.len() as i64;
            let next = self.h1.last().unwrap() + Rational::new(BigInt::one(), BigInt::from(k));
            self.h1.push(next);
        }
        self.h1[n].clone()
    }

    pub fn h2(&mut self, n: i64) -> Rational {
        assert!(n >= 0);
        let n = n as usize;
        if self.h2.is_empty() {
            self.h2.push(Rational::zero());
        }
        while self.h2.len() <= n {
            let k = BigInt::from(self.h2.len());
            let next = self.h2.last().unwrap() + Rational::new(BigInt::one(), &k * &k);
            self.h2.push(next);
        }
        self.h2[n].clone()
    }

    pub fn h11(&mut self, n: i64) -> Rational {
        assert!(n >= 0);
        let n = n as usize;
        if self.h11.is_empty() {
            self.h11.push(Rational::zero());
        }
        while self.h11.len() <= n {
            let k = self.h11.len() as i64;
            let head = self.h1(k - 1) * Rational::new(BigInt::one(), BigInt::from(k));
            let next = self.h11.last().unwrap() + head;
            self.h11.push(next);
        }
        self.h11[n].clone()
    }

    /// Alternating H_n(-r), not cached (used only a handful of times per prime).
    pub fn h_signed(&mut self, n: i64, r: u32) -> Rational {
        assert!(n >= 0);
        harmonic(n as u64, HarmonicKind::Signed(r))
    }

    /// 2^e as a rational, for any sign of e.
    pub fn pow2(&self, e: i64) -> Rational {
        let p = BigInt::from(2).pow(e.unsigned_abs() as u32);
        if e >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(BigInt::one(), p)
        }
    }
}

/// Signed integer power of a rational.
pub fn rational_pow(base: &Rational, e: i64) -> Rational {
    assert!(e >= 0 || !base.is_zero());
    let mag = base.pow(e.unsigned_abs() as i32);
    if e >= 0 {
        mag
    } else {
        mag.recip()
    }
}

/// (-1)^n as a rational.
pub fn sign_pow(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0).unwrap(), BigInt::one());
        assert_eq!(factorial(5).unwrap(), BigInt::from(120));
        // oracle: iterated multiplication done by hand for 12!
        assert_eq!(factorial(12).unwrap(), BigInt::from(479_001_600i64));
        assert_eq!(factorial(-1), Err(CombinatoricsError::NegativeArgument(-1)));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        // negative upper index: C(-2, 3) = (-1)^3 C(4,3) = -4
        assert_eq!(binomial(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(1, 2), 0), int(1));
        // (1/2)(3/2)(5/2)
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&int(1), 6), int(720));
    }

    #[test]
    fn harmonic_examples() {
        // 1 + 1/2 + 1/3 + 1/4
        assert_eq!(harmonic(4, HarmonicKind::Plain(1)), rat(25, 12));
        // -1 + 1/2 - 1/3
        assert_eq!(harmonic(3, HarmonicKind::Signed(1)), rat(-5, 6));
        // (H_3^2 - H_3(2))/2 = (121/36 - 49/36)/2 = 1
        assert_eq!(harmonic(3, HarmonicKind::Double), int(1));
        assert_eq!(harmonic(0, HarmonicKind::Plain(2)), int(0));
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(2, 3).unwrap(), BigInt::from(1));
        assert_eq!(fermat_quotient(2, 7).unwrap(), BigInt::from(9));
        assert_eq!(fermat_quotient(2, 5).unwrap(), BigInt::from(3));
        assert!(fermat_quotient(10, 5).is_err());
    }

    #[test]
    fn double_harmonic_identity() {
        // H(1,1;n) = (H_n^2 - H_n(2))/2
        for n in 0..=200u64 {
            let h = harmonic(n, HarmonicKind::Plain(1));
            let h2 = harmonic(n, HarmonicKind::Plain(2));
            assert_eq!(harmonic(n, HarmonicKind::Double), (&h * &h - h2) / int(2));
        }
    }

    #[test]
    fn pochhammer_factorial_forms() {
        let mut ctx = Context::new();
        for n in 0..=200i64 {
            assert_eq!(
                pochhammer(&int(1), n as u64),
                Rational::from_integer(ctx.factorial(n))
            );
            // (1/2)_n = (2n)!/(4^n n!)
            let expected = Rational::new(
                ctx.factorial(2 * n),
                BigInt::from(4).pow(n as u32) * ctx.factorial(n),
            );
            assert_eq!(pochhammer(&rat(1, 2), n as u64), expected);
        }
    }

    #[test]
    fn signed_harmonic_two_accumulation_orders() {
        // literal definition summed front-to-back vs back-to-front
        for n in (0..=500u64).step_by(25) {
            let forward = harmonic(n, HarmonicKind::Signed(1));
            let mut backward = Rational::zero();
            for k in (1..=n).rev() {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                backward += rat(sign, k as i64);
            }
            assert_eq!(forward, backward);
        }
    }

    #[test]
    fn fermat_quotient_log_property() {
        // q_p(ab) == q_p(a) + q_p(b) (mod p) for coprime a, b
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97] {
            for a in 2i64..=50 {
                for b in [2i64, 3, 7, 50] {
                    if a % p as i64 == 0 || b % p as i64 == 0 {
                        continue;
                    }
                    let lhs = fermat_quotient(a * b, p).unwrap();
                    let rhs = fermat_quotient(a, p).unwrap() + fermat_quotient(b, p).unwrap();
                    assert!(((lhs - rhs) % BigInt::from(p)).is_zero(), "a={a} b={b} p={p}");
                }
            }
        }
    }

    #[test]
    fn context_matches_free_functions() {
        let mut ctx = Context::new();
        for n in 0..=60 {
            assert_eq!(ctx.factorial(n), factorial(n).unwrap());
            assert_eq!(ctx.h1(n), harmonic(n as u64, HarmonicKind::Plain(1)));
            assert_eq!(ctx.h2(n), harmonic(n as u64, HarmonicKind::Plain(2)));
            assert_eq!(ctx.h11(n), harmonic(n as u64, HarmonicKind::Double));
        }
    }

    proptest! {
        // Pascal recurrence on the full supported grid
        #[test]
        fn pascal_recurrence(n in 1i64..100, k in 0i64..100) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }

        #[test]
        fn pochhammer_shift(an in -20i64..20, ad in 1i64..8, n in 0u64..30) {
            // (a)_{n+1} = (a)_n (a + n)
            let a = rat(an, ad);
            let lhs = pochhammer(&a, n + 1);
            let rhs = pochhammer(&a, n) * (&a + int(n as i64));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
