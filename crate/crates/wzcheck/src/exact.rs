//! Exact rationals, p-adic valuation, and reduction into Z/p^r.
//!
//! Every quantity in the suite is a [`Rational`] in canonical reduced form
//! (lowest terms, positive denominator). A congruence x == y (mod p^r) means
//! v_p(x - y) >= r, which stays meaningful even when x or y alone has a p in
//! its denominator.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

use crate::primes::is_prime;

/// Arbitrary-precision rational, always in lowest terms with denominator >= 1.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for n/d as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus exponent must be >= 1")]
    ZeroExponent,
    #[error("{value} is not {p}-integral (denominator divisible by {p})")]
    NotPIntegral { value: String, p: u64 },
}

/// An odd prime p together with an exponent r; the congruence context Z/p^r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePowerModulus {
    p: u64,
    r: u32,
}

impl PrimePowerModulus {
    pub fn new(p: u64, r: u32) -> Result<Self, ExactError> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(ExactError::NotOddPrime(p));
        }
        if r == 0 {
            return Err(ExactError::ZeroExponent);
        }
        Ok(PrimePowerModulus { p, r })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.r
    }

    /// p^r as a big integer.
    pub fn value(&self) -> BigUint {
        BigUint::from(self.p).pow(self.r)
    }

    /// The same prime with a smaller exponent.
    pub fn reduced(&self, r: u32) -> PrimePowerModulus {
        assert!(r >= 1 && r <= self.r);
        PrimePowerModulus { p: self.p, r }
    }
}

impl fmt::Display for PrimePowerModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.r)
    }
}

/// An element of Z/p^r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residue {
    value: BigUint,
    modulus: PrimePowerModulus,
}

impl Residue {
    pub fn new(value: BigUint, modulus: PrimePowerModulus) -> Residue {
        let m = modulus.value();
        Residue {
            value: value % m,
            modulus,
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> PrimePowerModulus {
        self.modulus
    }

    /// Reinterpret modulo p^s for s <= r.
    pub fn reduced(&self, s: u32) -> Residue {
        let m = self.modulus.reduced(s);
        Residue::new(self.value.clone(), m)
    }

    pub fn add(&self, other: &Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        Residue::new(&self.value + &other.value, self.modulus)
    }

    pub fn mul(&self, other: &Residue) -> Residue {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        Residue::new(&self.value * &other.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// p-adic valuation; `Infinite` is the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn at_least(&self, r: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => *v >= r,
        }
    }

    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = n.abs();
    loop {
        let (q, rem) = n.div_rem(&p);
        if !rem.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// v_p(x) = v_p(numerator) - v_p(denominator); zero maps to `Infinite`.
pub fn padic_valuation(x: &Rational, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
}

/// Modular inverse by extended Euclid; `a` must be coprime to `m`.
fn inverse_mod(a: &BigUint, m: &BigUint) -> BigUint {
    let a = BigInt::from_biguint(Sign::Plus, a.clone());
    let m_int = BigInt::from_biguint(Sign::Plus, m.clone());
    let ext = a.extended_gcd(&m_int);
    assert!(ext.gcd.is_one(), "inverse of non-unit");
    let inv = ext.x.mod_floor(&m_int);
    inv.to_biguint().expect("mod_floor is non-negative")
}

/// Reduce a p-integral rational into Z/p^r.
pub fn reduce_mod(x: &Rational, m: PrimePowerModulus) -> Result<Residue, ExactError> {
    if !padic_valuation(x, m.prime()).at_least(0) {
        return Err(ExactError::NotPIntegral {
            value: x.to_string(),
            p: m.prime(),
        });
    }
    let modulus = BigInt::from_biguint(Sign::Plus, m.value());
    let num = x.numer().mod_floor(&modulus).to_biguint().unwrap();
    let den = x.denom().mod_floor(&modulus).to_biguint().unwrap();
    let inv = inverse_mod(&den, &m.value());
    Ok(Residue::new(num * inv, m))
}

/// x == y (mod p^r), via the valuation of the difference.
pub fn congruent(x: &Rational, y: &Rational, m: PrimePowerModulus) -> bool {
    padic_valuation(&(x - y), m.prime()).at_least(m.exponent() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(p: u64, r: u32) -> PrimePowerModulus {
        PrimePowerModulus::new(p, r).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&rat(25, 12), 5), Valuation::Finite(2));
        assert_eq!(padic_valuation(&int(0), 7), Valuation::Infinite);
        assert_eq!(padic_valuation(&rat(9135, 1024), 3), Valuation::Finite(2));
        assert_eq!(padic_valuation(&rat(1, 3), 3), Valuation::Finite(-1));
    }

    // independent oracle: factor counts by trial division on numerator/denominator
    #[test]
    fn valuation_matches_trial_division() {
        for num in -60i64..60 {
            for den in 1i64..40 {
                for p in [3u64, 5, 7] {
                    let x = rat(num, den);
                    let expected = if num == 0 {
                        None
                    } else {
                        let count = |mut n: i64| {
                            let mut v = 0i64;
                            n = n.abs();
                            while n % p as i64 == 0 {
                                n /= p as i64;
                                v += 1;
                            }
                            v
                        };
                        // reduce the fraction first: valuation reads off the reduced form,
                        // but v_p(num) - v_p(den) is invariant under common factors anyway
                        Some(count(num) - count(den))
                    };
                    assert_eq!(padic_valuation(&x, p).finite(), expected, "{num}/{den} at {p}");
                }
            }
        }
    }

    #[test]
    fn reduce_mod_examples() {
        // 1024^{-1} mod 27 computed by extended Euclid directly: 1024 = 37*27+25,
        // 25*13 = 325 = 12*27+1, so 9135/1024 == 9*13 == 9 (mod 27)
        let r = reduce_mod(&rat(9135, 1024), m(3, 3)).unwrap();
        assert_eq!(r.value(), &BigUint::from(9u32));
        let z = reduce_mod(&int(0), m(5, 2)).unwrap();
        assert_eq!(z.value(), &BigUint::from(0u32));
        assert!(matches!(
            reduce_mod(&rat(1, 3), m(3, 1)),
            Err(ExactError::NotPIntegral { .. })
        ));
    }

    #[test]
    fn congruent_examples() {
        let five_cubed = m(5, 3);
        let x = rat(45, 8);
        let y = &x + int(3 * 125);
        assert!(congruent(&x, &y, five_cubed));
        // Wolstenholme at p = 5: H_4 = 25/12
        assert!(congruent(&rat(25, 12), &int(0), m(5, 2)));
        assert!(!congruent(&rat(1, 2), &int(1), m(3, 1)));
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimePowerModulus::new(9, 1).is_err());
        assert!(PrimePowerModulus::new(2, 1).is_err());
        assert!(PrimePowerModulus::new(5, 0).is_err());
        assert!(PrimePowerModulus::new(5, 5).is_ok());
    }

    proptest! {
        // reduce_mod is a ring homomorphism on p-integral rationals
        #[test]
        fn reduction_is_homomorphic(an in -200i64..200, ad in 1i64..50,
                                    bn in -200i64..200, bd in 1i64..50,
                                    pr in 0usize..6) {
            let (p, r) = [(3u64, 2u32), (3, 4), (5, 3), (7, 2), (11, 1), (13, 5)][pr];
            let md = m(p, r);
            let mut a = rat(an, ad);
            let mut b = rat(bn, bd);
            // force p-integrality by stripping p from denominators
            for x in [&mut a, &mut b] {
                while !padic_valuation(x, p).at_least(0) {
                    *x *= int(p as i64);
                }
            }
            let ra = reduce_mod(&a, md).unwrap();
            let rb = reduce_mod(&b, md).unwrap();
            prop_assert_eq!(reduce_mod(&(&a + &b), md).unwrap(), ra.add(&rb));
            prop_assert_eq!(reduce_mod(&(&a * &b), md).unwrap(), ra.mul(&rb));
        }

        // v_p(xy) = v_p(x) + v_p(y)
        #[test]
        fn valuation_is_additive(an in 1i64..500, ad in 1i64..500,
                                 bn in 1i64..500, bd in 1i64..500,
                                 p in 0usize..3) {
            let p = [3u64, 5, 7][p];
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let va = padic_valuation(&a, p).finite().unwrap();
            let vb = padic_valuation(&b, p).finite().unwrap();
            prop_assert_eq!(padic_valuation(&(&a * &b), p).finite().unwrap(), va + vb);
        }

        // congruence at p^r implies congruence at every smaller exponent,
        // and reduction mod p^r reduced to p^s equals reduction mod p^s
        #[test]
        fn exponent_compatibility(n in -500i64..500, d in 1i64..100, r in 2u32..5) {
            let p = 5u64;
            let mut x = rat(n, d);
            while !padic_valuation(&x, p).at_least(0) {
                x *= int(p as i64);
            }
            let big = m(p, r);
            for s in 1..=r {
                let small = m(p, s);
                prop_assert_eq!(reduce_mod(&x, big).unwrap().reduced(s),
                                reduce_mod(&x, small).unwrap());
                if congruent(&x, &int(1), big) {
                    prop_assert!(congruent(&x, &int(1), small));
                }
            }
        }
    }
}
