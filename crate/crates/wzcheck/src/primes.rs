//! Prime generation and deterministic primality testing.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrimeError {
    #[error("invalid range: {lo}..{hi}")]
    InvalidRange { lo: u64, hi: u64 },
}

/// Deterministic Miller-Rabin, valid for all n < 2^64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // this base set decides primality for every n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// All primes in the inclusive range [lo, hi], ascending, by sieve.
pub fn primes_in(lo: u64, hi: u64) -> Result<Vec<u64>, PrimeError> {
    if lo < 2 || lo > hi {
        return Err(PrimeError::InvalidRange { lo, hi });
    }
    let hi_us = hi as usize;
    let mut sieve = vec![true; hi_us + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= hi_us {
        if sieve[i] {
            let mut j = i * i;
            while j <= hi_us {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    Ok((lo as usize..=hi_us)
        .filter(|&n| sieve[n])
        .map(|n| n as u64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_in_small_ranges() {
        assert_eq!(primes_in(3, 20).unwrap(), vec![3, 5, 7, 11, 13, 17, 19]);
        assert_eq!(primes_in(14, 16).unwrap(), Vec::<u64>::new());
        assert_eq!(primes_in(2, 2).unwrap(), vec![2]);
    }

    #[test]
    fn invalid_range() {
        assert_eq!(
            primes_in(10, 3),
            Err(PrimeError::InvalidRange { lo: 10, hi: 3 })
        );
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let sieved = primes_in(2, 2000).unwrap();
        let tested: Vec<u64> = (2..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, tested);
    }

    #[test]
    fn large_primes() {
        assert!(is_prime(2_147_483_647)); // 2^31 - 1
        assert!(is_prime(18_446_744_073_709_551_557)); // largest u64 prime
        assert!(!is_prime(18_446_744_073_709_551_555));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }
}
