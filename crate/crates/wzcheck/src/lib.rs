//! Exact-arithmetic verification of truncated Ramanujan-type supercongruences.

pub mod checks;
pub mod combinatorics;
pub mod series;
pub mod theorems;
pub mod exact;
pub mod primes;
pub mod scan;
pub mod wz;
