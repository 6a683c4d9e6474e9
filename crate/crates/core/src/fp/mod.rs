//! Arithmetic and dense linear algebra over a prime field `F_p`.

mod compat;
mod matrix;

pub use compat::{assignment_count, compatibility_matrix, decode_key, encode_key, BipartiteCutGraph, MAX_SIDE_ASSIGNMENTS};
pub use matrix::{fp_inverse, fp_rank, kronecker, lift_representative, FpMatrix, LiftedMatrix};

use crate::{Error, Result};
use std::fmt;

/// A prime modulus. Moduli are restricted to `p < 2^32` so that residues
/// modulo `p^2` still fit a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::Precondition(format!("modulus {p} is too large (must be < 2^32)")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> Option<u64> {
        let a = a % self.0;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.0 - 2))
        }
    }

    /// True iff `p` divides `n`.
    pub fn divides(self, n: u64) -> bool {
        n.is_multiple_of(self.0)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert_eq!(PrimeModulus::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeModulus::new(1), Err(Error::NotPrime(1)));
        assert!(PrimeModulus::new(0).is_err());
        assert!(PrimeModulus::new(1 << 40).is_err());
    }

    #[test]
    fn field_ops() {
        let p = PrimeModulus::new(7).unwrap();
        assert_eq!(p.add(5, 4), 2);
        assert_eq!(p.sub(2, 5), 4);
        assert_eq!(p.neg(3), 4);
        assert_eq!(p.mul(6, 6), 1);
        assert_eq!(p.reduce_i64(-1), 6);
        for a in 1..7 {
            assert_eq!(p.mul(a, p.inv(a).unwrap()), 1);
        }
        assert_eq!(p.inv(0), None);
        // Wilson: (p-1)! = -1
        let fact = (1..7).fold(1, |acc, k| p.mul(acc, k));
        assert_eq!(fact, 6);
    }
}
