//! Arithmetic in the prime field F_p.
//!
//! Elements are plain `u32` values kept fully reduced into `[0, p)`.
//! The modulus is bounded below 2^31 so that all intermediate products
//! fit in `u64`; there is no floating point and no big-integer fallback.

use crate::error::{Error, Result};

/// A prime field F_p, 2 <= p < 2^31. Primality is checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary integer literal into the field.
    #[inline]
    pub fn reduce(self, n: u64) -> u32 {
        (n % self.p as u64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc: u32 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem.
    ///
    /// Panics on zero; callers never divide by a zero coefficient because
    /// polynomials store no zero terms.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "division by zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    #[inline]
    pub fn div(self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }
}

fn is_prime(n: u64) -> bool {
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
    fn rejects_non_primes() {
        for bad in [0u32, 1, 4, 9, 15, 1 << 31] {
            assert!(PrimeField::new(bad).is_err(), "{bad} accepted");
        }
        for good in [2u32, 3, 5, 7, 65537, 2147483647] {
            assert!(PrimeField::new(good).is_ok(), "{good} rejected");
        }
    }

    #[test]
    fn field_axioms_small() {
        for p in [2u32, 3, 7, 13] {
            let f = PrimeField::new(p).unwrap();
            for a in 0..p {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..p {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn large_modulus_products_are_exact() {
        let f = PrimeField::new(2147483647).unwrap();
        let a = 2147483646;
        // (p-1)^2 = 1 mod p
        assert_eq!(f.mul(a, a), 1);
        assert_eq!(f.pow(a, 2), 1);
    }
}
