//! Arithmetic in the prime field F_p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An odd prime in the supported range `3..=13`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub const MIN: u32 = 3;
    pub const MAX: u32 = 13;

    pub fn new(p: u32) -> Result<Prime> {
        if !(Self::MIN..=Self::MAX).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn usize(self) -> usize {
        self.0 as usize
    }

    /// Reduce a signed integer into `0..p`.
    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.0
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.0;
        a %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in F_{}", self.0);
        self.pow(a, (self.0 - 2) as u64)
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Prime> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u32,
    p: Prime,
}

impl FpScalar {
    pub fn new(value: i64, p: Prime) -> FpScalar {
        FpScalar {
            value: p.reduce(value),
            p,
        }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn prime(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FpScalar> {
        (self.value != 0).then(|| FpScalar {
            value: self.p.inv(self.value),
            p: self.p,
        })
    }

    pub fn pow(self, e: u64) -> FpScalar {
        FpScalar {
            value: self.p.pow(self.value, e),
            p: self.p,
        }
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, o: FpScalar) -> FpScalar {
        assert_eq!(self.p, o.p);
        FpScalar {
            value: self.p.add(self.value, o.value),
            p: self.p,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, o: FpScalar) -> FpScalar {
        assert_eq!(self.p, o.p);
        FpScalar {
            value: self.p.sub(self.value, o.value),
            p: self.p,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, o: FpScalar) -> FpScalar {
        assert_eq!(self.p, o.p);
        FpScalar {
            value: self.p.mul(self.value, o.value),
            p: self.p,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: self.p.neg(self.value),
            p: self.p,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_range() {
        for p in [3, 5, 7, 11, 13] {
            assert!(Prime::new(p).is_ok());
        }
        for p in [0, 1, 2, 4, 9, 15, 17] {
            assert!(Prime::new(p).is_err());
        }
    }

    #[test]
    fn inverses() {
        for p in [3u32, 5, 7, 11, 13] {
            let pr = Prime::new(p).unwrap();
            for a in 1..p {
                assert_eq!(pr.mul(a, pr.inv(a)), 1);
            }
        }
    }

    #[test]
    fn scalar_ops() {
        let p = Prime::new(5).unwrap();
        let a = FpScalar::new(-1, p);
        assert_eq!(a.value(), 4);
        assert_eq!((a * a).value(), 1);
        assert_eq!((a + FpScalar::new(3, p)).value(), 2);
        assert!(FpScalar::new(10, p).inv().is_none());
        // Fermat: a^p = a
        for v in 0..5 {
            let s = FpScalar::new(v, p);
            assert_eq!(s.pow(5), s);
        }
    }
}
