//! Prime-field scalars.
//!
//! A [`Prime`] is a validated odd prime and carries all modular arithmetic on
//! raw residues; [`Fp`] is a residue tagged with its modulus for use at API
//! boundaries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An odd prime `p >= 3`, checked by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

pub fn is_prime(n: u64) -> bool {
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

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p > u32::MAX as u64 / 2 || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `(p - 1) / 2`
    #[inline]
    pub fn half(self) -> u32 {
        (self.0 - 1) / 2
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.0 - b % self.0)
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.0;
        if a == 0 {
            return Err(Error::DivisionByZero(self.0));
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }

    /// The residue of the rational number `num / den`.
    pub fn ratio(self, num: i64, den: i64) -> Result<u32> {
        Ok(self.mul(self.reduce(num), self.inv(self.reduce(den))?))
    }

    pub fn elem(self, a: i64) -> Fp {
        Fp::new(a, self)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue class modulo `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: Prime,
}

impl Fp {
    pub fn new(a: i64, p: Prime) -> Self {
        Fp {
            value: p.reduce(a),
            p,
        }
    }

    pub fn zero(p: Prime) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: Prime) -> Self {
        Fp { value: 1, p }
    }

    pub(crate) fn from_residue(value: u32, p: Prime) -> Self {
        debug_assert!(value < p.get());
        Fp { value, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Result<Fp> {
        Ok(Fp {
            value: self.p.inv(self.value)?,
            p: self.p,
        })
    }

    pub fn pow(self, e: u64) -> Fp {
        Fp {
            value: self.p.pow(self.value, e),
            p: self.p,
        }
    }

    pub fn checked_div(self, rhs: Fp) -> Result<Fp> {
        self.check(rhs)?;
        Ok(self * rhs.inv()?)
    }

    fn check(self, rhs: Fp) -> Result<()> {
        if self.p != rhs.p {
            return Err(Error::ModulusMismatch(self.p.get(), rhs.p.get()));
        }
        Ok(())
    }
}

/// Inverse of a nonzero scalar.
pub fn fp_inv(a: Fp) -> Result<Fp> {
    a.inv()
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:ident) => {
        impl $tr for Fp {
            type Output = Fp;
            fn $method(self, rhs: Fp) -> Fp {
                assert_eq!(self.p, rhs.p, "mixed moduli");
                Fp {
                    value: self.p.$op(self.value, rhs.value),
                    p: self.p,
                }
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: self.p.neg(self.value),
            p: self.p,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fp_inv(p(5).elem(2)).unwrap().value(), 3);
        assert_eq!(fp_inv(p(7).elem(4)).unwrap().value(), 2);
        assert_eq!(fp_inv(p(3).elem(1)).unwrap().value(), 1);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(fp_inv(p(5).elem(0)), Err(Error::DivisionByZero(5)));
    }

    #[test]
    fn prime_validation() {
        for bad in [0, 1, 2, 4, 9, 15, 21, 25, 91] {
            assert!(Prime::new(bad).is_err(), "{bad}");
        }
        for good in [3, 5, 7, 11, 13, 101] {
            assert!(Prime::new(good).is_ok(), "{good}");
        }
    }

    #[test]
    fn negative_reduction() {
        assert_eq!(p(5).elem(-1).value(), 4);
        assert_eq!(p(3).ratio(-1, 4).unwrap(), 2);
        assert_eq!(p(5).ratio(-1, 4).unwrap(), 1);
    }

    proptest! {
        #[test]
        fn inverse_round_trip(idx in 0usize..5, a in 1i64..10_000) {
            let pr = p([3u64, 5, 7, 11, 13][idx]);
            let x = pr.elem(a);
            prop_assume!(!x.is_zero());
            prop_assert_eq!((x * x.inv().unwrap()).value(), 1);
        }
    }
}
