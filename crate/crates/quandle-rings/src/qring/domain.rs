//! The prime field `Z_p` as a const-generic coefficient domain.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of `Z_P` for a prime modulus `P`, stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    pub fn new(v: i64) -> Self {
        let m = P as i64;
        Zp(v.rem_euclid(m) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "zero has no inverse in Z_{P}");
        self.pow(P - 2)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Zp::<P>(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Add for Zp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Zp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Zp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Zp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Zp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Zp(self.0.wrapping_mul(rhs.0) % P)
    }
}

impl<const P: u64> Div for Zp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl<const P: u64> Neg for Zp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Zp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Zp<P> {
    fn one() -> Self {
        Zp(1 % P)
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_5() {
        type F = Zp<5>;
        assert_eq!(F::new(7), F::new(2));
        assert_eq!(F::new(2) + F::new(4), F::new(1));
        assert_eq!(F::new(2) * F::new(4), F::new(3));
        assert_eq!(-F::new(2), F::new(3));
        assert_eq!(F::new(3).inv(), F::new(2));
        assert_eq!(F::new(4) / F::new(3), F::new(3));
    }

    #[test]
    #[should_panic]
    fn zero_inverse_panics() {
        let _ = Zp::<7>::new(0).inv();
    }
}
