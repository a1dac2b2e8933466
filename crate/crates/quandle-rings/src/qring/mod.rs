//! Quandle-ring arithmetic over exact coefficient domains.
//!
//! `k[X]` is the free module on `{e_x : x in X}` with bilinear product
//! `e_x e_y = e_{x*y}`. Elements are sparse maps from basis index to
//! coefficient; the coefficient domain is a type parameter, with
//! arbitrary-precision integers ([`num_bigint::BigInt`]), exact rationals
//! ([`num_rational::BigRational`]) and prime fields ([`domain::Zp`]) all
//! supported. No floating point anywhere.

pub mod closure;
pub mod delta;
pub mod domain;

pub use closure::subalgebra_closure;
pub use delta::{
    delta_power, delta_power_with, dihedral_e_product, filtration, from_delta, to_delta,
    DeltaVector, Filtration, PowerOrder,
};

use crate::quandle::{is_homomorphism, Quandle, QuandleError};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("element has nonzero augmentation, not in the augmentation ideal")]
    NotAugmentationZero,
    #[error("index {index} out of range 1..={max}")]
    IndexRange { index: usize, max: usize },
}

/// An exact coefficient domain.
pub trait Scalar:
    Clone
    + Eq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + Eq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
{
}

/// An element of the quandle ring `k[X]`: a finitely supported map from
/// basis indices to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement<C: Scalar> {
    quandle: Arc<Quandle>,
    coeffs: BTreeMap<usize, C>,
}

impl<C: Scalar> RingElement<C> {
    pub fn zero(quandle: &Arc<Quandle>) -> Self {
        RingElement {
            quandle: Arc::clone(quandle),
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element `e_x`.
    pub fn basis(quandle: &Arc<Quandle>, x: usize) -> Self {
        assert!(x < quandle.order(), "basis index out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(x, C::one());
        RingElement {
            quandle: Arc::clone(quandle),
            coeffs,
        }
    }

    /// `e_i - e_0`, the `i`-th element of the standard basis of the
    /// augmentation ideal (the anchor is element 0).
    pub fn e_minus_anchor(quandle: &Arc<Quandle>, i: usize) -> Self {
        Self::basis(quandle, i) - Self::basis(quandle, 0)
    }

    /// Build from `(index, coefficient)` pairs; repeated indices
    /// accumulate, zero results are dropped.
    pub fn from_coeffs<I>(quandle: &Arc<Quandle>, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
    {
        let mut out = Self::zero(quandle);
        for (i, c) in pairs {
            out.add_assign_term(i, c);
        }
        out
    }

    /// The all-ones element `w = sum_x e_x`.
    pub fn all_ones(quandle: &Arc<Quandle>) -> Self {
        Self::from_coeffs(quandle, (0..quandle.order()).map(|i| (i, C::one())))
    }

    pub fn quandle(&self) -> &Arc<Quandle> {
        &self.quandle
    }

    pub fn coeff(&self, x: usize) -> C {
        self.coeffs.get(&x).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &C)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().copied().collect()
    }

    fn add_assign_term(&mut self, i: usize, c: C) {
        assert!(i < self.quandle.order(), "basis index out of range");
        if c.is_zero() {
            return;
        }
        let cur = self.coeffs.remove(&i);
        let next = match cur {
            Some(old) => old + c,
            None => c,
        };
        if !next.is_zero() {
            self.coeffs.insert(i, next);
        }
    }

    /// The augmentation: the sum of coefficients. A ring homomorphism onto
    /// the coefficient domain.
    pub fn augment(&self) -> C {
        self.coeffs
            .values()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Bilinear convolution through the operation table:
    /// `(sum a_x e_x)(sum b_y e_y) = sum a_x b_y e_{x*y}`.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(
            self.quandle, other.quandle,
            "cannot multiply elements of different quandle rings"
        );
        let mut out = Self::zero(&self.quandle);
        for (&x, a) in &self.coeffs {
            for (&y, b) in &other.coeffs {
                out.add_assign_term(self.quandle.op(x, y), a.clone() * b.clone());
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.multiply(self)
    }

    /// Exact test of `u^2 = u`.
    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// Does `u` commute with every basis element?
    pub fn is_central(&self) -> bool {
        let n = self.quandle.order();
        (0..n).all(|y| {
            let ey = Self::basis(&self.quandle, y);
            self.multiply(&ey) == ey.multiply(self)
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.quandle);
        for (&i, a) in &self.coeffs {
            out.add_assign_term(i, a.clone() * c.clone());
        }
        out
    }

    /// Convert coefficients into another domain.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> RingElement<D> {
        RingElement::from_coeffs(&self.quandle, self.coeffs.iter().map(|(&i, c)| (i, f(c))))
    }

    /// Full coefficient vector of length `n`.
    pub fn to_dense(&self) -> Vec<C> {
        let mut v = vec![C::zero(); self.quandle.order()];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }
}

impl<C: Scalar> Add for RingElement<C> {
    type Output = RingElement<C>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Scalar> Add for &RingElement<C> {
    type Output = RingElement<C>;
    fn add(self, rhs: Self) -> RingElement<C> {
        assert_eq!(self.quandle, rhs.quandle, "mixed quandle rings");
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.add_assign_term(i, c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for RingElement<C> {
    type Output = RingElement<C>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Scalar> Sub for &RingElement<C> {
    type Output = RingElement<C>;
    fn sub(self, rhs: Self) -> RingElement<C> {
        assert_eq!(self.quandle, rhs.quandle, "mixed quandle rings");
        let mut out = self.clone();
        for (&i, c) in &rhs.coeffs {
            out.add_assign_term(i, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Neg for RingElement<C> {
    type Output = RingElement<C>;
    fn neg(self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Scalar> Mul for &RingElement<C> {
    type Output = RingElement<C>;
    fn mul(self, rhs: Self) -> RingElement<C> {
        self.multiply(rhs)
    }
}

impl<C: Scalar> fmt::Display for RingElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&i, c) in &self.coeffs {
            let s = c.to_string();
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mag == "1" {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{mag}*e{i}")?;
            }
        }
        Ok(())
    }
}

/// The linear extension of a quandle homomorphism to the quandle rings.
///
/// Verified on construction; `apply` is then multiplicative:
/// `F(uv) = F(u)F(v)`.
pub struct RingHom {
    source: Arc<Quandle>,
    target: Arc<Quandle>,
    map: Vec<usize>,
}

impl RingHom {
    pub fn new(
        source: &Arc<Quandle>,
        target: &Arc<Quandle>,
        map: Vec<usize>,
    ) -> Result<Self, QuandleError> {
        if !is_homomorphism(source, target, &map) {
            return Err(QuandleError::InvalidParam(
                "map is not a quandle homomorphism".into(),
            ));
        }
        Ok(RingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        })
    }

    pub fn apply<C: Scalar>(&self, u: &RingElement<C>) -> RingElement<C> {
        assert_eq!(*u.quandle, *self.source, "element not in the source ring");
        RingElement::from_coeffs(
            &self.target,
            u.coeffs.iter().map(|(&i, c)| (self.map[i], c.clone())),
        )
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Z = RingElement<BigInt>;

    fn arc(q: Quandle) -> Arc<Quandle> {
        Arc::new(q)
    }

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn basis_product_in_r3() {
        let q = arc(Quandle::dihedral(3));
        let e1 = Z::basis(&q, 1);
        let e2 = Z::basis(&q, 2);
        assert_eq!(e1.multiply(&e2), Z::basis(&q, 0)); // 1*2 = 0
    }

    #[test]
    fn e1_e2_product_in_r5() {
        let q = arc(Quandle::dihedral(5));
        let u = Z::e_minus_anchor(&q, 1);
        let v = Z::e_minus_anchor(&q, 2);
        // E1 E2 = e3 - 2 e4 + e0
        let expect = Z::from_coeffs(&q, [(3, bi(1)), (4, bi(-2)), (0, bi(1))]);
        assert_eq!(u.multiply(&v), expect);
    }

    #[test]
    fn zero_annihilates() {
        let q = arc(Quandle::dihedral(5));
        let z = Z::zero(&q);
        let u = Z::from_coeffs(&q, [(0, bi(3)), (2, bi(-1))]);
        assert_eq!(z.multiply(&u), z);
        assert_eq!(u.multiply(&z), z);
    }

    #[test]
    fn augmentation_examples() {
        let q = arc(Quandle::dihedral(3));
        let u = Z::from_coeffs(&q, [(0, bi(2)), (1, bi(-1))]);
        assert_eq!(u.augment(), bi(1));
        for i in 1..3 {
            assert_eq!(Z::e_minus_anchor(&q, i).augment(), bi(0));
        }
        let q5 = arc(Quandle::dihedral(5));
        let prod = Z::e_minus_anchor(&q5, 1).multiply(&Z::e_minus_anchor(&q5, 2));
        assert_eq!(prod.augment(), bi(0));
    }

    #[test]
    fn augmentation_is_multiplicative() {
        let q = arc(Quandle::x6());
        let u = Z::from_coeffs(&q, [(0, bi(2)), (3, bi(-5)), (5, bi(1))]);
        let v = Z::from_coeffs(&q, [(1, bi(7)), (2, bi(1)), (4, bi(-2))]);
        assert_eq!(u.multiply(&v).augment(), u.augment() * v.augment());
    }

    #[test]
    fn every_basis_element_is_idempotent() {
        let q = arc(Quandle::x6());
        for x in 0..6 {
            assert!(Z::basis(&q, x).is_idempotent());
        }
    }

    #[test]
    fn rational_idempotent_in_r3() {
        let q = arc(Quandle::dihedral(3));
        type Q = RingElement<BigRational>;
        let third = BigRational::new(bi(-1), bi(3));
        let u = (Q::e_minus_anchor(&q, 1) + Q::e_minus_anchor(&q, 2)).scale(&third);
        assert!(u.is_idempotent());
        assert!(u.augment().is_zero());
    }

    #[test]
    fn kernel_combination_is_not_idempotent() {
        // alpha(e1-e2) + beta(e3-e4) + gamma(e5-e6) with all three nonzero
        let q = arc(Quandle::x6());
        let u = Z::from_coeffs(
            &q,
            [
                (0, bi(2)),
                (1, bi(-2)),
                (2, bi(1)),
                (3, bi(-1)),
                (4, bi(3)),
                (5, bi(-3)),
            ],
        );
        assert!(!u.is_idempotent());
    }

    #[test]
    fn center_membership() {
        let q5 = arc(Quandle::dihedral(5));
        assert!(Z::all_ones(&q5).is_central());

        let t2 = arc(Quandle::trivial(2));
        assert!(!Z::basis(&t2, 1).is_central());

        let q4 = arc(Quandle::dihedral(4));
        assert!(!Z::all_ones(&q4).is_central());
    }

    #[test]
    fn ring_hom_extends_quandle_hom() {
        let x = arc(Quandle::x6());
        let r3 = arc(Quandle::dihedral(3));
        let f = RingHom::new(&x, &r3, vec![0, 0, 1, 1, 2, 2]).unwrap();
        // e1 - e2 (1-based) dies
        let k = Z::basis(&x, 0) - Z::basis(&x, 1);
        assert!(f.apply(&k).is_zero());
        // multiplicative on a nontrivial element
        let u = Z::from_coeffs(&x, [(0, bi(1)), (2, bi(2)), (5, bi(-1))]);
        assert_eq!(f.apply(&u.square()), f.apply(&u).square());
        // identity homomorphism is the identity ring map
        let id = RingHom::new(&x, &x, (0..6).collect()).unwrap();
        assert_eq!(id.apply(&u), u);
    }

    #[test]
    fn ring_hom_rejects_non_homomorphism() {
        let x = arc(Quandle::x6());
        let r3 = arc(Quandle::dihedral(3));
        assert!(RingHom::new(&x, &r3, vec![0, 1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn display_formatting() {
        let q = arc(Quandle::dihedral(3));
        let u = Z::from_coeffs(&q, [(0, bi(2)), (1, bi(-1))]);
        assert_eq!(u.to_string(), "2*e0 - e1");
        assert_eq!(Z::zero(&q).to_string(), "0");
    }
}
