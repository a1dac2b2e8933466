//! Exact computations in the quandle ring of `Core(Z)`.
//!
//! `Core(Z)` is the integers with `i * j = 2j - i`; its quandle ring has
//! basis `{e_i : i in Z}` and product `e_i e_j = e_{2j-i}`. The quandle is
//! semi-latin (left multiplications injective) but not latin, left
//! orderable but not right orderable, and its integral ring has only
//! trivial idempotents: squaring strictly widens the support,
//! `min(u^2) < min(u) <= max(u) < max(u^2)` whenever the support has at
//! least two points.
//!
//! Exponents are arbitrary-precision: every multiplication doubles the
//! exponent range and must never overflow.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

use crate::par::flat_map_ordered;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoreZError {
    #[error("the zero element has no extrema")]
    ZeroElement,
    #[error("{0} is not divisible by 3")]
    NotDivisibleBy3(BigInt),
    #[error("closure depth {depth} exceeds limit {limit}")]
    DepthLimit { depth: usize, limit: usize },
}

/// A finitely supported element of the `Core(Z)` quandle ring: exponent
/// to nonzero integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoreZElement {
    coeffs: BTreeMap<BigInt, BigInt>,
}

impl CoreZElement {
    pub fn zero() -> Self {
        CoreZElement::default()
    }

    /// The basis element `e_i`.
    pub fn basis(i: impl Into<BigInt>) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i.into(), BigInt::one());
        CoreZElement { coeffs }
    }

    pub fn from_pairs<I, E, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<BigInt>,
        C: Into<BigInt>,
    {
        let mut out = CoreZElement::zero();
        for (e, c) in pairs {
            out.add_term(e.into(), c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: &BigInt) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigInt, &BigInt)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, e: BigInt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&e) {
            Some(old) => {
                let next = old + c;
                if !next.is_zero() {
                    self.coeffs.insert(e, next);
                }
            }
            None => {
                self.coeffs.insert(e, c);
            }
        }
    }

    /// Bilinear convolution under `(i, j) -> 2j - i`, exact on the full
    /// support (no window truncation anywhere).
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = CoreZElement::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let target = 2 * j - i;
                out.add_term(target, a * b);
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.multiply(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    /// `[u, v] = uv - vu`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.multiply(other).sub(&other.multiply(self))
    }

    /// `((min exponent, its coefficient), (max exponent, its coefficient))`.
    pub fn extrema(&self) -> Result<((BigInt, BigInt), (BigInt, BigInt)), CoreZError> {
        let min = self.coeffs.iter().next().ok_or(CoreZError::ZeroElement)?;
        let max = self.coeffs.iter().next_back().unwrap();
        Ok((
            (min.0.clone(), min.1.clone()),
            (max.0.clone(), max.1.clone()),
        ))
    }
}

impl fmt::Display for CoreZElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.magnitude().to_string();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mag == "1" {
                write!(f, "e[{e}]")?;
            } else {
                write!(f, "{mag}*e[{e}]")?;
            }
        }
        Ok(())
    }
}

/// Why an element is or is not idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdempotencyCertificate {
    /// `0^2 = 0`.
    Zero,
    /// `u = e_i`: a trivial idempotent.
    TrivialBasis { exponent: BigInt },
    /// Single support point with coefficient `a != 1`, so `a^2 != a`.
    NonUnitCoefficient { coefficient: BigInt },
    /// Support of size >= 2: the strict chain
    /// `min(u^2) < min(u) <= max(u) < max(u^2)` rules idempotency out.
    SupportChain {
        min_sq: BigInt,
        min_u: BigInt,
        max_u: BigInt,
        max_sq: BigInt,
    },
}

/// Exact idempotency test with an explanatory certificate.
pub fn cz_is_idempotent(u: &CoreZElement) -> (bool, IdempotencyCertificate) {
    if u.is_zero() {
        return (true, IdempotencyCertificate::Zero);
    }
    let ((min_u, min_c), (max_u, max_c)) = u.extrema().unwrap();
    if min_u == max_u {
        return if min_c.is_one() {
            (true, IdempotencyCertificate::TrivialBasis { exponent: min_u })
        } else {
            (false, IdempotencyCertificate::NonUnitCoefficient { coefficient: min_c })
        };
    }
    let _ = max_c;
    // min(u^2) = 2*min - max < min and max(u^2) = 2*max - min > max
    let min_sq = 2 * &min_u - &max_u;
    let max_sq = 2 * &max_u - &min_u;
    debug_assert!(u.square() != *u);
    (
        false,
        IdempotencyCertificate::SupportChain {
            min_sq,
            min_u,
            max_u,
            max_sq,
        },
    )
}

/// Check `[e_{a/3}, e_{2a/3}] = e_a - e_0` exactly; `a` must be divisible
/// by 3.
pub fn cz_commutator_identity(a: impl Into<BigInt>) -> Result<bool, CoreZError> {
    let a: BigInt = a.into();
    let three = BigInt::from(3);
    if !(&a % &three).is_zero() {
        return Err(CoreZError::NotDivisibleBy3(a));
    }
    let third = &a / &three;
    let left = CoreZElement::basis(third.clone());
    let right = CoreZElement::basis(2 * &third);
    let expect = CoreZElement::basis(a).sub(&CoreZElement::basis(0));
    Ok(left.commutator(&right) == expect)
}

/// Result of the window order probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderProbeReport {
    pub window: i64,
    pub checks: u64,
    pub all_passed: bool,
}

/// For all `i < j` and `k` in `[-W, W]`: left multiplication preserves the
/// order (`2i - k < 2j - k` reading `k * i < k * j`) and right
/// multiplication reverses it (`2k - i > 2k - j`).
pub fn cz_order_probe(window: i64) -> OrderProbeReport {
    assert!(window >= 1);
    let mut checks = 0u64;
    let mut all_passed = true;
    for i in -window..=window {
        for j in i + 1..=window {
            for k in -window..=window {
                checks += 2;
                if !(2 * i - k < 2 * j - k) || !(2 * k - i > 2 * k - j) {
                    all_passed = false;
                }
            }
        }
    }
    OrderProbeReport {
        window,
        checks,
        all_passed,
    }
}

/// Deterministic random element: sample `index` of the stream seeded by
/// `seed`. Support size in `[2, 6]`, exponents in `[-20, 20]`, nonzero
/// coefficients in `[-9, 9]`.
pub fn random_element(seed: u64, index: u64) -> CoreZElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let support = rng.gen_range(2..=6usize);
    let mut u = CoreZElement::zero();
    while u.support_size() < support {
        let e = rng.gen_range(-20i64..=20);
        if !u.coeff(&BigInt::from(e)).is_zero() {
            continue;
        }
        let mut c = 0i64;
        while c == 0 {
            c = rng.gen_range(-9i64..=9);
        }
        u.add_term(BigInt::from(e), BigInt::from(c));
    }
    u
}

/// Result of the seeded non-idempotency sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub samples: u64,
    pub seed: u64,
    /// Every sampled element satisfied `u^2 != u` with the extremal
    /// certificate verified against the actual square.
    pub all_verified: bool,
    pub failures: u64,
}

/// Fixed default seed so runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x5EED_CAFE;

/// Sample `samples` random support->=2 elements and verify, for each, that
/// `u^2 != u` and that the extremal law holds with coefficients:
/// `min(u^2) = (2m - M, a_M a_m)` and `max(u^2) = (2M - m, a_m a_M)`.
pub fn cz_idempotent_sweep(samples: u64, seed: u64) -> SweepReport {
    let results = flat_map_ordered(samples as usize, true, |index| {
        let u = random_element(seed, index as u64);
        let sq = u.square();
        let ((min_u, min_c), (max_u, max_c)) = u.extrema().unwrap();
        let ((min_sq, min_sq_c), (max_sq, max_sq_c)) = sq.extrema().unwrap();
        let chain = min_sq < min_u && min_u <= max_u && max_u < max_sq;
        let coeffs_ok = min_sq == 2 * &min_u - &max_u
            && max_sq == 2 * &max_u - &min_u
            && min_sq_c == &max_c * &min_c
            && max_sq_c == &min_c * &max_c;
        let ok = sq != u && chain && coeffs_ok;
        vec![ok]
    });
    let failures = results.iter().filter(|&&ok| !ok).count() as u64;
    SweepReport {
        samples,
        seed,
        all_verified: failures == 0,
        failures,
    }
}

/// A dyadic rational `numer / 2^exp` in lowest terms (odd numerator or
/// `exp = 0`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyadicRational {
    numer: BigInt,
    exp: u32,
}

impl DyadicRational {
    pub fn new(numer: impl Into<BigInt>, exp: u32) -> Self {
        let mut numer: BigInt = numer.into();
        let mut exp = exp;
        let two = BigInt::from(2);
        while exp > 0 && (&numer % &two).is_zero() {
            numer /= &two;
            exp -= 1;
        }
        DyadicRational { numer, exp }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        DyadicRational::new(n, 0)
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn exp(&self) -> u32 {
        self.exp
    }

    /// The quandle operation `a * b = (a + b) / 2`.
    pub fn midpoint(&self, other: &Self) -> Self {
        let e = self.exp.max(other.exp);
        let a = &self.numer << (e - self.exp);
        let b = &other.numer << (e - other.exp);
        DyadicRational::new(a + b, e + 1)
    }

    /// The inverse operation `a ~* b = 2a - b` (right division:
    /// `(a ~* b) * b = a`... solves `x * b = a` as `x = 2a - b`).
    pub fn reflect(&self, other: &Self) -> Self {
        let e = self.exp.max(other.exp);
        let a = &self.numer << (e - self.exp);
        let b = &other.numer << (e - other.exp);
        DyadicRational::new((a << 1) - b, e)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/2^{}", self.numer, self.exp)
        }
    }
}

/// Closure statistics of `{0, 1}` under midpoint and reflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicReport {
    pub depth: usize,
    /// Closure size after each round.
    pub sizes: Vec<usize>,
    /// Midpoint commutativity held on every generated pair.
    pub commutative: bool,
    /// Idempotency `a * a = a` held on every generated element.
    pub idempotent: bool,
}

pub const DYADIC_DEPTH_LIMIT: usize = 12;

/// Breadth-first closure of `{0, 1}` under `a*b = (a+b)/2` and
/// `a ~* b = 2a - b`, to the given depth. Every produced value is a
/// normalized dyadic rational by construction; the normalization
/// invariant, commutativity of `*` and idempotency are re-verified on the
/// fly.
pub fn dyadic_probe(depth: usize) -> Result<DyadicReport, CoreZError> {
    if depth == 0 || depth > DYADIC_DEPTH_LIMIT {
        return Err(CoreZError::DepthLimit {
            depth,
            limit: DYADIC_DEPTH_LIMIT,
        });
    }
    use std::collections::BTreeSet;
    let mut cur: BTreeSet<DyadicRational> =
        [DyadicRational::integer(0), DyadicRational::integer(1)]
            .into_iter()
            .collect();
    let mut sizes = Vec::with_capacity(depth);
    let mut commutative = true;
    let mut idempotent = true;
    for _ in 0..depth {
        let items: Vec<DyadicRational> = cur.iter().cloned().collect();
        let mut next = cur.clone();
        for a in &items {
            if a.midpoint(a) != *a {
                idempotent = false;
            }
            for b in &items {
                let m = a.midpoint(b);
                if m != b.midpoint(a) {
                    commutative = false;
                }
                debug_assert!(m.exp == 0 || !(&m.numer % BigInt::from(2)).is_zero());
                next.insert(m);
                next.insert(a.reflect(b));
            }
        }
        cur = next;
        sizes.push(cur.len());
    }
    Ok(DyadicReport {
        depth,
        sizes,
        commutative,
        idempotent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn basis_product() {
        let u = CoreZElement::basis(1).multiply(&CoreZElement::basis(0));
        assert_eq!(u, CoreZElement::basis(-1));
    }

    #[test]
    fn binomial_square() {
        let u = CoreZElement::from_pairs([(0, 1), (1, 1)]);
        let expect = CoreZElement::from_pairs([(0, 1), (2, 1), (-1, 1), (1, 1)]);
        assert_eq!(u.square(), expect);
    }

    #[test]
    fn commutator_of_basis_elements() {
        let c = CoreZElement::basis(0).commutator(&CoreZElement::basis(1));
        assert_eq!(c, CoreZElement::from_pairs([(2, 1), (-1, -1)]));
    }

    #[test]
    fn extrema_and_extremal_law() {
        let u = CoreZElement::from_pairs([(0, 2), (5, 3)]);
        let ((m, mc), (big, bc)) = u.extrema().unwrap();
        assert_eq!((m, mc, big, bc), (bi(0), bi(2), bi(5), bi(3)));
        let sq = u.square();
        let ((m, mc), (big, bc)) = sq.extrema().unwrap();
        assert_eq!((m, mc), (bi(-5), bi(6)));
        assert_eq!((big, bc), (bi(10), bi(6)));
        assert_eq!(
            CoreZElement::basis(7).extrema().unwrap(),
            ((bi(7), bi(1)), (bi(7), bi(1)))
        );
        assert_eq!(CoreZElement::zero().extrema(), Err(CoreZError::ZeroElement));
    }

    #[test]
    fn idempotency_certificates() {
        let (ok, cert) = cz_is_idempotent(&CoreZElement::basis(0));
        assert!(ok);
        assert_eq!(cert, IdempotencyCertificate::TrivialBasis { exponent: bi(0) });

        let (ok, cert) = cz_is_idempotent(&CoreZElement::from_pairs([(0, 2)]));
        assert!(!ok);
        assert_eq!(
            cert,
            IdempotencyCertificate::NonUnitCoefficient { coefficient: bi(2) }
        );

        let (ok, cert) = cz_is_idempotent(&CoreZElement::from_pairs([(0, 1), (1, 1)]));
        assert!(!ok);
        match cert {
            IdempotencyCertificate::SupportChain { min_sq, min_u, .. } => {
                assert_eq!(min_sq, bi(-1));
                assert_eq!(min_u, bi(0));
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn commutator_identity_examples() {
        assert!(cz_commutator_identity(3).unwrap());
        assert!(cz_commutator_identity(0).unwrap());
        assert!(cz_commutator_identity(-6).unwrap());
        assert!(matches!(
            cz_commutator_identity(4),
            Err(CoreZError::NotDivisibleBy3(_))
        ));
    }

    #[test]
    fn order_probe_small_window() {
        let r = cz_order_probe(5);
        assert!(r.all_passed);
        // 2 * C(11,2) * 11 checks
        assert_eq!(r.checks, 2 * 55 * 11);
    }

    #[test]
    fn sweep_is_deterministic_and_clean() {
        let a = cz_idempotent_sweep(64, DEFAULT_SEED);
        let b = cz_idempotent_sweep(64, DEFAULT_SEED);
        assert_eq!(a, b);
        assert!(a.all_verified);
    }

    #[test]
    fn random_elements_respect_ranges() {
        for i in 0..32 {
            let u = random_element(DEFAULT_SEED, i);
            assert!((2..=6).contains(&u.support_size()));
            for (e, c) in u.iter() {
                assert!(*e >= bi(-20) && *e <= bi(20));
                assert!(!c.is_zero() && c.magnitude() <= bi(9).magnitude());
            }
        }
    }

    #[test]
    fn dyadic_basics() {
        let zero = DyadicRational::integer(0);
        let one = DyadicRational::integer(1);
        let half = zero.midpoint(&one);
        assert_eq!(half, DyadicRational::new(1, 1));
        assert_eq!(half.to_string(), "1/2^1");
        // a * a = a
        assert_eq!(half.midpoint(&half), half);
        // reflection solves x * b = a
        let x = one.reflect(&zero);
        assert_eq!(x, DyadicRational::integer(2));
        assert_eq!(x.midpoint(&zero), one);
    }

    #[test]
    fn dyadic_closure_sizes() {
        let r = dyadic_probe(3).unwrap();
        assert_eq!(r.sizes, vec![5, 19, 113]);
        assert!(r.commutative && r.idempotent);
        assert!(matches!(
            dyadic_probe(13),
            Err(CoreZError::DepthLimit { .. })
        ));
        assert!(dyadic_probe(0).is_err());
    }
}
