//! The augmentation ideal `Δ(X)` and its power filtration.
//!
//! For a quandle on `{0, .., n-1}` the elements `E_i = e_i - e_0`
//! (`i = 1..n`) form a basis of `Δ(X)`, so augmentation-zero elements are
//! integer vectors of length `n-1` and each ideal power `Δ^k` is an
//! integer lattice in those coordinates. Powers are right-normed,
//! `Δ^{k+1} = Δ^k · Δ`, the convention all of the reference computations
//! use; left-normed powers are available through [`PowerOrder`] for
//! exploration.

use super::{RingElement, RingError};
use crate::quandle::Quandle;
use crate::zlattice::{smith_invariants_of, Lattice};
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// Coordinates of an augmentation-zero element in the `E`-basis:
/// coordinate `i-1` is the coefficient of `E_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DeltaVector(pub Vec<BigInt>);

impl DeltaVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        DeltaVector(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Render with a basis symbol, e.g. `E1 - 2*E4` or `0`.
    pub fn display_with(&self, symbol: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude().to_string();
            let neg = c.sign() == num_bigint::Sign::Minus;
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(&format!("{symbol}{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `E`-coordinates of an augmentation-zero element.
pub fn to_delta(u: &RingElement<BigInt>) -> Result<DeltaVector, RingError> {
    if !u.augment().is_zero() {
        return Err(RingError::NotAugmentationZero);
    }
    let n = u.quandle().order();
    Ok(DeltaVector((1..n).map(|i| u.coeff(i)).collect()))
}

/// The ring element `sum_i v_{i-1} E_i`.
pub fn from_delta(q: &Arc<Quandle>, v: &DeltaVector) -> RingElement<BigInt> {
    assert_eq!(v.len(), q.order() - 1, "coordinate length mismatch");
    let mut total = BigInt::zero();
    let mut pairs: Vec<(usize, BigInt)> = Vec::with_capacity(v.len() + 1);
    for (i, c) in v.0.iter().enumerate() {
        total += c;
        pairs.push((i + 1, c.clone()));
    }
    pairs.push((0, -total));
    RingElement::from_coeffs(q, pairs)
}

/// Closed form for `E_i E_j` in the dihedral ring of order `n`:
/// `E_{2j-i} - E_{n-i} - E_{2j}`, indices mod `n`, `E_0 = 0`.
pub fn dihedral_e_product(n: usize, i: usize, j: usize) -> Result<DeltaVector, RingError> {
    if i == 0 || i >= n {
        return Err(RingError::IndexRange { index: i, max: n - 1 });
    }
    if j == 0 || j >= n {
        return Err(RingError::IndexRange { index: j, max: n - 1 });
    }
    let mut coords = vec![BigInt::zero(); n - 1];
    let mut add = |idx: usize, s: i64| {
        let idx = idx % n;
        if idx != 0 {
            coords[idx - 1] += BigInt::from(s);
        }
    };
    add(2 * j + n - i, 1);
    add(n - i, -1);
    add(2 * j, -1);
    Ok(DeltaVector(coords))
}

/// Which side the ideal powers are normed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerOrder {
    /// `Δ^{k+1} = Δ^k · Δ` (the default everywhere).
    RightNormed,
    /// `Δ^{k+1} = Δ · Δ^k`, exposed for exploration only.
    LeftNormed,
}

/// The `k`-th power of the augmentation ideal as a lattice in
/// `E`-coordinates; right-normed.
pub fn delta_power(q: &Arc<Quandle>, k: usize) -> Lattice {
    delta_power_with(q, k, PowerOrder::RightNormed)
}

/// `Δ^k` with an explicit norming convention.
///
/// `Δ^1` is the full lattice; each step multiplies the current HNF basis
/// rows by the generators `E_j` (bilinearity makes generator products
/// span the ideal product) and re-canonicalizes.
pub fn delta_power_with(q: &Arc<Quandle>, k: usize, order: PowerOrder) -> Lattice {
    assert!(k >= 1, "ideal powers start at k = 1");
    let n = q.order();
    let d = n - 1;
    let mut cur = Lattice::full(d);
    for _ in 2..=k {
        cur = step(q, &cur, order);
    }
    cur
}

fn step(q: &Arc<Quandle>, cur: &Lattice, order: PowerOrder) -> Lattice {
    let n = q.order();
    let d = n - 1;
    let mut gens: Vec<Vec<BigInt>> = Vec::with_capacity(cur.rank() * d);
    for row in cur.basis() {
        let b = from_delta(q, &DeltaVector(row.clone()));
        for j in 1..n {
            let ej = RingElement::e_minus_anchor(q, j);
            let prod = match order {
                PowerOrder::RightNormed => b.multiply(&ej),
                PowerOrder::LeftNormed => ej.multiply(&b),
            };
            let v = to_delta(&prod).expect("product of augmentation-zero elements");
            gens.push(v.0);
        }
    }
    Lattice::hnf(gens, d).expect("generators have ambient length")
}

/// The first `max_k` powers of `Δ` together with the invariants of each
/// graded quotient `Δ^k / Δ^{k+1}`.
#[derive(Debug, Clone)]
pub struct Filtration {
    /// `powers[k-1]` is `Δ^k` in `E`-coordinates.
    pub powers: Vec<Lattice>,
    /// `quotients[k-1]` is `(free rank, torsion)` of `Δ^k / Δ^{k+1}`;
    /// one entry fewer than `powers`.
    pub quotients: Vec<(usize, Vec<BigInt>)>,
}

/// Compute `Δ^1, .., Δ^max_k` and the quotient invariants.
///
/// Each quotient is computed by solving the generators of `Δ^{k+1}` in the
/// HNF basis of `Δ^k` and taking Smith invariants of the coordinate
/// matrix.
pub fn filtration(q: &Arc<Quandle>, max_k: usize) -> Filtration {
    assert!(max_k >= 2, "a filtration needs at least two powers");
    let mut powers = Vec::with_capacity(max_k);
    powers.push(Lattice::full(q.order() - 1));
    for _ in 2..=max_k {
        let next = step(q, powers.last().unwrap(), PowerOrder::RightNormed);
        powers.push(next);
    }
    let mut quotients = Vec::with_capacity(max_k - 1);
    for k in 0..max_k - 1 {
        quotients.push(quotient_invariants(&powers[k], &powers[k + 1]));
    }
    Filtration { powers, quotients }
}

/// Invariants of `larger / smaller` for nested lattices.
pub fn quotient_invariants(larger: &Lattice, smaller: &Lattice) -> (usize, Vec<BigInt>) {
    let rows: Vec<Vec<BigInt>> = smaller
        .basis()
        .iter()
        .map(|g| {
            larger
                .coordinates(g)
                .expect("ambient ranks match")
                .expect("filtration powers are nested")
        })
        .collect();
    smith_invariants_of(&rows, larger.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::Quandle;

    fn arc(q: Quandle) -> Arc<Quandle> {
        Arc::new(q)
    }

    fn bi(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lat(rows: &[&[i64]], d: usize) -> Lattice {
        Lattice::hnf(rows.iter().map(|r| bi(r)), d).unwrap()
    }

    #[test]
    fn delta_roundtrip() {
        let q = arc(Quandle::dihedral(4));
        let u = RingElement::from_coeffs(
            &q,
            [(1, BigInt::from(2)), (0, BigInt::from(-1)), (2, BigInt::from(-1))],
        );
        let v = to_delta(&u).unwrap();
        assert_eq!(v, DeltaVector::from_i64(&[2, -1, 0]));
        assert_eq!(from_delta(&q, &v), u);

        let e2 = RingElement::basis(&q, 2) - RingElement::basis(&q, 0);
        assert_eq!(to_delta(&e2).unwrap(), DeltaVector::from_i64(&[0, 1, 0]));

        let e1 = RingElement::basis(&q, 1);
        assert_eq!(to_delta(&e1), Err(RingError::NotAugmentationZero));
    }

    #[test]
    fn dihedral_closed_form_examples() {
        assert_eq!(
            dihedral_e_product(5, 1, 2).unwrap(),
            DeltaVector::from_i64(&[0, 0, 1, -2])
        );
        assert_eq!(
            dihedral_e_product(3, 1, 1).unwrap(),
            DeltaVector::from_i64(&[1, -2])
        );
        assert_eq!(
            dihedral_e_product(4, 2, 1).unwrap(),
            DeltaVector::from_i64(&[0, -2, 0])
        );
        assert!(dihedral_e_product(4, 0, 1).is_err());
        assert!(dihedral_e_product(4, 1, 4).is_err());
    }

    #[test]
    fn closed_form_agrees_with_generic_multiply() {
        for n in 3..=12 {
            let q = arc(Quandle::dihedral(n));
            for i in 1..n {
                for j in 1..n {
                    let generic = to_delta(
                        &RingElement::e_minus_anchor(&q, i)
                            .multiply(&RingElement::e_minus_anchor(&q, j)),
                    )
                    .unwrap();
                    assert_eq!(
                        dihedral_e_product(n, i, j).unwrap(),
                        generic,
                        "mismatch at n={n}, i={i}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn r3_low_powers() {
        let q = arc(Quandle::dihedral(3));
        assert_eq!(delta_power(&q, 2), lat(&[&[1, 1], &[0, 3]], 2));
        assert_eq!(delta_power(&q, 3), lat(&[&[3, 0], &[0, 3]], 2));
    }

    #[test]
    fn c5_second_power() {
        let q = arc(Quandle::commutative(5).unwrap());
        // canonical form of f1-2f3, f2-f3-f4, f3-2f4, 5f4
        let expect = lat(
            &[&[1, 0, -2, 0], &[0, 1, -1, -1], &[0, 0, 1, -2], &[0, 0, 0, 5]],
            4,
        );
        assert_eq!(delta_power(&q, 2), expect);
        assert_eq!(
            expect,
            lat(
                &[&[1, 0, 0, 1], &[0, 1, 0, 2], &[0, 0, 1, 3], &[0, 0, 0, 5]],
                4
            )
        );
    }

    #[test]
    fn powers_form_descending_chain() {
        for q in [
            arc(Quandle::dihedral(4)),
            arc(Quandle::dihedral(5)),
            arc(Quandle::commutative(7).unwrap()),
            arc(Quandle::x6()),
        ] {
            let f = filtration(&q, 6);
            for k in 0..f.powers.len() - 1 {
                assert!(f.powers[k + 1].is_sublattice_of(&f.powers[k]).unwrap());
            }
        }
    }

    #[test]
    fn r4_quotients() {
        let q = arc(Quandle::dihedral(4));
        let f = filtration(&q, 4);
        assert_eq!(f.quotients[0], (1, bi(&[2])));
        assert_eq!(f.quotients[1], (0, bi(&[2, 2])));
        assert_eq!(f.quotients[2], (0, bi(&[2, 2])));
    }

    #[test]
    fn r3_first_quotient_is_z3() {
        let q = arc(Quandle::dihedral(3));
        let f = filtration(&q, 2);
        assert_eq!(f.quotients[0], (0, bi(&[3])));
    }

    #[test]
    fn left_normed_differs_eventually() {
        // same at k = 2, allowed to differ beyond; verify both are chains
        let q = arc(Quandle::dihedral(5));
        assert_eq!(
            delta_power_with(&q, 2, PowerOrder::LeftNormed),
            delta_power_with(&q, 2, PowerOrder::RightNormed)
        );
        let l3 = delta_power_with(&q, 3, PowerOrder::LeftNormed);
        let l2 = delta_power_with(&q, 2, PowerOrder::LeftNormed);
        assert!(l3.is_sublattice_of(&l2).unwrap());
    }

    #[test]
    fn display_coordinates() {
        let v = DeltaVector::from_i64(&[1, 0, 0, -2]);
        assert_eq!(v.display_with("E"), "E1 - 2*E4");
        assert_eq!(DeltaVector::from_i64(&[0, 0]).display_with("f"), "0");
    }
}
