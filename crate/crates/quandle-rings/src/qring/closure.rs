//! Smallest multiplicatively closed additive lattice containing a set of
//! generators.

use super::delta::{from_delta, to_delta, DeltaVector};
use super::RingElement;
use crate::quandle::Quandle;
use crate::zlattice::Lattice;
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// Close the additive span of `generators` under the ring product.
///
/// When every generator has augmentation zero the closure is tracked in
/// `E`-coordinates (ambient rank `n-1`), otherwise in full `e`-coordinates
/// (ambient rank `n`); the returned lattice's ambient rank tells which.
///
/// Each pass appends all pairwise products of the current HNF basis rows
/// and re-canonicalizes; a fixed point is a lattice closed under
/// multiplication (bilinearity), and the pass count is finite because the
/// rank can only grow and, at fixed rank, each step divides the basis
/// determinant.
pub fn subalgebra_closure(q: &Arc<Quandle>, generators: &[RingElement<BigInt>]) -> Lattice {
    let n = q.order();
    let delta_mode = generators.iter().all(|g| g.augment().is_zero());
    let dim = if delta_mode { n - 1 } else { n };

    let embed = |u: &RingElement<BigInt>| -> Vec<BigInt> {
        if delta_mode {
            to_delta(u).expect("augmentation zero is preserved by products").0
        } else {
            u.to_dense()
        }
    };
    let extract = |v: &[BigInt]| -> RingElement<BigInt> {
        if delta_mode {
            from_delta(q, &DeltaVector(v.to_vec()))
        } else {
            RingElement::from_coeffs(q, v.iter().cloned().enumerate())
        }
    };

    let mut cur = Lattice::hnf(generators.iter().map(embed), dim)
        .expect("generator vectors have the ambient length");
    loop {
        let rows: Vec<RingElement<BigInt>> = cur.basis().iter().map(|r| extract(r)).collect();
        let mut gens: Vec<Vec<BigInt>> = cur.basis().to_vec();
        for a in &rows {
            for b in &rows {
                gens.push(embed(&a.multiply(b)));
            }
        }
        let next = Lattice::hnf(gens, dim).expect("consistent dimensions");
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::Quandle;

    fn arc(q: Quandle) -> Arc<Quandle> {
        Arc::new(q)
    }

    #[test]
    fn e1_plus_e2_spans_rank_one() {
        // (E1+E2)^2 = -3(E1+E2) in the dihedral ring of order 3
        let q = arc(Quandle::dihedral(3));
        let gen = RingElement::e_minus_anchor(&q, 1) + RingElement::e_minus_anchor(&q, 2);
        let l = subalgebra_closure(&q, &[gen]);
        assert_eq!(l.ambient_rank(), 2);
        assert_eq!(l.rank(), 1);
        assert_eq!(l.basis()[0], vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn commutators_of_commutative_ring_vanish() {
        let q = arc(Quandle::dihedral(3));
        let mut gens = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let ei = RingElement::basis(&q, i);
                let ej = RingElement::basis(&q, j);
                gens.push(ei.multiply(&ej) - ej.multiply(&ei));
            }
        }
        let l = subalgebra_closure(&q, &gens);
        assert_eq!(l.rank(), 0);
    }

    #[test]
    fn single_basis_element_in_trivial_ring() {
        let q = arc(Quandle::trivial(2));
        let e0 = RingElement::basis(&q, 0);
        let l = subalgebra_closure(&q, &[e0]);
        // full coordinates since the augmentation is 1
        assert_eq!(l.ambient_rank(), 2);
        assert_eq!(l.rank(), 1);
        assert_eq!(l.basis()[0], vec![BigInt::from(1), BigInt::from(0)]);
    }

    #[test]
    fn closure_is_multiplicatively_closed() {
        let q = arc(Quandle::dihedral(5));
        let gens = vec![
            RingElement::e_minus_anchor(&q, 1),
            RingElement::e_minus_anchor(&q, 3),
        ];
        let l = subalgebra_closure(&q, &gens);
        let rows: Vec<_> = l
            .basis()
            .iter()
            .map(|r| from_delta(&q, &DeltaVector(r.clone())))
            .collect();
        for a in &rows {
            for b in &rows {
                let v = to_delta(&a.multiply(b)).unwrap();
                assert!(l.contains(&v.0).unwrap());
            }
        }
    }
}
