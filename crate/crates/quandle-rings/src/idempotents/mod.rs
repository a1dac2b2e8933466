//! Bounded exhaustive idempotent enumeration and closed-form families.
//!
//! Idempotents split by augmentation: `u^2 = u` forces `ε(u) ∈ {0, 1}`, so
//! every candidate is `σ e_0 + δ` with `σ ∈ {0, 1}` and `δ` in the
//! augmentation ideal. The search box bounds the `E`-coordinates of `δ`.

mod autmat;
mod probe;
mod system;

pub use autmat::{
    decompose_x6_automorphism, permutation_matrix, verify_ring_morphism, AutDecomposition,
};
pub use probe::{conjecture_probe, DivisibilityReport, DIVISIBILITY_INTERPRETATION};
pub use system::{build_system, search_system, search_system_seq, Monomial, Poly, PolySystem};

use crate::caps::Caps;
use crate::par::flat_map_ordered;
use crate::qring::{DeltaVector, RingElement};
use crate::quandle::Quandle;
use num_bigint::BigInt;
use std::ops::RangeInclusive;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdemError {
    #[error("search size {required} exceeds cap {cap}")]
    SizeLimit { required: u64, cap: u64 },
    #[error("matrix must be {expected}x{expected}")]
    DimensionMismatch { expected: usize },
    #[error("matrix is not a ring automorphism")]
    NotAutomorphism,
    #[error("matrix does not decompose into the three 2x2 blocks")]
    NotBlockStructured,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

/// All idempotents found in a coordinate box, split by augmentation.
///
/// Entries of `aug0` are the `E`-coordinates of the idempotent itself
/// (the zero element is excluded); entries of `aug1` encode
/// `e_0 + from_delta(v)`. Both lists are duplicate-free and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSet {
    pub bound: i64,
    pub aug0: Vec<DeltaVector>,
    pub aug1: Vec<DeltaVector>,
}

impl IdempotentSet {
    pub fn len(&self) -> usize {
        self.aug0.len() + self.aug1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.aug0.is_empty() && self.aug1.is_empty()
    }

    /// Reconstruct the ring elements of a slice (`aug` is 0 or 1).
    pub fn elements(&self, q: &Arc<Quandle>, aug: u8) -> Vec<RingElement<BigInt>> {
        let list = if aug == 0 { &self.aug0 } else { &self.aug1 };
        list.iter()
            .map(|v| {
                let d = crate::qring::from_delta(q, v);
                if aug == 0 {
                    d
                } else {
                    RingElement::basis(q, 0) + d
                }
            })
            .collect()
    }
}

/// Exhaustively scan `u = σ e_0 + δ` for `σ ∈ {0,1}` and every `δ` with
/// `E`-coordinates in `[-bound, bound]`, returning exactly the idempotents
/// in the box.
pub fn enumerate_idempotents(
    q: &Quandle,
    bound: i64,
    caps: &Caps,
) -> Result<IdempotentSet, IdemError> {
    enumerate_impl(q, bound, caps, true)
}

/// Sequential variant of [`enumerate_idempotents`]; same output.
pub fn enumerate_idempotents_seq(
    q: &Quandle,
    bound: i64,
    caps: &Caps,
) -> Result<IdempotentSet, IdemError> {
    enumerate_impl(q, bound, caps, false)
}

fn enumerate_impl(
    q: &Quandle,
    bound: i64,
    caps: &Caps,
    parallel: bool,
) -> Result<IdempotentSet, IdemError> {
    assert!(bound >= 0, "bound must be nonnegative");
    let n = q.order();
    let k = n - 1;
    if k == 0 {
        // one-element quandle: e_0 is the only candidate
        return Ok(IdempotentSet {
            bound,
            aug0: Vec::new(),
            aug1: vec![DeltaVector(Vec::new())],
        });
    }
    let width = 2 * bound as u64 + 1;
    if Caps::checked_pow_within(width, k as u32, caps.box_sweep_max).is_none() {
        return Err(IdemError::SizeLimit {
            required: width.saturating_pow(k as u32),
            cap: caps.box_sweep_max,
        });
    }

    let mut out = IdempotentSet {
        bound,
        aug0: Vec::new(),
        aug1: Vec::new(),
    };
    for sigma in 0..=1i64 {
        let found = flat_map_ordered(width as usize, parallel, |part| {
            let first = part as i64 - bound;
            let mut hits = Vec::new();
            let mut delta = vec![first; 1];
            delta.extend(std::iter::repeat(-bound).take(k - 1));
            let mut coeffs = vec![0i64; n];
            let mut square = vec![0i64; n];
            loop {
                // full coefficient vector of sigma*e_0 + delta
                let sum: i64 = delta.iter().sum();
                coeffs[0] = sigma - sum;
                coeffs[1..n].copy_from_slice(&delta);
                if !(sigma == 0 && coeffs.iter().all(|&c| c == 0))
                    && is_idempotent_dense(q, &coeffs, &mut square)
                {
                    hits.push(DeltaVector::from_i64(&delta));
                }
                // odometer over coordinates 1.. (coordinate 0 is the partition)
                let mut pos = k;
                loop {
                    if pos == 1 {
                        return hits;
                    }
                    pos -= 1;
                    if delta[pos] < bound {
                        delta[pos] += 1;
                        for x in delta.iter_mut().skip(pos + 1) {
                            *x = -bound;
                        }
                        break;
                    }
                }
            }
        });
        if sigma == 0 {
            out.aug0 = found;
        } else {
            out.aug1 = found;
        }
    }
    out.aug0.sort();
    out.aug1.sort();
    Ok(out)
}

/// `u^2 == u` on dense `i64` coefficient vectors (box coordinates are
/// machine-sized by the sweep cap).
fn is_idempotent_dense(q: &Quandle, coeffs: &[i64], square: &mut [i64]) -> bool {
    square.fill(0);
    let n = q.order();
    for x in 0..n {
        let a = coeffs[x];
        if a == 0 {
            continue;
        }
        for y in 0..n {
            let b = coeffs[y];
            if b != 0 {
                square[q.op(x, y)] += a * b;
            }
        }
    }
    square == coeffs
}

/// A closed one- or two-parameter idempotent family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Augmentation-one elements of the `m`-element trivial quandle ring:
    /// `e_0 + sum_j alpha_j (e_j - e_0)`, one parameter per `j >= 1`.
    Trivial { m: usize },
    /// `alpha e_{2c} + (1-alpha) e_{2c+1}` in the order-6 involutory ring,
    /// one family per trivial subquandle component `c ∈ {0,1,2}`.
    X6Component { component: usize },
    /// Reference closed form `e_0 - 2b E_1 + b E_2 - 2b E_3` for the
    /// order-4 dihedral ring, as published. Members other than `b = 0`
    /// fail `u^2 = u`; kept verbatim so the reproduction suite can check
    /// the claim as stated.
    R4ReferenceA,
    /// Reference closed form `e_0 + b1 E_1 + b2 E_2 + (1-b1) E_3`, as
    /// published; only the `b2 = 0` slice consists of idempotents.
    R4ReferenceB,
    /// `(1-b) e_0 + b e_2`: the family supported on the even trivial
    /// subquandle `{0, 2}` of the order-4 dihedral quandle.
    R4EvenComponent,
    /// `b e_1 + (1-b) e_3`: the family supported on the odd trivial
    /// subquandle `{1, 3}`.
    R4OddComponent,
}

/// Instantiate a closed-form family over a parameter box (the same range
/// for every parameter of the family).
pub fn closed_form_family(
    family: Family,
    range: RangeInclusive<i64>,
) -> Result<Vec<RingElement<BigInt>>, IdemError> {
    let bi = BigInt::from;
    let params: Vec<i64> = range.clone().collect();
    match family {
        Family::Trivial { m } => {
            if m == 0 {
                return Err(IdemError::InvalidParam("trivial quandle needs m >= 1".into()));
            }
            let q = Arc::new(Quandle::trivial(m));
            let mut out = vec![RingElement::basis(&q, 0)];
            for j in 1..m {
                let mut next = Vec::new();
                for u in &out {
                    for &a in &params {
                        let ej = RingElement::basis(&q, j) - RingElement::basis(&q, 0);
                        next.push(u + &ej.scale(&bi(a)));
                    }
                }
                out = next;
            }
            Ok(out)
        }
        Family::X6Component { component } => {
            if component > 2 {
                return Err(IdemError::InvalidParam("component must be 0, 1 or 2".into()));
            }
            let q = Arc::new(Quandle::x6());
            Ok(params
                .iter()
                .map(|&a| {
                    RingElement::from_coeffs(
                        &q,
                        [(2 * component, bi(a)), (2 * component + 1, bi(1 - a))],
                    )
                })
                .collect())
        }
        Family::R4ReferenceA => {
            let q = Arc::new(Quandle::dihedral(4));
            Ok(params
                .iter()
                .map(|&b| {
                    RingElement::from_coeffs(
                        &q,
                        [(0, bi(1 + 3 * b)), (1, bi(-2 * b)), (2, bi(b)), (3, bi(-2 * b))],
                    )
                })
                .collect())
        }
        Family::R4ReferenceB => {
            let q = Arc::new(Quandle::dihedral(4));
            let mut out = Vec::new();
            for &b1 in &params {
                for &b2 in &params {
                    out.push(RingElement::from_coeffs(
                        &q,
                        [(0, bi(-b2)), (1, bi(b1)), (2, bi(b2)), (3, bi(1 - b1))],
                    ));
                }
            }
            Ok(out)
        }
        Family::R4EvenComponent => {
            let q = Arc::new(Quandle::dihedral(4));
            Ok(params
                .iter()
                .map(|&b| RingElement::from_coeffs(&q, [(0, bi(1 - b)), (2, bi(b))]))
                .collect())
        }
        Family::R4OddComponent => {
            let q = Arc::new(Quandle::dihedral(4));
            Ok(params
                .iter()
                .map(|&b| RingElement::from_coeffs(&q, [(1, bi(b)), (3, bi(1 - b))]))
                .collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::from_delta;

    fn arc(q: Quandle) -> Arc<Quandle> {
        Arc::new(q)
    }

    #[test]
    fn r3_box_five_finds_only_basis_elements() {
        let q = Quandle::dihedral(3);
        let set = enumerate_idempotents(&q, 5, &Caps::default()).unwrap();
        assert!(set.aug0.is_empty());
        assert_eq!(
            set.aug1,
            vec![
                DeltaVector::from_i64(&[0, 0]),
                DeltaVector::from_i64(&[0, 1]),
                DeltaVector::from_i64(&[1, 0]),
            ]
        );
    }

    #[test]
    fn trivial_two_box_three_has_seven() {
        let q = Quandle::trivial(2);
        let set = enumerate_idempotents(&q, 3, &Caps::default()).unwrap();
        assert!(set.aug0.is_empty());
        assert_eq!(set.aug1.len(), 7);
    }

    #[test]
    fn every_listed_entry_is_idempotent() {
        let q = arc(Quandle::x6());
        let set = enumerate_idempotents(&q, 2, &Caps::default()).unwrap();
        for aug in [0u8, 1] {
            for u in set.elements(&q, aug) {
                assert!(u.is_idempotent());
                assert_eq!(u.augment(), BigInt::from(aug));
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let q = Quandle::dihedral(4);
        let caps = Caps::default();
        assert_eq!(
            enumerate_idempotents(&q, 3, &caps).unwrap(),
            enumerate_idempotents_seq(&q, 3, &caps).unwrap()
        );
    }

    #[test]
    fn sweep_cap_respected() {
        let q = Quandle::x6();
        let caps = Caps {
            box_sweep_max: 100,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_idempotents(&q, 2, &caps),
            Err(IdemError::SizeLimit { .. })
        ));
    }

    /// Oracle equivalence: a direct scan over raw coefficient vectors with
    /// no augmentation split finds the same sets.
    #[test]
    fn brute_force_oracle_agrees() {
        for q in [
            Quandle::dihedral(3),
            Quandle::dihedral(4),
            Quandle::trivial(2),
            Quandle::trivial(3),
        ] {
            let bound = 2i64;
            let q = arc(q);
            let set = enumerate_idempotents(&q, bound, &Caps::default()).unwrap();
            let mut expect0 = Vec::new();
            let mut expect1 = Vec::new();
            // independent path: enumerate sigma, delta; build ring elements
            // and use the generic exact multiply
            let k = q.order() - 1;
            let mut delta = vec![-bound; k];
            let mut done = false;
            while !done {
                for sigma in 0..=1 {
                    let v = DeltaVector::from_i64(&delta);
                    let mut u = from_delta(&q, &v);
                    if sigma == 1 {
                        u = RingElement::basis(&q, 0) + u;
                    }
                    if u.is_zero() {
                        continue;
                    }
                    if u.multiply(&u) == u {
                        if sigma == 0 {
                            expect0.push(v.clone());
                        } else {
                            expect1.push(v.clone());
                        }
                    }
                }
                done = true;
                for pos in (0..k).rev() {
                    if delta[pos] < bound {
                        delta[pos] += 1;
                        for x in delta.iter_mut().skip(pos + 1) {
                            *x = -bound;
                        }
                        done = false;
                        break;
                    }
                }
            }
            expect0.sort();
            expect1.sort();
            assert_eq!(set.aug0, expect0, "{:?}", q.label());
            assert_eq!(set.aug1, expect1, "{:?}", q.label());
        }
    }

    #[test]
    fn x6_families_instantiate() {
        let members = closed_form_family(Family::X6Component { component: 0 }, -2..=2).unwrap();
        assert_eq!(members.len(), 5);
        for u in &members {
            assert!(u.is_idempotent());
        }
    }

    #[test]
    fn trivial_family_members_are_idempotent() {
        let members = closed_form_family(Family::Trivial { m: 3 }, -1..=1).unwrap();
        assert_eq!(members.len(), 9);
        for u in &members {
            assert!(u.is_idempotent());
            assert_eq!(u.augment(), BigInt::from(1));
        }
    }

    #[test]
    fn r4_component_families_are_idempotent() {
        for fam in [Family::R4EvenComponent, Family::R4OddComponent] {
            for u in closed_form_family(fam, -4..=4).unwrap() {
                assert!(u.is_idempotent(), "{u} should be idempotent");
            }
        }
    }

    /// The published order-4 closed forms do not hold: family A fails for
    /// every nonzero parameter and family B exactly off its b2 = 0 slice.
    #[test]
    fn r4_reference_families_fail_as_published() {
        let a = closed_form_family(Family::R4ReferenceA, -2..=2).unwrap();
        let idempotent_count = a.iter().filter(|u| u.is_idempotent()).count();
        assert_eq!(idempotent_count, 1); // only b = 0, which is e_0

        let b = closed_form_family(Family::R4ReferenceB, -2..=2).unwrap();
        for u in &b {
            let on_slice = u.coeff(2).eq(&BigInt::from(0));
            assert_eq!(u.is_idempotent(), on_slice, "{u}");
        }
    }
}
