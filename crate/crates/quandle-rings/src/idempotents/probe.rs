//! Divisibility probe for odd dihedral augmentation powers.

use super::IdemError;
use crate::qring::delta_power;
use crate::quandle::Quandle;
use crate::zlattice::Lattice;
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// Whether every entry of the Hermite basis of `Δ^{2n+1}(R_{2n+1})` is
/// divisible by `2n+1`, i.e. whether
/// `Δ^{2n+1}(R_{2n+1}) ⊆ (2n+1)·Δ(R_{2n+1})`.
///
/// This is an interpreted probe: the augmentation map itself vanishes
/// identically on the ideal, so divisibility of the lattice entries is the
/// checkable reading. Evidence only; no verdict is implied beyond the
/// computed orders.
#[derive(Debug, Clone)]
pub struct DivisibilityReport {
    /// The quandle order `2n+1`.
    pub order: usize,
    /// The power inspected (equal to the order).
    pub power: usize,
    pub basis: Lattice,
    pub divisible: bool,
    /// Fixed flag describing what was actually checked.
    pub interpretation: &'static str,
}

pub const DIVISIBILITY_INTERPRETATION: &str =
    "checked: every Hermite basis entry of Delta^(2n+1) of the odd dihedral ring \
     is divisible by 2n+1 (an augmentation-value reading is vacuous on the ideal)";

/// Run the probe for `R_{2n+1}`; requires `2n+1 <= 9`.
pub fn conjecture_probe(n: usize) -> Result<DivisibilityReport, IdemError> {
    let order = 2 * n + 1;
    if n == 0 || order > 9 {
        return Err(IdemError::InvalidParam(format!(
            "need 1 <= n <= 4 (quandle order 2n+1 <= 9), got n = {n}"
        )));
    }
    let q = Arc::new(Quandle::dihedral(order));
    let basis = delta_power(&q, order);
    let modulus = BigInt::from(order as i64);
    let divisible = basis
        .basis()
        .iter()
        .all(|row| row.iter().all(|x| (x % &modulus).is_zero()));
    Ok(DivisibilityReport {
        order,
        power: order,
        basis,
        divisible,
        interpretation: DIVISIBILITY_INTERPRETATION,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r3_divisible() {
        let r = conjecture_probe(1).unwrap();
        assert!(r.divisible);
        // basis is {3E1, 3E2}
        let rows: Vec<Vec<i64>> = vec![vec![3, 0], vec![0, 3]];
        let expect = Lattice::hnf(
            rows.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect()),
            2,
        )
        .unwrap();
        assert_eq!(r.basis, expect);
    }

    #[test]
    fn r5_and_r7_divisible() {
        assert!(conjecture_probe(2).unwrap().divisible);
        assert!(conjecture_probe(3).unwrap().divisible);
    }

    #[test]
    fn r9_not_divisible_by_nine() {
        // divisibility by 9 fails although every entry is divisible by 3
        let r = conjecture_probe(4).unwrap();
        assert!(!r.divisible);
        let three = BigInt::from(3);
        assert!(r
            .basis
            .basis()
            .iter()
            .all(|row| row.iter().all(|x| (x % &three).is_zero())));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(conjecture_probe(0).is_err());
        assert!(conjecture_probe(5).is_err());
    }
}
