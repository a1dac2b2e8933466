//! Ring-automorphism verification for integer matrices, and the 2x2-block
//! decomposition of automorphisms of the order-6 involutory quandle ring.
//!
//! Matrices act by columns: column `j` is the image of `e_j`.

use super::IdemError;
use crate::qring::RingElement;
use crate::quandle::Quandle;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::Arc;

/// `true` iff `m` is unimodular (determinant `±1`) and the induced linear
/// map is multiplicative on every basis pair:
/// `ψ(e_i e_j) = ψ(e_i) ψ(e_j)`.
pub fn verify_ring_morphism(q: &Quandle, m: &[Vec<i64>]) -> Result<bool, IdemError> {
    let n = q.order();
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(IdemError::DimensionMismatch { expected: n });
    }
    let det = determinant(m);
    if !det.abs().is_one() {
        return Ok(false);
    }
    let q = Arc::new(q.clone());
    let images: Vec<RingElement<BigInt>> = (0..n)
        .map(|j| {
            RingElement::from_coeffs(&q, (0..n).map(|r| (r, BigInt::from(m[r][j]))))
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            if images[q.op(i, j)] != images[i].multiply(&images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact integer determinant by Bareiss fraction-free elimination.
fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
        for i in k + 1..n {
            a[i][k] = BigInt::zero();
        }
    }
    sign * a[n - 1][n - 1].clone()
}

/// An automorphism of the order-6 quandle ring, expressed as a
/// permutation of the three 2x2 blocks `{1,2}, {3,4}, {5,6}` together
/// with the per-block parameters `(alpha, eps)` of the 2-element trivial
/// quandle ring: `t_1 -> alpha t_1 + (1-alpha) t_2`,
/// `t_2 -> (alpha+eps) t_1 + (1-alpha-eps) t_2`, `eps ∈ {±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutDecomposition {
    /// `block_permutation[s]` is the target block of source block `s`
    /// (0-based blocks).
    pub block_permutation: [usize; 3],
    /// `(alpha, eps)` for each source block.
    pub params: [(i64, i64); 3],
}

impl AutDecomposition {
    /// Rebuild the 6x6 matrix; always reproduces the decomposed input.
    pub fn assemble(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; 6]; 6];
        for s in 0..3 {
            let t = self.block_permutation[s];
            let (alpha, eps) = self.params[s];
            m[2 * t][2 * s] = alpha;
            m[2 * t + 1][2 * s] = 1 - alpha;
            m[2 * t][2 * s + 1] = alpha + eps;
            m[2 * t + 1][2 * s + 1] = 1 - alpha - eps;
        }
        m
    }
}

/// Decompose a verified ring automorphism of the order-6 involutory
/// quandle ring into its block permutation and per-block parameters.
///
/// `NotAutomorphism` when the matrix fails [`verify_ring_morphism`];
/// `NotBlockStructured` would signal a verified automorphism outside the
/// block form (none exists, so it never fires on valid input).
pub fn decompose_x6_automorphism(m: &[Vec<i64>]) -> Result<AutDecomposition, IdemError> {
    let q = Quandle::x6();
    if !verify_ring_morphism(&q, m)? {
        return Err(IdemError::NotAutomorphism);
    }
    let mut block_permutation = [usize::MAX; 3];
    let mut params = [(0i64, 0i64); 3];
    let mut hit = [false; 3];
    for s in 0..3 {
        // the two columns of source block s must live in one target block
        let mut target: Option<usize> = None;
        for c in [2 * s, 2 * s + 1] {
            for r in 0..6 {
                if m[r][c] != 0 {
                    let t = r / 2;
                    match target {
                        None => target = Some(t),
                        Some(prev) if prev != t => return Err(IdemError::NotBlockStructured),
                        _ => {}
                    }
                }
            }
        }
        let t = target.ok_or(IdemError::NotBlockStructured)?;
        if hit[t] {
            return Err(IdemError::NotBlockStructured);
        }
        hit[t] = true;
        block_permutation[s] = t;
        let alpha = m[2 * t][2 * s];
        let eps = m[2 * t][2 * s + 1] - alpha;
        let expect = [
            [alpha, alpha + eps],
            [1 - alpha, 1 - alpha - eps],
        ];
        for (dr, row) in expect.iter().enumerate() {
            for (dc, &v) in row.iter().enumerate() {
                if m[2 * t + dr][2 * s + dc] != v {
                    return Err(IdemError::NotBlockStructured);
                }
            }
        }
        if eps != 1 && eps != -1 {
            return Err(IdemError::NotBlockStructured);
        }
        params[s] = (alpha, eps);
    }
    Ok(AutDecomposition {
        block_permutation,
        params,
    })
}

/// The permutation matrix of a quandle automorphism given as an image
/// vector (`sigma[i]` is where element `i` goes).
pub fn permutation_matrix(sigma: &[usize]) -> Vec<Vec<i64>> {
    let n = sigma.len();
    let mut m = vec![vec![0i64; n]; n];
    for (c, &r) in sigma.iter().enumerate() {
        m[r][c] = 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::quandle::automorphisms;

    fn identity(n: usize) -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect()
    }

    /// Reference 6x6 matrix with blocks [[0,-1],[1,2]], [[0,1],[1,2]],
    /// [[2,3],[-1,-2]] (columns are images).
    fn reference_psi() -> Vec<Vec<i64>> {
        vec![
            vec![0, -1, 0, 0, 0, 0],
            vec![1, 2, 0, 0, 0, 0],
            vec![0, 0, 0, 1, 0, 0],
            vec![0, 0, 1, 2, 0, 0],
            vec![0, 0, 0, 0, 2, 3],
            vec![0, 0, 0, 0, -1, -2],
        ]
    }

    #[test]
    fn identity_is_a_ring_morphism() {
        let q = Quandle::x6();
        assert!(verify_ring_morphism(&q, &identity(6)).unwrap());
    }

    #[test]
    fn three_cycle_permutation_is_a_ring_morphism() {
        let q = Quandle::x6();
        let m = permutation_matrix(&[2, 3, 4, 5, 0, 1]);
        assert!(verify_ring_morphism(&q, &m).unwrap());
    }

    /// The published explicit 6x6 example fails multiplicativity: its
    /// middle block does not even preserve augmentation
    /// (`e_4 -> e_3 + 2 e_4` has augmentation 3), and
    /// `ψ(e_1 e_3) = ψ(e_5) = 2e_5 - e_6` while `ψ(e_1)ψ(e_3) = e_2 e_4 = e_5`.
    #[test]
    fn reference_psi_is_not_a_ring_morphism() {
        let q = Quandle::x6();
        assert!(!verify_ring_morphism(&q, &reference_psi()).unwrap());
        assert!(matches!(
            decompose_x6_automorphism(&reference_psi()),
            Err(IdemError::NotAutomorphism)
        ));
    }

    #[test]
    fn bare_transposition_is_not_multiplicative() {
        let q = Quandle::x6();
        // swap e_1 and e_3 only (0-based 0 and 2)
        let mut m = identity(6);
        m[0][0] = 0;
        m[2][2] = 0;
        m[0][2] = 1;
        m[2][0] = 1;
        assert!(!verify_ring_morphism(&q, &m).unwrap());
    }

    #[test]
    fn non_unimodular_rejected() {
        let q = Quandle::trivial(2);
        // columns both e_1: augmentation fine but determinant 0
        let m = vec![vec![1, 1], vec![0, 0]];
        assert!(!verify_ring_morphism(&q, &m).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        let q = Quandle::x6();
        assert!(matches!(
            verify_ring_morphism(&q, &identity(5)),
            Err(IdemError::DimensionMismatch { expected: 6 })
        ));
    }

    #[test]
    fn decompose_three_cycle() {
        let m = permutation_matrix(&[2, 3, 4, 5, 0, 1]);
        let d = decompose_x6_automorphism(&m).unwrap();
        assert_eq!(d.block_permutation, [1, 2, 0]);
        assert_eq!(d.params, [(1, -1); 3]);
        assert_eq!(d.assemble(), m);
    }

    #[test]
    fn decompose_identity() {
        let d = decompose_x6_automorphism(&identity(6)).unwrap();
        assert_eq!(d.block_permutation, [0, 1, 2]);
        // alpha = 1, eps = 0 - 1 = -1 decodes the identity block
        assert_eq!(d.params, [(1, -1); 3]);
        assert_eq!(d.assemble(), identity(6));
    }

    #[test]
    fn every_quandle_automorphism_decomposes_and_roundtrips() {
        let q = Quandle::x6();
        for sigma in automorphisms(&q, &Caps::default()).unwrap() {
            let m = permutation_matrix(&sigma);
            assert!(verify_ring_morphism(&q, &m).unwrap());
            let d = decompose_x6_automorphism(&m).unwrap();
            assert_eq!(d.assemble(), m);
        }
    }

    #[test]
    fn determinant_values() {
        assert_eq!(determinant(&identity(4)), BigInt::from(1));
        assert_eq!(
            determinant(&[vec![2, 0], vec![0, 3]]),
            BigInt::from(6)
        );
        assert_eq!(
            determinant(&[vec![0, 1], vec![1, 0]]),
            BigInt::from(-1)
        );
        // blocks have determinants 1, -1, -1, so the product is unimodular
        assert_eq!(determinant(&reference_psi()), BigInt::from(1));
    }
}
