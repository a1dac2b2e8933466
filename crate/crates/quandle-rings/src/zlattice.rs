//! Exact integer-lattice engine.
//!
//! A [`Lattice`] is a subgroup of `Z^d` held in canonical row Hermite
//! normal form: pivots are positive and strictly move right from row to
//! row, and every entry above a pivot is reduced into `[0, pivot)`. The
//! form is unique for a given subgroup, so lattice equality is plain
//! comparison of basis matrices.
//!
//! All entries are arbitrary-precision integers; filtration coefficients
//! grow geometrically and must never overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vector has length {got}, ambient rank is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A subgroup of `Z^d` in canonical row Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    /// Canonical HNF of the row span of `rows` inside `Z^ambient`.
    ///
    /// Idempotent: feeding a lattice's basis back in reproduces it
    /// unchanged.
    pub fn hnf<R>(rows: R, ambient: usize) -> Result<Lattice, LatticeError>
    where
        R: IntoIterator<Item = Vec<BigInt>>,
    {
        let mut m: Vec<Vec<BigInt>> = Vec::new();
        for r in rows {
            if r.len() != ambient {
                return Err(LatticeError::DimensionMismatch {
                    expected: ambient,
                    got: r.len(),
                });
            }
            if r.iter().any(|x| !x.is_zero()) {
                m.push(r);
            }
        }
        hnf_in_place(&mut m, ambient);
        Ok(Lattice { ambient, basis: m })
    }

    /// The full lattice `Z^d`.
    pub fn full(d: usize) -> Lattice {
        let basis = (0..d)
            .map(|i| {
                let mut row = vec![BigInt::zero(); d];
                row[i] = BigInt::from(1);
                row
            })
            .collect();
        Lattice { ambient: d, basis }
    }

    /// The zero subgroup of `Z^d`.
    pub fn zero(d: usize) -> Lattice {
        Lattice {
            ambient: d,
            basis: Vec::new(),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Is `v` an integer combination of the basis rows? Solved by pivot
    /// elimination against the echelon basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool, LatticeError> {
        let (_, residue) = self.reduce(v)?;
        Ok(residue.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the HNF basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LatticeError> {
        let (coords, residue) = self.reduce(v)?;
        if residue.iter().all(Zero::is_zero) {
            Ok(Some(coords))
        } else {
            Ok(None)
        }
    }

    /// Eliminate `v` against the pivots; returns the coordinates tried and
    /// the residue, which is zero exactly when `v` is in the lattice.
    fn reduce(&self, v: &[BigInt]) -> Result<(Vec<BigInt>, Vec<BigInt>), LatticeError> {
        if v.len() != self.ambient {
            return Err(LatticeError::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut res = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = pivot_col(row).expect("basis rows are nonzero");
            let (q, _r) = res[p].div_mod_floor(&row[p]);
            if !q.is_zero() {
                for (a, b) in res.iter_mut().zip(row) {
                    *a -= &q * b;
                }
            }
            coords.push(q);
        }
        Ok((coords, res))
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool, LatticeError> {
        for row in &self.basis {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The lattice scaled by `c`.
    pub fn scale(&self, c: &BigInt) -> Lattice {
        if c.is_zero() {
            return Lattice::zero(self.ambient);
        }
        let rows = self
            .basis
            .iter()
            .map(|r| r.iter().map(|x| x * c).collect())
            .collect::<Vec<_>>();
        Lattice::hnf(rows, self.ambient).expect("dimensions preserved")
    }

    /// Invariants of the quotient `Z^d / L`: the free rank `d - rank(L)`
    /// and the nontrivial invariant factors (each dividing the next).
    pub fn smith_invariants(&self) -> (usize, Vec<BigInt>) {
        smith_invariants_of(&self.basis, self.ambient)
    }
}

fn pivot_col(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Row HNF, in place. Standard column-by-column Euclidean elimination
/// followed by sign and above-pivot normalization.
fn hnf_in_place(m: &mut Vec<Vec<BigInt>>, d: usize) {
    let mut piv = 0usize;
    for col in 0..d {
        loop {
            // smallest nonzero entry in this column at or below `piv`
            let mut best: Option<usize> = None;
            for r in piv..m.len() {
                if !m[r][col].is_zero()
                    && best.is_none_or(|b| m[r][col].abs() < m[b][col].abs())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            m.swap(piv, b);
            let mut clean = true;
            for r in piv + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let q = m[r][col].div_floor(&m[piv][col]);
                if !q.is_zero() {
                    for c in 0..d {
                        let t = &q * &m[piv][c];
                        m[r][c] -= t;
                    }
                }
                if !m[r][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if piv < m.len() && !m[piv][col].is_zero() {
            if m[piv][col].is_negative() {
                for x in m[piv].iter_mut() {
                    *x = -&*x;
                }
            }
            for r in 0..piv {
                let q = m[r][col].div_floor(&m[piv][col]);
                if !q.is_zero() {
                    for c in 0..d {
                        let t = &q * &m[piv][c];
                        m[r][c] -= t;
                    }
                }
            }
            piv += 1;
        }
    }
    m.retain(|r| r.iter().any(|x| !x.is_zero()));
}

/// Smith invariants of the abelian group `Z^ambient / <rows>`: free rank
/// and nontrivial invariant factors.
///
/// Alternating row/column reduction on a working copy; only the factors
/// are returned, no transform matrices.
pub fn smith_invariants_of(rows: &[Vec<BigInt>], ambient: usize) -> (usize, Vec<BigInt>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    for r in &m {
        assert_eq!(r.len(), ambient, "row length must match ambient rank");
    }
    let mut invs: Vec<BigInt> = Vec::new();
    let mut top = 0usize;
    'outer: loop {
        if top >= m.len() {
            break;
        }
        // pick the entry of least absolute value in the working block
        let mut best: Option<(usize, usize)> = None;
        for i in top..m.len() {
            for j in top..ambient {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(top, bi);
        for row in m.iter_mut() {
            row.swap(top, bj);
        }
        loop {
            let mut dirty = false;
            for i in top + 1..m.len() {
                if m[i][top].is_zero() {
                    continue;
                }
                let q = m[i][top].div_floor(&m[top][top]);
                for c in top..ambient {
                    let t = &q * &m[top][c];
                    m[i][c] -= t;
                }
                if !m[i][top].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared below; promote it
                let i = (top..m.len())
                    .filter(|&i| !m[i][top].is_zero())
                    .min_by_key(|&i| m[i][top].abs())
                    .unwrap();
                m.swap(top, i);
                continue;
            }
            for j in top + 1..ambient {
                if m[top][j].is_zero() {
                    continue;
                }
                let q = m[top][j].div_floor(&m[top][top]);
                for row in m.iter_mut().skip(top) {
                    let t = &q * &row[top];
                    row[j] -= t;
                }
                if !m[top][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let j = (top..ambient)
                    .filter(|&j| !m[top][j].is_zero())
                    .min_by_key(|&j| m[top][j].abs())
                    .unwrap();
                for row in m.iter_mut() {
                    row.swap(top, j);
                }
                continue;
            }
            break;
        }
        // divisibility: the pivot must divide everything that remains
        let p = m[top][top].abs();
        for i in top + 1..m.len() {
            for j in top + 1..ambient {
                if !(&m[i][j] % &p).is_zero() {
                    let add: Vec<BigInt> = m[i].clone();
                    for (c, x) in add.into_iter().enumerate() {
                        m[top][c] += x;
                    }
                    continue 'outer;
                }
            }
        }
        invs.push(p);
        top += 1;
    }
    let rank = invs.len();
    let one = BigInt::from(1);
    (ambient - rank, invs.into_iter().filter(|x| *x > one).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn lat(rows: &[&[i64]], d: usize) -> Lattice {
        Lattice::hnf(rows.iter().map(|r| bi(r)), d).unwrap()
    }

    #[test]
    fn hnf_of_delta2_r3_generators() {
        // spans of E1^2, E1 E2, E2^2 in the three-element dihedral ring
        let l = lat(&[&[1, -2], &[-1, -1], &[-2, 1]], 2);
        assert_eq!(l, lat(&[&[1, 1], &[0, 3]], 2));
        assert_eq!(l.basis()[0], bi(&[1, 1]));
        assert_eq!(l.basis()[1], bi(&[0, 3]));
    }

    #[test]
    fn hnf_identity_fixed() {
        let l = lat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(l, Lattice::full(3));
    }

    #[test]
    fn hnf_mixed_rows() {
        let l = lat(&[&[2, 0], &[0, 2], &[1, 1]], 2);
        assert_eq!(l, lat(&[&[1, 1], &[0, 2]], 2));
    }

    #[test]
    fn hnf_idempotent() {
        let l = lat(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]], 3);
        let again = Lattice::hnf(l.basis().to_vec(), 3).unwrap();
        assert_eq!(l, again);
    }

    #[test]
    fn contains_examples() {
        let l = lat(&[&[1, 1], &[0, 3]], 2);
        assert!(l.contains(&bi(&[3, 0])).unwrap());
        assert!(!l.contains(&bi(&[1, 0])).unwrap());
        assert!(l.contains(&bi(&[0, 0])).unwrap());
        assert!(Lattice::zero(2).contains(&bi(&[0, 0])).unwrap());
        assert!(!Lattice::zero(2).contains(&bi(&[1, 0])).unwrap());
    }

    #[test]
    fn contains_rejects_wrong_length() {
        let l = lat(&[&[1, 1], &[0, 3]], 2);
        assert_eq!(
            l.contains(&bi(&[1, 2, 3])).unwrap_err(),
            LatticeError::DimensionMismatch { expected: 2, got: 3 }
        );
    }

    #[test]
    fn coordinates_recover_combination() {
        let l = lat(&[&[1, 1], &[0, 3]], 2);
        let c = l.coordinates(&bi(&[3, 0])).unwrap().unwrap();
        assert_eq!(c, bi(&[3, -1]));
        assert_eq!(l.coordinates(&bi(&[1, 0])).unwrap(), None);
    }

    #[test]
    fn smith_examples() {
        let l = lat(&[&[1, -1, -1], &[0, 2, 0]], 3);
        let (free, tors) = l.smith_invariants();
        assert_eq!((free, tors), (1, bi(&[2])));

        let (free, tors) = Lattice::full(4).smith_invariants();
        assert_eq!((free, tors), (0, vec![]));

        let (free, tors) = lat(&[&[1, 1], &[0, 3]], 2).smith_invariants();
        assert_eq!((free, tors), (0, bi(&[3])));
    }

    #[test]
    fn smith_of_zero_lattice() {
        assert_eq!(Lattice::zero(3).smith_invariants(), (3, vec![]));
    }

    #[test]
    fn scale_and_sublattice() {
        let l = lat(&[&[1, 1], &[0, 3]], 2);
        let l3 = l.scale(&BigInt::from(3));
        assert!(l3.is_sublattice_of(&l).unwrap());
        assert!(!l.is_sublattice_of(&l3).unwrap());
        assert_eq!(l3, lat(&[&[3, 3], &[0, 9]], 2));
    }
}
