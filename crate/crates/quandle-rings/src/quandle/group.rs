//! Finite groups as Cayley tables, raw material for the core, conjugation
//! and Alexander constructions.

use super::QuandleError;

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    /// Validate a Cayley table: associativity, a two-sided identity and
    /// two-sided inverses.
    pub fn new(cayley: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self, QuandleError> {
        let n = cayley.len();
        if n == 0 || cayley.iter().any(|r| r.len() != n) {
            return Err(QuandleError::InvalidParam(
                "cayley table must be square and nonempty".into(),
            ));
        }
        for row in &cayley {
            for &x in row {
                if x >= n {
                    return Err(QuandleError::InvalidParam(format!(
                        "cayley entry {x} out of range for order {n}"
                    )));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| cayley[e][a] == a && cayley[a][e] == a))
            .ok_or_else(|| QuandleError::InvalidParam("no identity element".into()))?;
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| cayley[a][b] == identity && cayley[b][a] == identity)
                .ok_or_else(|| {
                    QuandleError::InvalidParam(format!("element {a} has no inverse"))
                })?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(QuandleError::InvalidParam(format!(
                            "cayley table not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            n,
            cayley,
            identity,
            inverse,
            label: label.into(),
        })
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group order must be positive");
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(cayley, format!("Z{n}")).expect("cyclic tables are groups")
    }

    /// The dihedral group of order `2m` (symmetries of the regular m-gon),
    /// elements `0..m` rotations and `m..2m` reflections.
    pub fn dihedral(m: usize) -> Self {
        assert!(m > 0);
        let n = 2 * m;
        let mut cayley = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let (ra, fa) = (a % m, a >= m);
                let (rb, fb) = (b % m, b >= m);
                // rotation part composes twisted by the flip of `b`... the
                // convention here: (r, f) acts as x -> +-x + r, composed left
                // after right.
                let (r, f) = if fa {
                    (((ra + m) - rb) % m, !fb)
                } else {
                    ((ra + rb) % m, fb)
                };
                cayley[a][b] = if f { m + r } else { r };
            }
        }
        FiniteGroup::new(cayley, format!("D{m}")).expect("dihedral tables are groups")
    }

    /// Direct product, elements indexed `(a, b) -> a * |h| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let n = g.n * h.n;
        let idx = |a: usize, b: usize| a * h.n + b;
        let mut cayley = vec![vec![0usize; n]; n];
        for a1 in 0..g.n {
            for b1 in 0..h.n {
                for a2 in 0..g.n {
                    for b2 in 0..h.n {
                        cayley[idx(a1, b1)][idx(a2, b2)] =
                            idx(g.cayley[a1][a2], h.cayley[b1][b2]);
                    }
                }
            }
        }
        FiniteGroup::new(cayley, format!("{}x{}", g.label, h.label))
            .expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.cayley[a][b] == self.cayley[b][a]))
    }

    /// Every element cubes to the identity.
    pub fn has_exponent_dividing_3(&self) -> bool {
        (0..self.n).all(|a| self.mul(self.mul(a, a), a) == self.identity)
    }

    /// Is the permutation `f` (an image vector) a group automorphism?
    pub fn is_automorphism(&self, f: &[usize]) -> bool {
        f.len() == self.n
            && crate::perm::is_permutation(f)
            && (0..self.n)
                .all(|a| (0..self.n).all(|b| f[self.cayley[a][b]] == self.cayley[f[a]][f[b]]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverse(1), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn dihedral_is_a_group_and_nonabelian() {
        let d3 = FiniteGroup::dihedral(3);
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
    }

    #[test]
    fn exponent_three() {
        assert!(FiniteGroup::cyclic(3).has_exponent_dividing_3());
        assert!(!FiniteGroup::cyclic(9).has_exponent_dividing_3());
        let z3xz3 = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
        assert!(z3xz3.has_exponent_dividing_3());
        assert!(!FiniteGroup::cyclic(4).has_exponent_dividing_3());
    }

    #[test]
    fn automorphism_validation() {
        let g = FiniteGroup::cyclic(4);
        assert!(g.is_automorphism(&[0, 3, 2, 1])); // x -> -x
        assert!(!g.is_automorphism(&[0, 2, 1, 3]));
        assert!(!g.is_automorphism(&[1, 0, 2, 3])); // not identity-preserving
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FiniteGroup::new(vec![vec![0, 0], vec![0, 1]], "bad").is_err());
    }
}
