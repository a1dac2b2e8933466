//! Finite quandles: validated operation tables and the standard
//! constructions.
//!
//! The table convention is `table[x][y] = x * y`, so column `y` is the
//! right multiplication `R_y` and row `a` is the left multiplication
//! `L_a`. Elements are `0`-based everywhere; inputs that are naturally
//! `1`-based (cycle data for the order-6 quandle, say) are translated on
//! ingestion.

mod group;
mod maps;
mod props;
mod tables;

pub use group::FiniteGroup;
pub use maps::{automorphisms, homomorphisms, is_homomorphism};
pub use props::{inner_group, properties, PropertyReport};
pub use tables::{enumerate_quandles, enumerate_quandles_seq};

use crate::perm::{self, Perm};
use thiserror::Error;

/// Which quandle axiom a candidate table violates, with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// `table[x][x] != x`.
    Idempotency { x: usize },
    /// Column `y` is not a permutation.
    RightInvertibility { y: usize },
    /// `(x*y)*z != (x*z)*(y*z)`.
    Distributivity { x: usize, y: usize, z: usize },
}

impl Axiom {
    pub fn number(&self) -> u8 {
        match self {
            Axiom::Idempotency { .. } => 1,
            Axiom::RightInvertibility { .. } => 2,
            Axiom::Distributivity { .. } => 3,
        }
    }
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::Idempotency { x } => write!(f, "axiom 1 (idempotency) fails at x={x}"),
            Axiom::RightInvertibility { y } => {
                write!(f, "axiom 2 (right invertibility) fails: column {y} is not a permutation")
            }
            Axiom::Distributivity { x, y, z } => {
                write!(f, "axiom 3 (self-distributivity) fails at (x,y,z)=({x},{y},{z})")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuandleError {
    #[error("{0}")]
    AxiomViolation(Axiom),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("2-cocycle condition fails at (x,y,z)=({x},{y},{z})")]
    CocycleViolation { x: usize, y: usize, z: usize },
    #[error("map is not a group automorphism")]
    NotAutomorphism,
    #[error("search size {required} exceeds cap {cap}")]
    SizeLimit { required: u64, cap: u64 },
    #[error("table entry {value} out of range for order {n}")]
    EntryRange { value: usize, n: usize },
    #[error("malformed table file: {0}")]
    TableFormat(String),
}

/// A finite quandle: a validated `n x n` operation table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quandle {
    n: usize,
    table: Vec<Vec<usize>>,
    label: Option<String>,
}

impl Quandle {
    /// Validate `table` against the three quandle axioms.
    pub fn from_table(table: Vec<Vec<usize>>, label: Option<String>) -> Result<Self, QuandleError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n) {
            return Err(QuandleError::InvalidParam(
                "operation table must be square and nonempty".into(),
            ));
        }
        for row in &table {
            for &v in row {
                if v >= n {
                    return Err(QuandleError::EntryRange { value: v, n });
                }
            }
        }
        for x in 0..n {
            if table[x][x] != x {
                return Err(QuandleError::AxiomViolation(Axiom::Idempotency { x }));
            }
        }
        for y in 0..n {
            let mut seen = vec![false; n];
            for x in 0..n {
                let v = table[x][y];
                if seen[v] {
                    return Err(QuandleError::AxiomViolation(Axiom::RightInvertibility { y }));
                }
                seen[v] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[table[x][z]][table[y][z]] {
                        return Err(QuandleError::AxiomViolation(Axiom::Distributivity {
                            x,
                            y,
                            z,
                        }));
                    }
                }
            }
        }
        Ok(Quandle { n, table, label })
    }

    /// Parse the plain-text table format: `#` comment lines, then the
    /// order `n`, then `n` rows of `n` whitespace-separated 0-based
    /// entries.
    pub fn from_table_str(text: &str) -> Result<Self, QuandleError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| QuandleError::TableFormat("missing order line".into()))?
            .parse()
            .map_err(|_| QuandleError::TableFormat("order line is not an integer".into()))?;
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| QuandleError::TableFormat(format!("missing row {i}")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| QuandleError::TableFormat(format!("bad entry {t:?} in row {i}")))
                })
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(QuandleError::TableFormat(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            table.push(row);
        }
        if lines.next().is_some() {
            return Err(QuandleError::TableFormat("trailing data after table".into()));
        }
        Quandle::from_table(table, None)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `x * y`.
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The right multiplication `R_y` as a permutation.
    pub fn column(&self, y: usize) -> Perm {
        (0..self.n).map(|x| self.table[x][y]).collect()
    }

    /// The left multiplication `L_a` as an image vector (not necessarily a
    /// permutation).
    pub fn row(&self, a: usize) -> Vec<usize> {
        self.table[a].clone()
    }

    // ----- constructions -----

    /// The trivial quandle: `x * y = x`.
    pub fn trivial(m: usize) -> Self {
        assert!(m > 0);
        let table = (0..m).map(|x| vec![x; m]).collect();
        Quandle {
            n: m,
            table,
            label: Some(format!("T{m}")),
        }
    }

    /// The dihedral quandle `R_n` on `Z_n`: `x * y = -x + 2y`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n)
            .map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect())
            .collect();
        Quandle {
            n,
            table,
            label: Some(format!("R{n}")),
        }
    }

    /// The commutative quandle `C_{2n+1}` on `Z_{2n+1}`:
    /// `x * y = (n+1)(x+y)`. Rejects even orders (no such structure
    /// exists: finite commutative quandles have odd order).
    pub fn commutative(order: usize) -> Result<Self, QuandleError> {
        if order == 0 || order % 2 == 0 {
            return Err(QuandleError::InvalidParam(format!(
                "commutative quandle needs odd order, got {order}"
            )));
        }
        let k = (order + 1) / 2;
        let table = (0..order)
            .map(|x| (0..order).map(|y| (k * (x + y)) % order).collect())
            .collect();
        Ok(Quandle {
            n: order,
            table,
            label: Some(format!("C{order}")),
        })
    }

    /// The core quandle of a group: `x * y = y x^{-1} y`.
    pub fn core(g: &FiniteGroup) -> Self {
        let n = g.order();
        let table = (0..n)
            .map(|x| (0..n).map(|y| g.mul(g.mul(y, g.inverse(x)), y)).collect())
            .collect();
        Quandle::from_table(table, Some(format!("Core({})", g.label())))
            .expect("core of a group is a quandle")
    }

    /// The conjugation quandle of a group: `x * y = y x y^{-1}`.
    pub fn conj(g: &FiniteGroup) -> Self {
        let n = g.order();
        let table = (0..n)
            .map(|x| (0..n).map(|y| g.mul(g.mul(y, x), g.inverse(y))).collect())
            .collect();
        Quandle::from_table(table, Some(format!("Conj({})", g.label())))
            .expect("conjugation in a group is a quandle")
    }

    /// The generalized Alexander quandle of `(G, f)`:
    /// `x * y = f(x y^{-1}) y`, where `f` must be a group automorphism
    /// (supplied as an image vector and validated, not synthesized).
    pub fn alexander(g: &FiniteGroup, f: &[usize]) -> Result<Self, QuandleError> {
        if !g.is_automorphism(f) {
            return Err(QuandleError::NotAutomorphism);
        }
        let n = g.order();
        let table = (0..n)
            .map(|x| (0..n).map(|y| g.mul(f[g.mul(x, g.inverse(y))], y)).collect())
            .collect();
        Quandle::from_table(table, Some(format!("Alex({})", g.label())))
    }

    /// Abelian extension of `x` by the abelian group `a` along a
    /// 2-cocycle `psi` (given as a table of `a`-elements):
    /// `(x, s) * (y, t) = (x * y, s + psi(x, y))`.
    ///
    /// Checks `psi(x, x) = 0` and the cocycle condition
    /// `psi(x,y) + psi(x*y,z) = psi(x,z) + psi(x*z,y*z)`.
    pub fn extension(
        x: &Quandle,
        a: &FiniteGroup,
        psi: &[Vec<usize>],
    ) -> Result<Self, QuandleError> {
        let n = x.order();
        if !a.is_abelian() {
            return Err(QuandleError::InvalidParam(
                "extension coefficients must form an abelian group".into(),
            ));
        }
        if psi.len() != n || psi.iter().any(|r| r.len() != n) {
            return Err(QuandleError::InvalidParam(format!(
                "cocycle table must be {n} x {n}"
            )));
        }
        for row in psi {
            for &v in row {
                if v >= a.order() {
                    return Err(QuandleError::EntryRange { value: v, n: a.order() });
                }
            }
        }
        for xx in 0..n {
            if psi[xx][xx] != a.identity() {
                return Err(QuandleError::CocycleViolation { x: xx, y: xx, z: xx });
            }
        }
        for xx in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = a.mul(psi[xx][y], psi[x.op(xx, y)][z]);
                    let rhs = a.mul(psi[xx][z], psi[x.op(xx, z)][x.op(y, z)]);
                    if lhs != rhs {
                        return Err(QuandleError::CocycleViolation { x: xx, y, z });
                    }
                }
            }
        }
        let m = a.order();
        let idx = |q: usize, s: usize| q * m + s;
        let mut table = vec![vec![0usize; n * m]; n * m];
        for xx in 0..n {
            for s in 0..m {
                for y in 0..n {
                    for t in 0..m {
                        table[idx(xx, s)][idx(y, t)] = idx(x.op(xx, y), a.mul(s, psi[xx][y]));
                    }
                }
            }
        }
        Quandle::from_table(
            table,
            Some(format!(
                "Ext({},{})",
                x.label().unwrap_or("?"),
                a.label()
            )),
        )
    }

    /// Direct product, elements indexed `(x, y) -> x * |Y| + y`.
    pub fn product(x: &Quandle, y: &Quandle) -> Self {
        let (nx, ny) = (x.order(), y.order());
        let idx = |a: usize, b: usize| a * ny + b;
        let mut table = vec![vec![0usize; nx * ny]; nx * ny];
        for a1 in 0..nx {
            for b1 in 0..ny {
                for a2 in 0..nx {
                    for b2 in 0..ny {
                        table[idx(a1, b1)][idx(a2, b2)] = idx(x.op(a1, a2), y.op(b1, b2));
                    }
                }
            }
        }
        Quandle {
            n: nx * ny,
            table,
            label: Some(format!(
                "({})x({})",
                x.label().unwrap_or("?"),
                y.label().unwrap_or("?")
            )),
        }
    }

    /// The involutory connected quandle of order 6, built from its right
    /// multiplications `R_1 = (3 5)(4 6), ..., R_6 = (1 4)(2 3)`
    /// (1-based cycles, stored 0-based).
    pub fn x6() -> Self {
        let cycles: [&[(usize, usize)]; 6] = [
            &[(3, 5), (4, 6)],
            &[(3, 6), (4, 5)],
            &[(1, 5), (2, 6)],
            &[(1, 6), (2, 5)],
            &[(1, 3), (2, 4)],
            &[(1, 4), (2, 3)],
        ];
        let mut table = vec![vec![0usize; 6]; 6];
        for (y, swaps) in cycles.iter().enumerate() {
            let mut col: Perm = perm::identity(6);
            for &(a, b) in *swaps {
                col.swap(a - 1, b - 1);
            }
            for (x, row) in table.iter_mut().enumerate() {
                row[y] = col[x];
            }
        }
        Quandle::from_table(table, Some("X6".into())).expect("the order-6 table is a quandle")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral3_table() {
        let q = Quandle::dihedral(3);
        assert_eq!(q.table(), &[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]);
    }

    #[test]
    fn trivial_table() {
        let q = Quandle::trivial(2);
        assert_eq!(q.table(), &[vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn commutative_c5() {
        let q = Quandle::commutative(5).unwrap();
        assert_eq!(q.op(1, 2), 4); // 3 * (1+2) mod 5
        assert!(matches!(
            Quandle::commutative(4),
            Err(QuandleError::InvalidParam(_))
        ));
    }

    #[test]
    fn core_z4_matches_dihedral() {
        let q = Quandle::core(&FiniteGroup::cyclic(4));
        assert_eq!(q.op(1, 0), 3);
        assert_eq!(q.table(), Quandle::dihedral(4).table());
    }

    #[test]
    fn conj_of_abelian_is_trivial() {
        let q = Quandle::conj(&FiniteGroup::cyclic(5));
        assert_eq!(q.table(), Quandle::trivial(5).table());
        // nonabelian: conjugation is not trivial
        let d3 = Quandle::conj(&FiniteGroup::dihedral(3));
        assert_ne!(d3.table(), Quandle::trivial(6).table());
    }

    #[test]
    fn alexander_on_zn() {
        let g = FiniteGroup::cyclic(5);
        // f(x) = 2x is an automorphism of Z5; x*y = 2x - y... = f(x-y)+y
        let f: Vec<usize> = (0..5).map(|x| (2 * x) % 5).collect();
        let q = Quandle::alexander(&g, &f).unwrap();
        assert_eq!(q.op(1, 0), 2);
        assert!(matches!(
            Quandle::alexander(&g, &[0, 0, 0, 0, 0]),
            Err(QuandleError::NotAutomorphism)
        ));
    }

    #[test]
    fn alexander_u_minus_one_is_dihedral() {
        let g = FiniteGroup::cyclic(7);
        let f: Vec<usize> = (0..7).map(|x| (6 * x) % 7).collect();
        let q = Quandle::alexander(&g, &f).unwrap();
        assert_eq!(q.table(), Quandle::dihedral(7).table());
    }

    #[test]
    fn from_table_rejects_bad_column() {
        let err = Quandle::from_table(vec![vec![0, 0], vec![0, 1]], None).unwrap_err();
        assert_eq!(
            err,
            QuandleError::AxiomViolation(Axiom::RightInvertibility { y: 0 })
        );
    }

    #[test]
    fn from_table_rejects_bad_diagonal() {
        let err = Quandle::from_table(vec![vec![1, 0], vec![0, 1]], None).unwrap_err();
        assert_eq!(err, QuandleError::AxiomViolation(Axiom::Idempotency { x: 0 }));
    }

    /// Exhaustively find the lexicographically smallest 3x3 table with an
    /// idempotent diagonal and permutation columns that still fails
    /// distributivity, and check the reported witness.
    #[test]
    fn smallest_distributivity_failure() {
        let perms_fixing = |i: usize| -> Vec<[usize; 3]> {
            let mut out = Vec::new();
            for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                if p[i] == i {
                    out.push(p);
                }
            }
            out
        };
        let mut found = None;
        'outer: for c0 in perms_fixing(0) {
            for c1 in perms_fixing(1) {
                for c2 in perms_fixing(2) {
                    let table: Vec<Vec<usize>> =
                        (0..3).map(|x| vec![c0[x], c1[x], c2[x]]).collect();
                    if let Err(QuandleError::AxiomViolation(Axiom::Distributivity { .. })) =
                        Quandle::from_table(table.clone(), None)
                    {
                        found = Some(table);
                        break 'outer;
                    }
                }
            }
        }
        let table = found.expect("a non-distributive candidate exists");
        // diagonal and columns survive, only axiom 3 trips
        let err = Quandle::from_table(table, None).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::AxiomViolation(Axiom::Distributivity { .. })
        ));
    }

    #[test]
    fn x6_is_valid_and_involutory_columns() {
        let q = Quandle::x6();
        assert_eq!(q.order(), 6);
        // R_1 = (3 5)(4 6): 3*1 = 5 in 1-based labels, i.e. 2*0 = 4
        assert_eq!(q.op(2, 0), 4);
        for y in 0..6 {
            assert!(crate::perm::is_involution(&q.column(y)));
        }
    }

    #[test]
    fn extension_by_indicator_cocycle_is_r4() {
        let t2 = Quandle::trivial(2);
        let z2 = FiniteGroup::cyclic(2);
        let psi = vec![vec![0, 1], vec![1, 0]];
        let q = Quandle::extension(&t2, &z2, &psi).unwrap();
        assert_eq!(q.order(), 4);
        // isomorphic to the dihedral quandle of order 4 via (0,2,1,3)
        let r4 = Quandle::dihedral(4);
        let iso = [0usize, 2, 1, 3];
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(iso[q.op(x, y)], r4.op(iso[x], iso[y]));
            }
        }
    }

    #[test]
    fn extension_rejects_bad_cocycle() {
        let t2 = Quandle::trivial(2);
        let z2 = FiniteGroup::cyclic(2);
        // psi(x,x) != 0
        let err = Quandle::extension(&t2, &z2, &[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, QuandleError::CocycleViolation { .. }));
        // fails the cocycle identity on a nontrivial base
        let r3 = Quandle::dihedral(3);
        let psi = vec![vec![0, 1, 0], vec![0, 0, 0], vec![0, 0, 0]];
        let err = Quandle::extension(&r3, &z2, &psi).unwrap_err();
        assert!(matches!(err, QuandleError::CocycleViolation { .. }));
    }

    #[test]
    fn product_of_quandles() {
        let q = Quandle::product(&Quandle::dihedral(3), &Quandle::trivial(2));
        assert_eq!(q.order(), 6);
        // (1,0)*(2,1) = (1*2, 0*1) = (0, 0)
        assert_eq!(q.op(1 * 2, 2 * 2 + 1), 0);
    }

    #[test]
    fn table_file_roundtrip() {
        let text = "# three-element dihedral\n3\n0 2 1\n2 1 0\n1 0 2\n";
        let q = Quandle::from_table_str(text).unwrap();
        assert_eq!(q.table(), Quandle::dihedral(3).table());
        assert!(Quandle::from_table_str("2\n0 0\n").is_err());
        assert!(Quandle::from_table_str("not a number\n").is_err());
        assert!(matches!(
            Quandle::from_table_str("2\n0 9\n1 1\n"),
            Err(QuandleError::EntryRange { value: 9, n: 2 })
        ));
    }
}
