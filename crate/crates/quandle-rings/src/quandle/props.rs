//! Structural classification of a finite quandle.

use super::Quandle;
use crate::perm::{self, Perm};

/// Exact structural flags of a finite quandle.
///
/// `latin` means every left multiplication `L_a` is a bijection;
/// `semi_latin` that every `L_a` is injective. For finite quandles the two
/// coincide (the distinction only matters for infinite quandles such as
/// `Core(Z)`, which is semi-latin but not latin); both flags are reported
/// for uniformity with the infinite case.
///
/// `almost_latin_degree` is `Some(m)` when every stabilizer
/// `Stab(a) = {x : a*x = a}` has size `m` and `L_a(x) = b` has exactly one
/// solution for every `b` outside `Stab(a)`; degree 1 is the latin case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub latin: bool,
    pub semi_latin: bool,
    pub commutative: bool,
    pub connected: bool,
    pub faithful: bool,
    pub involutory: bool,
    pub almost_latin_degree: Option<usize>,
    pub inn_order: usize,
}

/// Compute every flag of [`PropertyReport`] exactly.
pub fn properties(q: &Quandle) -> PropertyReport {
    let n = q.order();
    let semi_latin = (0..n).all(|a| {
        let mut seen = vec![false; n];
        (0..n).all(|x| {
            let v = q.op(a, x);
            !std::mem::replace(&mut seen[v], true)
        })
    });
    let latin = semi_latin; // injective = bijective on a finite set
    let commutative = (0..n).all(|x| (0..n).all(|y| q.op(x, y) == q.op(y, x)));
    let cols: Vec<Perm> = (0..n).map(|y| q.column(y)).collect();
    let connected = perm::orbit(&cols, 0, n).iter().all(|&b| b);
    let faithful = (0..n).all(|x| (x + 1..n).all(|y| cols[x] != cols[y]));
    let involutory = cols.iter().all(|c| perm::is_involution(c));
    let inn_order = perm::group_order(&cols, n);

    // Stab(a) = {x : a*x = a}; degree m requires uniform stabilizer size
    // and L_a(x) = b uniquely solvable for every b off the stabilizer.
    let stab = |a: usize| -> Vec<bool> { (0..n).map(|x| q.op(a, x) == a).collect() };
    let m = stab(0).iter().filter(|&&b| b).count();
    let uniform = (1..n).all(|a| stab(a).iter().filter(|&&b| b).count() == m);
    let almost_latin_degree = if uniform
        && (0..n).all(|a| {
            let in_stab = stab(a);
            (0..n)
                .filter(|&b| !in_stab[b])
                .all(|b| (0..n).filter(|&x| q.op(a, x) == b).count() == 1)
        }) {
        Some(m)
    } else {
        None
    };

    PropertyReport {
        latin,
        semi_latin,
        commutative,
        connected,
        faithful,
        involutory,
        almost_latin_degree,
        inn_order,
    }
}

/// Order and generators of the inner automorphism group, the group
/// generated by the right multiplications. Generators are the distinct
/// columns in first-appearance order.
pub fn inner_group(q: &Quandle) -> (usize, Vec<Perm>) {
    let n = q.order();
    let mut gens: Vec<Perm> = Vec::new();
    for y in 0..n {
        let c = q.column(y);
        if !gens.contains(&c) {
            gens.push(c);
        }
    }
    (perm::group_order(&gens, n), gens)
}
