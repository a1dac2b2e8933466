//! Exhaustive enumeration of all quandle operation tables of a given
//! order (raw tables, not isomorphism classes).
//!
//! Columns are chosen one at a time from the permutations fixing their own
//! index (this bakes in axioms 1 and 2); self-distributivity is checked
//! incrementally after each column is placed, which prunes the search tree
//! hard. The branches under each choice of the first column are
//! independent, so they fan out across workers; the final list is sorted
//! by table, making the output canonical regardless of scheduling.

use super::{Quandle, QuandleError};
use crate::caps::Caps;
use crate::par::flat_map_ordered;

/// All quandle tables of order `n`, lexicographically sorted.
pub fn enumerate_quandles(n: usize, caps: &Caps) -> Result<Vec<Quandle>, QuandleError> {
    enumerate_impl(n, caps, true)
}

/// Sequential variant of [`enumerate_quandles`]; same output.
pub fn enumerate_quandles_seq(n: usize, caps: &Caps) -> Result<Vec<Quandle>, QuandleError> {
    enumerate_impl(n, caps, false)
}

fn enumerate_impl(n: usize, caps: &Caps, parallel: bool) -> Result<Vec<Quandle>, QuandleError> {
    if n == 0 {
        return Err(QuandleError::InvalidParam("order must be positive".into()));
    }
    if n > caps.enumerate_max_n {
        return Err(QuandleError::SizeLimit {
            required: n as u64,
            cap: caps.enumerate_max_n as u64,
        });
    }
    // permutations of 0..n fixing index i, in lexicographic order
    let column_choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| perms_fixing(n, i))
        .collect();

    let first = &column_choices[0];
    let mut tables = flat_map_ordered(first.len(), parallel, |b| {
        let mut cols: Vec<Option<Vec<usize>>> = vec![None; n];
        cols[0] = Some(first[b].clone());
        if !distributivity_ok(&cols, 0, n) {
            return Vec::new();
        }
        let mut found = Vec::new();
        fill_columns(n, &column_choices, &mut cols, 1, &mut found);
        found
    });
    tables.sort();
    Ok(tables
        .into_iter()
        .map(|t| Quandle::from_table(t, None).expect("enumerated tables satisfy the axioms"))
        .collect())
}

fn perms_fixing(n: usize, fixed: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (0..n).filter(|&x| x != fixed).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n - 1);
    let mut used = vec![false; rest.len()];
    fn rec(
        rest: &[usize],
        used: &mut [bool],
        current: &mut Vec<usize>,
        fixed: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == rest.len() {
            let mut p: Vec<usize> = Vec::with_capacity(rest.len() + 1);
            let mut it = current.iter();
            for pos in 0..=rest.len() {
                if pos == fixed {
                    p.push(fixed);
                } else {
                    p.push(*it.next().unwrap());
                }
            }
            out.push(p);
            return;
        }
        for i in 0..rest.len() {
            if !used[i] {
                used[i] = true;
                current.push(rest[i]);
                rec(rest, used, current, fixed, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(&rest, &mut used, &mut current, fixed, &mut out);
    out
}

/// Check every distributivity triple whose three needed columns
/// (`y`, `z` and `y*z`) are all assigned, restricted to those involving
/// the newly placed column `new`.
fn distributivity_ok(cols: &[Option<Vec<usize>>], new: usize, n: usize) -> bool {
    for y in 0..n {
        let Some(cy) = cols[y].as_ref() else { continue };
        for z in 0..n {
            if y != new && z != new {
                // already checked when the later of y,z was placed, unless
                // the y*z column only now appeared
                let yz = cols[z].as_ref().map(|cz| cz[y]);
                if yz != Some(new) {
                    continue;
                }
            }
            let Some(cz) = cols[z].as_ref() else { continue };
            let yz = cz[y];
            let Some(cyz) = cols[yz].as_ref() else { continue };
            for x in 0..n {
                // (x*y)*z = (x*z)*(y*z)
                if cz[cy[x]] != cyz[cz[x]] {
                    return false;
                }
            }
        }
    }
    true
}

fn fill_columns(
    n: usize,
    choices: &[Vec<Vec<usize>>],
    cols: &mut Vec<Option<Vec<usize>>>,
    k: usize,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if k == n {
        let table: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| cols[y].as_ref().unwrap()[x]).collect())
            .collect();
        out.push(table);
        return;
    }
    for cand in &choices[k] {
        cols[k] = Some(cand.clone());
        if distributivity_ok(cols, k, n) {
            fill_columns(n, choices, cols, k + 1, out);
        }
    }
    cols[k] = None;
}
