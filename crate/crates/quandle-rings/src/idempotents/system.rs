//! The quadratic Diophantine system equivalent to `u^2 = u` in a fixed
//! augmentation slice, and its bounded exhaustive solver.

use super::IdemError;
use crate::caps::Caps;
use crate::par::flat_map_ordered;
use crate::quandle::Quandle;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A monomial of total degree at most two in 1-based variables
/// `x_1, .., x_k` (variable `i` is the coefficient of `E_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Monomial {
    One,
    Var(usize),
    /// `x_a x_b` with `a <= b`.
    Quad(usize, usize),
}

impl Monomial {
    fn mul(self, other: Monomial) -> Monomial {
        match (self, other) {
            (Monomial::One, m) | (m, Monomial::One) => m,
            (Monomial::Var(a), Monomial::Var(b)) => {
                Monomial::Quad(a.min(b), a.max(b))
            }
            _ => panic!("product would exceed degree two"),
        }
    }

    fn render(&self, name: &str) -> String {
        match self {
            Monomial::One => String::new(),
            Monomial::Var(a) => format!("{name}{a}"),
            Monomial::Quad(a, b) if a == b => format!("{name}{a}^2"),
            Monomial::Quad(a, b) => format!("{name}{a}*{name}{b}"),
        }
    }
}

/// An integer polynomial of total degree at most two.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, i64>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn var(i: usize) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::Var(i), 1);
        p
    }

    pub fn constant(c: i64) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::One, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (&m, &c) in &other.terms {
            self.add_term(m, c);
        }
    }

    /// Product of two polynomials of degree at most one.
    pub fn mul_linear(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (&ma, &ca) in &a.terms {
            for (&mb, &cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn eval(&self, xs: &[i64]) -> i64 {
        self.terms
            .iter()
            .map(|(&m, &c)| match m {
                Monomial::One => c,
                Monomial::Var(a) => c * xs[a - 1],
                Monomial::Quad(a, b) => c * xs[a - 1] * xs[b - 1],
            })
            .sum()
    }

    /// Render `self = 0` moved into the reference shape
    /// `x_p = <linear and quadratic terms>` when `lhs_var` is given,
    /// otherwise as `<poly> = 0`.
    pub fn render(&self, name: &str, lhs_var: Option<usize>) -> String {
        let mut rhs = self.clone();
        if let Some(p) = lhs_var {
            // self is (stuff) - x_p; move x_p across
            rhs.add_term(Monomial::Var(p), 1);
        }
        let mut out = String::new();
        if let Some(p) = lhs_var {
            let _ = write!(out, "{name}{p} = ");
        }
        if rhs.is_zero() {
            out.push('0');
        } else {
            let mut first = true;
            for (m, c) in rhs.terms() {
                let neg = c < 0;
                let mag = c.abs();
                if first {
                    if neg {
                        out.push('-');
                    }
                    first = false;
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                let var = m.render(name);
                if var.is_empty() {
                    let _ = write!(out, "{mag}");
                } else if mag == 1 {
                    out.push_str(&var);
                } else {
                    let _ = write!(out, "{mag}*{var}");
                }
            }
        }
        if lhs_var.is_none() {
            out.push_str(" = 0");
        }
        out
    }
}

/// The coordinate equations of `u^2 = u` for
/// `u = aug_value * e_0 + sum_i x_i E_i`, each stored with all terms moved
/// to one side (equation `p` is `(u^2)_p - x_p = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    pub num_vars: usize,
    pub aug_value: u8,
    pub equations: Vec<Poly>,
}

/// Build the idempotency system of a quandle in a fixed augmentation
/// slice (`aug_value` 0 or 1).
pub fn build_system(q: &Quandle, aug_value: u8) -> PolySystem {
    assert!(aug_value <= 1, "augmentation of an idempotent is 0 or 1");
    let n = q.order();
    let k = n - 1;
    // full coefficients of u: c_0 = aug - sum x_i, c_i = x_i
    let mut c: Vec<Poly> = Vec::with_capacity(n);
    let mut c0 = Poly::constant(aug_value as i64);
    for i in 1..n {
        c0.add_term(Monomial::Var(i), -1);
    }
    c.push(c0);
    for i in 1..n {
        c.push(Poly::var(i));
    }
    // coefficients of u^2 through the operation table
    let mut sq: Vec<Poly> = vec![Poly::zero(); n];
    for x in 0..n {
        for y in 0..n {
            let prod = Poly::mul_linear(&c[x], &c[y]);
            sq[q.op(x, y)].add_assign(&prod);
        }
    }
    let equations = (1..n)
        .map(|p| {
            let mut eq = sq[p].clone();
            eq.add_term(Monomial::Var(p), -1);
            eq
        })
        .collect();
    PolySystem {
        num_vars: k,
        aug_value,
        equations,
    }
}

/// All integer solutions of the system with every variable in
/// `[-bx, bx]`, in lexicographic order.
pub fn search_system(
    system: &PolySystem,
    bx: i64,
    caps: &Caps,
) -> Result<Vec<Vec<i64>>, IdemError> {
    search_impl(system, bx, caps, true)
}

/// Sequential variant of [`search_system`]; same output.
pub fn search_system_seq(
    system: &PolySystem,
    bx: i64,
    caps: &Caps,
) -> Result<Vec<Vec<i64>>, IdemError> {
    search_impl(system, bx, caps, false)
}

fn search_impl(
    system: &PolySystem,
    bx: i64,
    caps: &Caps,
    parallel: bool,
) -> Result<Vec<Vec<i64>>, IdemError> {
    assert!(bx >= 0);
    let k = system.num_vars;
    if k == 0 {
        return Ok(if system.equations.iter().all(|e| e.eval(&[]) == 0) {
            vec![Vec::new()]
        } else {
            Vec::new()
        });
    }
    let width = 2 * bx as u64 + 1;
    if Caps::checked_pow_within(width, k as u32, caps.box_sweep_max).is_none() {
        return Err(IdemError::SizeLimit {
            required: width.saturating_pow(k as u32),
            cap: caps.box_sweep_max,
        });
    }
    let sols = flat_map_ordered(width as usize, parallel, |part| {
        let first = part as i64 - bx;
        let mut xs = vec![-bx; k];
        xs[0] = first;
        let mut hits = Vec::new();
        loop {
            if system.equations.iter().all(|e| e.eval(&xs) == 0) {
                hits.push(xs.clone());
            }
            let mut advanced = false;
            for pos in (1..k).rev() {
                if xs[pos] < bx {
                    xs[pos] += 1;
                    for x in xs.iter_mut().skip(pos + 1) {
                        *x = -bx;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return hits;
            }
        }
    });
    Ok(sols)
}
