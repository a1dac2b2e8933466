//! Permutations of `{0, .., n-1}` as index vectors.

use std::collections::HashSet;

/// A permutation stored as its image vector: `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_permutation(p: &[usize]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// `compose(p, q)` maps `i` to `p[q[i]]` (apply `q` first).
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&i| p[i]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_involution(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| p[x] == i)
}

/// Order of the group generated by `gens`, by breadth-first closure under
/// composition.
pub fn group_order(gens: &[Perm], n: usize) -> usize {
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(identity(n));
    let mut frontier: Vec<Perm> = vec![identity(n)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(g, &p);
            if seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

/// Orbit of `start` under the group generated by `gens`.
pub fn orbit(gens: &[Perm], start: usize, n: usize) -> Vec<bool> {
    let mut invs: Vec<Perm> = gens.iter().map(|g| inverse(g)).collect();
    let mut all: Vec<&Perm> = gens.iter().collect();
    all.extend(invs.iter_mut().map(|g| &*g));
    let mut in_orbit = vec![false; n];
    in_orbit[start] = true;
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        for g in &all {
            let y = g[x];
            if !in_orbit[y] {
                in_orbit[y] = true;
                frontier.push(y);
            }
        }
    }
    in_orbit
}

/// Cycle notation with 1-based element names, e.g. `(1 3 5)(2 4 6)`; the
/// identity prints as `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(
            &cyc.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let p = vec![1, 2, 0];
        let q = vec![0, 2, 1];
        assert_eq!(compose(&p, &q), vec![1, 0, 2]);
        assert_eq!(compose(&p, &inverse(&p)), identity(3));
    }

    #[test]
    fn s3_order() {
        let gens = vec![vec![1, 0, 2], vec![0, 2, 1]];
        assert_eq!(group_order(&gens, 3), 6);
    }

    #[test]
    fn cycles_display() {
        assert_eq!(cycle_notation(&[2, 3, 4, 5, 0, 1]), "(1 3 5)(2 4 6)");
        assert_eq!(cycle_notation(&[0, 1]), "()");
    }
}
