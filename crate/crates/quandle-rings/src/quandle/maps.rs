//! Automorphism and homomorphism searches by backtracking.

use super::{Quandle, QuandleError};
use crate::caps::Caps;
use crate::perm::Perm;

/// Does `f` (an image vector into `p`) satisfy `f(x*y) = f(x)*f(y)`?
pub fn is_homomorphism(q: &Quandle, p: &Quandle, f: &[usize]) -> bool {
    let n = q.order();
    f.len() == n
        && f.iter().all(|&v| v < p.order())
        && (0..n).all(|x| (0..n).all(|y| f[q.op(x, y)] == p.op(f[x], f[y])))
}

/// All quandle automorphisms of `q`, sorted lexicographically as image
/// vectors. Backtracks over partial permutations, checking every product
/// constraint as soon as its three participants are assigned.
pub fn automorphisms(q: &Quandle, caps: &Caps) -> Result<Vec<Perm>, QuandleError> {
    let n = q.order();
    if n > caps.automorphism_max_n {
        return Err(QuandleError::SizeLimit {
            required: n as u64,
            cap: caps.automorphism_max_n as u64,
        });
    }
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack_aut(q, 0, &mut image, &mut used, &mut out);
    Ok(out)
}

fn backtrack_aut(q: &Quandle, k: usize, image: &mut [usize], used: &mut [bool], out: &mut Vec<Perm>) {
    let n = q.order();
    if k == n {
        out.push(image.to_vec());
        return;
    }
    'candidates: for v in 0..n {
        if used[v] {
            continue;
        }
        image[k] = v;
        for x in 0..=k {
            for y in 0..=k {
                let t = q.op(x, y);
                if t <= k && image[t] != q.op(image[x], image[y]) {
                    image[k] = usize::MAX;
                    continue 'candidates;
                }
            }
        }
        used[v] = true;
        backtrack_aut(q, k + 1, image, used, out);
        used[v] = false;
        image[k] = usize::MAX;
    }
}

/// All quandle homomorphisms `q -> p`, sorted lexicographically as image
/// vectors. Every constant map is always present.
pub fn homomorphisms(q: &Quandle, p: &Quandle, caps: &Caps) -> Result<Vec<Vec<usize>>, QuandleError> {
    if Caps::checked_pow_within(p.order() as u64, q.order() as u32, caps.hom_search_max).is_none()
    {
        return Err(QuandleError::SizeLimit {
            required: (p.order() as u64).saturating_pow(q.order() as u32),
            cap: caps.hom_search_max,
        });
    }
    let n = q.order();
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    backtrack_hom(q, p, 0, &mut image, &mut out);
    Ok(out)
}

fn backtrack_hom(
    q: &Quandle,
    p: &Quandle,
    k: usize,
    image: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    let n = q.order();
    if k == n {
        out.push(image.to_vec());
        return;
    }
    'candidates: for v in 0..p.order() {
        image[k] = v;
        for x in 0..=k {
            for y in 0..=k {
                let t = q.op(x, y);
                if t <= k && image[t] != p.op(image[x], image[y]) {
                    image[k] = usize::MAX;
                    continue 'candidates;
                }
            }
        }
        backtrack_hom(q, p, k + 1, image, out);
        image[k] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm;
    use crate::perm::is_permutation;

    #[test]
    fn trivial2_automorphisms() {
        let q = Quandle::trivial(2);
        let auts = automorphisms(&q, &Caps::default()).unwrap();
        assert_eq!(auts, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn r3_automorphisms_count() {
        let auts = automorphisms(&Quandle::dihedral(3), &Caps::default()).unwrap();
        assert_eq!(auts.len(), 6);
        assert!(auts.iter().all(|a| is_permutation(a)));
    }

    #[test]
    fn r5_automorphism_group_order_20() {
        let auts = automorphisms(&Quandle::dihedral(5), &Caps::default()).unwrap();
        assert_eq!(auts.len(), 20);
    }

    #[test]
    fn automorphisms_closed_under_composition_and_inverse() {
        for q in [Quandle::dihedral(4), Quandle::x6()] {
            let auts = automorphisms(&q, &Caps::default()).unwrap();
            for a in &auts {
                assert!(auts.contains(&perm::inverse(a)));
                for b in &auts {
                    assert!(auts.contains(&perm::compose(a, b)));
                }
            }
        }
    }

    #[test]
    fn size_cap_respected() {
        let q = Quandle::trivial(9);
        assert!(matches!(
            automorphisms(&q, &Caps::default()),
            Err(QuandleError::SizeLimit { .. })
        ));
    }

    #[test]
    fn homs_x6_to_r3() {
        let homs = homomorphisms(&Quandle::x6(), &Quandle::dihedral(3), &Caps::default()).unwrap();
        assert_eq!(homs.len(), 9);
        assert!(homs.contains(&vec![0, 0, 1, 1, 2, 2]));
        // sorted lexicographically
        let mut sorted = homs.clone();
        sorted.sort();
        assert_eq!(homs, sorted);
    }

    #[test]
    fn constant_maps_are_homomorphisms() {
        let q = Quandle::dihedral(5);
        let p = Quandle::x6();
        let homs = homomorphisms(&q, &p, &Caps::default()).unwrap();
        for c in 0..p.order() {
            assert!(homs.contains(&vec![c; q.order()]));
        }
    }

    #[test]
    fn trivial2_to_trivial2_has_four() {
        let t2 = Quandle::trivial(2);
        assert_eq!(homomorphisms(&t2, &t2, &Caps::default()).unwrap().len(), 4);
    }

    #[test]
    fn hom_cap() {
        let q = Quandle::trivial(8);
        let p = Quandle::trivial(8);
        let caps = Caps {
            hom_search_max: 1000,
            ..Caps::default()
        };
        assert!(matches!(
            homomorphisms(&q, &p, &caps),
            Err(QuandleError::SizeLimit { .. })
        ));
    }
}
