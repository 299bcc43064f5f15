//! Ring comparison: a cheap invariant vector, and an exhaustive
//! isomorphism search for small rings.

use serde::Serialize;

use crate::lattice::all_ideals;
use crate::ring::Ring;

/// Rings whose exhaustive isomorphism search is attempted.
pub const ISO_SEARCH_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantVector {
    pub size: usize,
    pub units: usize,
    pub ideals: usize,
    pub nilradical: usize,
}

pub fn invariant_vector(ring: &Ring) -> InvariantVector {
    InvariantVector {
        size: ring.size(),
        units: ring.units().len(),
        ideals: all_ideals(ring).len(),
        nilradical: ring.nilpotents().len(),
    }
}

/// Per-element data preserved by any isomorphism.
fn signature(ring: &Ring, x: usize) -> (usize, bool, bool, bool, usize) {
    let annihilated = ring.elements().filter(|&y| ring.mul(x, y) == 0).count();
    (
        ring.additive_order(x),
        ring.is_unit(x),
        ring.is_nilpotent(x),
        ring.mul(x, x) == x,
        annihilated,
    )
}

/// An isomorphism `a -> b` as an element map, found by backtracking over
/// signature-compatible images. `None` when the rings are not isomorphic or
/// exceed [`ISO_SEARCH_LIMIT`].
pub fn find_isomorphism(a: &Ring, b: &Ring) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.size() > ISO_SEARCH_LIMIT {
        return None;
    }
    if invariant_vector(a) != invariant_vector(b) {
        return None;
    }
    let sa: Vec<_> = a.elements().map(|x| signature(a, x)).collect();
    let sb: Vec<_> = b.elements().map(|x| signature(b, x)).collect();
    let mut map = vec![usize::MAX; a.size()];
    let mut used = vec![false; b.size()];
    map[0] = 0;
    used[0] = true;
    if map[a.one()] == usize::MAX {
        map[a.one()] = b.one();
        used[b.one()] = true;
    }
    let order: Vec<usize> = a.elements().filter(|&x| map[x] == usize::MAX).collect();
    fn consistent(a: &Ring, b: &Ring, map: &[usize], x: usize) -> bool {
        a.elements().filter(|&y| map[y] != usize::MAX).all(|y| {
            let s = map[a.add(x, y)];
            let p = map[a.mul(x, y)];
            (s == usize::MAX || s == b.add(map[x], map[y]))
                && (p == usize::MAX || p == b.mul(map[x], map[y]))
        })
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        order: &[usize],
        a: &Ring,
        b: &Ring,
        sa: &[(usize, bool, bool, bool, usize)],
        sb: &[(usize, bool, bool, bool, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&x) = order.get(k) else {
            return true;
        };
        for t in b.elements() {
            if used[t] || sa[x] != sb[t] {
                continue;
            }
            map[x] = t;
            used[t] = true;
            if consistent(a, b, map, x) && go(k + 1, order, a, b, sa, sb, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[t] = false;
        }
        false
    }
    if !consistent(a, b, &map, 0) || !consistent(a, b, &map, a.one()) {
        return None;
    }
    go(0, &order, a, b, &sa, &sb, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(a: &Ring, b: &Ring) -> Option<bool> {
    if a.size() > ISO_SEARCH_LIMIT || b.size() > ISO_SEARCH_LIMIT {
        return None;
    }
    Some(find_isomorphism(a, b).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::direct_product;
    use crate::ring::FiniteRing;

    fn z(n: u64) -> Ring {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn crt_isomorphism() {
        let p = direct_product(&[z(2), z(3)]).unwrap();
        assert_eq!(invariant_vector(&p), invariant_vector(&z(6)));
        let f = find_isomorphism(&z(6), &p).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(f[(x + y) % 6], p.add(f[x], f[y]));
                assert_eq!(f[(x * y) % 6], p.mul(f[x], f[y]));
            }
        }
    }

    #[test]
    fn non_isomorphic_rings() {
        let p = direct_product(&[z(2), z(2)]).unwrap();
        assert_eq!(is_isomorphic(&z(4), &p), Some(false));
        let q = direct_product(&[z(4), z(2)]).unwrap();
        assert_eq!(is_isomorphic(&z(8), &q), Some(false));
        assert_eq!(is_isomorphic(&z(32), &z(32)), None);
    }
}
