//! Shared fixtures and independent oracles for the integration tests. The
//! oracles work on raw element sets and never touch the lattice or the
//! factorization engine.

#![allow(dead_code)]

use std::collections::BTreeSet;

use isp_workbench::expr::{elaborate_finite, parse_ring};
use isp_workbench::Ring;

pub const CORPUS: &str = include_str!("../../data/corpus.txt");

pub fn corpus_exprs() -> Vec<String> {
    isp_workbench::commands::read_corpus(CORPUS)
}

pub fn ring(expr: &str) -> Ring {
    elaborate_finite(&parse_ring(expr).unwrap(), 4096).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

pub fn corpus_rings() -> Vec<Ring> {
    corpus_exprs().iter().map(|e| ring(e)).collect()
}

/// Rings for the exhaustive oracle comparison: every corpus ring with at
/// most 16 elements plus a few extra shapes.
pub fn small_rings() -> Vec<Ring> {
    let extra = [
        "prod(Zmod(2), Zmod(2), Zmod(2), Zmod(2))",
        "prod(Zmod(2), Zmod(8))",
        "prod(Zmod(3), Zmod(5))",
        "trivext(Zmod(2), mod(2, 2, 2))",
        "dup(Zmod(4), ideal(0))",
        "quot(Zmod(16), ideal(4))",
        "quot(trivext(Zmod(2), mod(2, 2, 2)), ideal((0, (1, 0, 0))))",
    ];
    let mut seen = BTreeSet::new();
    corpus_exprs()
        .iter()
        .map(String::as_str)
        .chain(extra)
        .filter(|e| seen.insert(e.to_string()))
        .map(ring)
        .filter(|r| r.size() <= 16)
        .collect()
}

pub type Set = BTreeSet<usize>;

/// Smallest subset containing `gens` closed under addition and under
/// multiplication by ring elements.
pub fn closure(r: &Ring, gens: impl IntoIterator<Item = usize>) -> Set {
    let mut set: Set = std::iter::once(0).chain(gens).collect();
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                next.insert(r.add(a, b));
            }
            for x in r.elements() {
                next.insert(r.mul(x, a));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Every ideal, reached by adjoining one element at a time from the zero
/// ideal, sorted by (size, elements).
pub fn brute_ideals(r: &Ring) -> Vec<Set> {
    let mut found: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let mut frontier = vec![closure(r, [])];
    while let Some(i) = frontier.pop() {
        if !found.insert((i.len(), i.iter().copied().collect())) {
            continue;
        }
        for x in r.elements().filter(|x| !i.contains(x)) {
            frontier.push(closure(r, i.iter().copied().chain([x])));
        }
    }
    found.into_iter().map(|(_, v)| v.into_iter().collect()).collect()
}

pub fn set_product(r: &Ring, a: &Set, b: &Set) -> Set {
    let gens: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| r.mul(x, y)).collect();
    closure(r, gens)
}

pub fn is_radical(r: &Ring, i: &Set) -> bool {
    r.elements().all(|x| {
        let mut p = x;
        for _ in 0..=r.size() {
            if i.contains(&p) {
                return i.contains(&x);
            }
            p = r.mul(p, x);
        }
        true
    })
}

pub fn is_prime(r: &Ring, i: &Set) -> bool {
    i.len() < r.size()
        && r.elements().all(|a| {
            r.elements()
                .all(|b| !i.contains(&r.mul(a, b)) || i.contains(&a) || i.contains(&b))
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    Radical,
    Prime,
}

/// Least factorization of `target` as a product of alphabet ideals drawn
/// from `ideals`, ordered by (number of factors, factor positions in
/// `ideals`). The number of factors is found by breadth-first search over
/// reachable products with no exponent bound, stopping once a layer repeats.
pub fn factor_oracle(r: &Ring, ideals: &[Set], target: &Set, alphabet: Alphabet) -> Option<Vec<usize>> {
    let admissible: Vec<usize> = (0..ideals.len())
        .filter(|&k| {
            let h = &ideals[k];
            h.len() < r.size()
                && target.is_subset(h)
                && match alphabet {
                    Alphabet::Radical => is_radical(r, h),
                    Alphabet::Prime => is_prime(r, h),
                }
        })
        .collect();
    let mut layer: BTreeSet<Vec<usize>> = admissible.iter().map(|&k| ideals[k].iter().copied().collect()).collect();
    let mut seen_layers: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    let target_vec: Vec<usize> = target.iter().copied().collect();
    let mut n = 1;
    loop {
        if layer.is_empty() || seen_layers.contains(&layer) {
            return None;
        }
        if layer.contains(&target_vec) {
            break;
        }
        let next = layer
            .iter()
            .flat_map(|p| {
                let p: Set = p.iter().copied().collect();
                admissible
                    .iter()
                    .map(|&k| set_product(r, &p, &ideals[k]).into_iter().collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .collect();
        seen_layers.push(std::mem::replace(&mut layer, next));
        n += 1;
    }
    #[allow(clippy::too_many_arguments)]
    fn least(
        r: &Ring,
        ideals: &[Set],
        admissible: &[usize],
        target: &Set,
        start: usize,
        left: usize,
        acc: &Set,
        path: &mut Vec<usize>,
    ) -> bool {
        if left == 0 {
            return acc == target;
        }
        for s in start..admissible.len() {
            let k = admissible[s];
            path.push(k);
            let next = if path.len() == 1 {
                ideals[k].clone()
            } else {
                set_product(r, acc, &ideals[k])
            };
            if least(r, ideals, admissible, target, s, left - 1, &next, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    let whole: Set = r.elements().collect();
    assert!(least(r, ideals, &admissible, target, 0, n, &whole, &mut path));
    Some(path)
}

/// Units of the ring by direct search for an inverse.
pub fn brute_units(r: &Ring) -> Set {
    r.elements()
        .filter(|&a| r.elements().any(|b| r.mul(a, b) == r.one()))
        .collect()
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn squarefree(d: u64) -> bool {
    (2..).take_while(|p| p * p <= d).all(|p| !d.is_multiple_of(p * p))
}

/// Least `(k, m, parts)` with `m · parts = n`, `m >= 1` and each part a
/// proper radical ideal of Z (0 or squarefree > 1), found by trying every
/// sorted tuple of divisors. `sp` forces `m = 1`.
pub fn int_oracle(n: u64, sp: bool) -> Option<(u64, Vec<u64>)> {
    assert_ne!(n, 1);
    if n == 0 {
        return Some((1, vec![0]));
    }
    let radicals: Vec<u64> = divisors(n).into_iter().filter(|&d| d > 1 && squarefree(d)).collect();
    fn tuple(radicals: &[u64], start: usize, left: usize, rest: u64, path: &mut Vec<u64>) -> bool {
        if left == 0 {
            return rest == 1;
        }
        for s in start..radicals.len() {
            let d = radicals[s];
            if rest.is_multiple_of(d) {
                path.push(d);
                if tuple(radicals, s, left - 1, rest / d, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let max_k = 64 - n.leading_zeros() as usize;
    for k in 1..=max_k {
        for m in divisors(n) {
            if sp && m > 1 {
                break;
            }
            let mut path = Vec::new();
            if tuple(&radicals, 0, k, n / m, &mut path) {
                return Some((m, path));
            }
        }
    }
    None
}
