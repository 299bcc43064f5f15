//! Ideals of a finite ring as canonical element sets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    set: ElemSet,
}

impl Ideal {
    pub(crate) fn from_set_unchecked(ring: &Ring, set: ElemSet) -> Ideal {
        debug_assert_eq!(set.universe(), ring.size());
        Ideal {
            ring: ring.clone(),
            set,
        }
    }

    /// Validates closure under addition and multiplication by ring elements.
    pub fn from_elements<I: IntoIterator<Item = usize>>(ring: &Ring, elems: I) -> Result<Ideal> {
        let set = ElemSet::from_indices(ring.size(), elems);
        let closed = set.contains(0)
            && set.iter().all(|a| {
                set.iter().all(|b| set.contains(ring.add(a, b)))
                    && ring.elements().all(|r| set.contains(ring.mul(r, a)))
            });
        if !closed {
            return Err(Error::NotAnIdeal(format!("{set:?} in {}", ring.provenance())));
        }
        Ok(Ideal::from_set_unchecked(ring, set))
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_set_unchecked(ring, ElemSet::from_indices(ring.size(), [0]))
    }

    pub fn whole(ring: &Ring) -> Ideal {
        Ideal::from_set_unchecked(ring, ElemSet::full(ring.size()))
    }

    /// `aA`, which is already an ideal since `A` has an identity.
    pub fn principal(ring: &Ring, a: usize) -> Ideal {
        let set = ElemSet::from_indices(ring.size(), ring.elements().map(|r| ring.mul(r, a)));
        Ideal::from_set_unchecked(ring, set)
    }

    pub fn generated(ring: &Ring, gens: &[usize]) -> Ideal {
        gens.iter().fold(Ideal::zero(ring), |acc, &g| {
            if acc.contains(g) {
                acc
            } else {
                acc.sum_unchecked(&Ideal::principal(ring, g))
            }
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn elements(&self) -> crate::bitset::Iter<'_> {
        self.set.iter()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        !self.is_proper()
    }

    /// Contains a regular element (a non-zero-divisor).
    pub fn is_regular(&self) -> bool {
        !self.set.intersection(self.ring.regular_elements()).is_empty()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.set.is_subset(&other.set)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.provenance().to_string(),
                other.ring.provenance().to_string(),
            ))
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Ideal) -> Ideal {
        let r = &self.ring;
        let mut set = ElemSet::empty(r.size());
        for a in &self.set {
            for b in &other.set {
                set.insert(r.add(a, b));
            }
        }
        Ideal::from_set_unchecked(r, set)
    }

    /// The ideal generated by all products `ab`, built from products of
    /// generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &Ideal) -> Ideal {
        let r = &self.ring;
        let hs = other.generators();
        let gens: Vec<usize> = self
            .generators()
            .into_iter()
            .flat_map(|g| hs.iter().map(move |&h| r.mul(g, h)))
            .collect();
        Ideal::generated(r, &gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal::from_set_unchecked(&self.ring, self.set.intersection(&other.set)))
    }

    /// `(self : other) = { x : x·other ⊆ self }`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let r = &self.ring;
        let set = ElemSet::from_indices(
            r.size(),
            r.elements()
                .filter(|&x| other.elements().all(|j| self.contains(r.mul(x, j)))),
        );
        Ok(Ideal::from_set_unchecked(r, set))
    }

    pub fn power(&self, k: u32) -> Ideal {
        (0..k).fold(Ideal::whole(&self.ring), |acc, _| acc.product_unchecked(self))
    }

    /// Least `k ≥ 1` with `I^k = I^(k+1)`; every higher power equals `I^k`.
    pub fn stabilization_index(&self) -> u32 {
        let mut k = 1;
        let mut p = self.clone();
        loop {
            let next = p.product_unchecked(self);
            if next == p {
                return k;
            }
            p = next;
            k += 1;
        }
    }

    /// `{ x : x^k ∈ I for some k }`. Powers of `x` are followed until they
    /// cycle, which bounds `k` by the ring size.
    pub fn radical(&self) -> Ideal {
        let r = &self.ring;
        let mut set = ElemSet::empty(r.size());
        for x in r.elements() {
            let mut seen = ElemSet::empty(r.size());
            let mut p = x;
            while seen.insert(p) {
                if self.contains(p) {
                    set.insert(x);
                    break;
                }
                p = r.mul(p, x);
            }
        }
        Ideal::from_set_unchecked(r, set)
    }

    pub fn is_radical(&self) -> bool {
        self.radical() == *self
    }

    /// Proper, and `ab ∈ I` forces `a ∈ I` or `b ∈ I`.
    pub fn is_prime(&self) -> bool {
        let r = &self.ring;
        self.is_proper()
            && r.elements().filter(|&a| !self.contains(a)).all(|a| {
                r.elements()
                    .filter(|&b| !self.contains(b))
                    .all(|b| !self.contains(r.mul(a, b)))
            })
    }

    /// Proper, and every element outside `I` is invertible modulo `I`.
    pub fn is_maximal(&self) -> bool {
        let r = &self.ring;
        self.is_proper()
            && r.elements().filter(|&a| !self.contains(a)).all(|a| {
                r.elements()
                    .any(|b| self.contains(r.sub(r.mul(a, b), r.one())))
            })
    }

    /// Proper, and `ab ∈ I`, `a ∉ I` force `b ∈ √I`.
    pub fn is_primary(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let r = &self.ring;
        let rad = self.radical();
        r.elements().filter(|&a| !self.contains(a)).all(|a| {
            r.elements()
                .all(|b| !self.contains(r.mul(a, b)) || rad.contains(b))
        })
    }

    pub fn minimal_primes(&self) -> Vec<Ideal> {
        let primes: Vec<Ideal> = crate::lattice::all_ideals(&self.ring)
            .ideals()
            .iter()
            .filter(|p| self.is_subset(p) && p.is_prime())
            .cloned()
            .collect();
        primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
            .cloned()
            .collect()
    }

    /// Least single generator when the ideal is principal; otherwise a
    /// greedy set scanning elements in index order, keeping those not
    /// already in the span of the previous ones.
    pub fn generators(&self) -> Vec<usize> {
        if self.is_zero() {
            return Vec::new();
        }
        if let Some(g) = self.elements().find(|&x| Ideal::principal(&self.ring, x) == *self) {
            return vec![g];
        }
        let mut gens = Vec::new();
        let mut span = Ideal::zero(&self.ring);
        for x in &self.set {
            if !span.contains(x) {
                gens.push(x);
                span = span.sum_unchecked(&Ideal::principal(&self.ring, x));
                if span.set.len() == self.set.len() {
                    break;
                }
            }
        }
        gens
    }

    pub fn is_principal(&self) -> bool {
        self.elements()
            .any(|x| Ideal::principal(&self.ring, x) == *self)
    }

    /// `ideal(g1, g2, ...)` in element-label syntax; re-parseable against
    /// the owning ring.
    pub fn literal(&self) -> String {
        let gens = self.generators();
        let labels: Vec<String> = if gens.is_empty() {
            vec![self.ring.element_label(0).to_string()]
        } else {
            gens.iter().map(|&g| self.ring.element_label(g).to_string()).collect()
        };
        format!("ideal({})", labels.join(", "))
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.set == other.set
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.set.hash(state);
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.set.cmp(&other.set)
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.literal(), self.set)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn z(n: u64) -> Ring {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn products_in_z8() {
        let r = z(8);
        let two = Ideal::principal(&r, 2);
        assert_eq!(two.product(&two).unwrap(), Ideal::principal(&r, 4));
        assert_eq!(two.power(3), Ideal::zero(&r));
        assert_eq!(two.product(&Ideal::whole(&r)).unwrap(), two);
        assert_eq!(two.stabilization_index(), 3);
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = Ideal::principal(&z(8), 2);
        let b = Ideal::principal(&z(8), 2);
        assert!(matches!(a.product(&b), Err(Error::RingMismatch(..))));
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn radicals_and_primes() {
        let r = z(12);
        assert_eq!(Ideal::principal(&r, 4).radical(), Ideal::principal(&r, 2));
        assert!(!Ideal::principal(&r, 4).is_radical());
        assert!(Ideal::principal(&r, 6).is_radical());
        let r8 = z(8);
        assert!(Ideal::principal(&r8, 2).is_prime());
        assert!(!Ideal::principal(&r8, 4).is_prime());
        assert!(Ideal::principal(&r8, 4).is_primary());
        assert!(!Ideal::principal(&r, 6).is_primary());
        assert!(Ideal::principal(&r, 3).is_maximal());
        assert!(!Ideal::whole(&r).is_prime());
    }

    #[test]
    fn minimal_primes_of_zero_in_z12() {
        let r = z(12);
        let mins = Ideal::zero(&r).minimal_primes();
        assert_eq!(mins, vec![Ideal::principal(&r, 3), Ideal::principal(&r, 2)]);
    }

    #[test]
    fn colon_and_intersection() {
        let r = z(12);
        let four = Ideal::principal(&r, 4);
        let six = Ideal::principal(&r, 6);
        assert_eq!(four.intersection(&six).unwrap(), Ideal::zero(&r));
        // (4 : 2) = (2)
        assert_eq!(four.colon(&Ideal::principal(&r, 2)).unwrap(), Ideal::principal(&r, 2));
        assert_eq!(four.sum(&six).unwrap(), Ideal::principal(&r, 2));
    }

    #[test]
    fn from_elements_validates() {
        let r = z(8);
        assert!(Ideal::from_elements(&r, [0, 4]).is_ok());
        assert!(Ideal::from_elements(&r, [0, 2]).is_err());
        assert!(Ideal::from_elements(&r, [4]).is_err());
    }

    #[test]
    fn literal_uses_greedy_generators() {
        let r = z(12);
        assert_eq!(Ideal::generated(&r, &[4, 6]).literal(), "ideal(2)");
        assert_eq!(Ideal::zero(&r).literal(), "ideal(0)");
        assert_eq!(Ideal::whole(&r).literal(), "ideal(1)");
    }
}
