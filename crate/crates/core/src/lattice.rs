//! The full ideal lattice of a finite ring, with memoized sums and products.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::bitset::ElemSet;
use crate::ideal::Ideal;
use crate::ring::{localize_at_prime, Localization, Ring};

/// Position of an ideal in the canonical (size, encoding) order.
pub type IdealId = usize;

pub struct IdealLattice {
    ring: Ring,
    ideals: Vec<Ideal>,
    index: HashMap<ElemSet, IdealId>,
    gens: Vec<Vec<usize>>,
    radical: Vec<bool>,
    prime: Vec<bool>,
    maximal: Vec<bool>,
    regular: Vec<bool>,
    products: Vec<OnceLock<IdealId>>,
    sums: Vec<OnceLock<IdealId>>,
    invertible: OnceLock<Vec<bool>>,
    localizations: OnceLock<Vec<(IdealId, Localization)>>,
}

/// Every ideal exactly once: principal ideals closed under pairwise sums.
pub fn all_ideals(ring: &Ring) -> IdealLattice {
    let mut principals: Vec<Ideal> = Vec::new();
    let mut seen = HashSet::new();
    for a in ring.elements() {
        let p = Ideal::principal(ring, a);
        if seen.insert(p.set().clone()) {
            principals.push(p);
        }
    }
    let mut found: HashSet<ElemSet> = principals.iter().map(|p| p.set().clone()).collect();
    let mut all = principals.clone();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for p in &principals {
                if p.is_subset(x) || x.is_subset(p) {
                    continue;
                }
                let s = x.sum_unchecked(p);
                if found.insert(s.set().clone()) {
                    next.push(s.clone());
                    all.push(s);
                }
            }
        }
        frontier = next;
    }
    all.sort();
    IdealLattice::from_sorted(ring, all)
}

impl IdealLattice {
    fn from_sorted(ring: &Ring, ideals: Vec<Ideal>) -> Self {
        let k = ideals.len();
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, x)| (x.set().clone(), i))
            .collect();
        let gens = ideals.iter().map(Ideal::generators).collect();
        let radical = ideals.iter().map(Ideal::is_radical).collect();
        let prime: Vec<bool> = ideals.iter().map(Ideal::is_prime).collect();
        let maximal = (0..k)
            .map(|i| {
                ideals[i].is_proper()
                    && !ideals
                        .iter()
                        .any(|y| y.is_proper() && y.len() > ideals[i].len() && ideals[i].is_subset(y))
            })
            .collect();
        let regular = ideals.iter().map(Ideal::is_regular).collect();
        IdealLattice {
            ring: ring.clone(),
            ideals,
            index,
            gens,
            radical,
            prime,
            maximal,
            regular,
            products: (0..k * k).map(|_| OnceLock::new()).collect(),
            sums: (0..k * k).map(|_| OnceLock::new()).collect(),
            invertible: OnceLock::new(),
            localizations: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, id: IdealId) -> &Ideal {
        &self.ideals[id]
    }

    pub fn ids(&self) -> std::ops::Range<IdealId> {
        0..self.ideals.len()
    }

    pub fn id_of(&self, ideal: &Ideal) -> Option<IdealId> {
        self.id_of_set(ideal.set())
    }

    pub fn id_of_set(&self, set: &ElemSet) -> Option<IdealId> {
        self.index.get(set).copied()
    }

    pub fn zero(&self) -> IdealId {
        0
    }

    pub fn whole(&self) -> IdealId {
        self.ideals.len() - 1
    }

    pub fn is_proper(&self, id: IdealId) -> bool {
        id != self.whole()
    }

    /// `a ⊆ b`.
    pub fn le(&self, a: IdealId, b: IdealId) -> bool {
        self.ideals[a].is_subset(&self.ideals[b])
    }

    pub fn is_radical(&self, id: IdealId) -> bool {
        self.radical[id]
    }

    pub fn is_prime(&self, id: IdealId) -> bool {
        self.prime[id]
    }

    pub fn is_maximal(&self, id: IdealId) -> bool {
        self.maximal[id]
    }

    pub fn is_regular(&self, id: IdealId) -> bool {
        self.regular[id]
    }

    pub fn primes(&self) -> Vec<IdealId> {
        self.ids().filter(|&i| self.prime[i]).collect()
    }

    pub fn maximals(&self) -> Vec<IdealId> {
        self.ids().filter(|&i| self.maximal[i]).collect()
    }

    pub fn proper_ideals(&self) -> std::ops::Range<IdealId> {
        0..self.whole()
    }

    pub fn product(&self, a: IdealId, b: IdealId) -> IdealId {
        let (a, b) = (a.min(b), a.max(b));
        *self.products[a * self.len() + b].get_or_init(|| {
            let r = &self.ring;
            let gens: Vec<usize> = self.gens[a]
                .iter()
                .flat_map(|&g| self.gens[b].iter().map(move |&h| r.mul(g, h)))
                .collect();
            self.id_of(&Ideal::generated(r, &gens))
                .expect("lattice closed under products")
        })
    }

    pub fn sum(&self, a: IdealId, b: IdealId) -> IdealId {
        let (a, b) = (a.min(b), a.max(b));
        *self.sums[a * self.len() + b].get_or_init(|| {
            self.id_of(&self.ideals[a].sum_unchecked(&self.ideals[b]))
                .expect("lattice closed under sums")
        })
    }

    pub fn intersection(&self, a: IdealId, b: IdealId) -> IdealId {
        self.id_of_set(&self.ideals[a].set().intersection(self.ideals[b].set()))
            .expect("lattice closed under intersections")
    }

    pub fn radical_of(&self, a: IdealId) -> IdealId {
        self.id_of(&self.ideals[a].radical())
            .expect("lattice closed under radicals")
    }

    pub fn power(&self, a: IdealId, k: u32) -> IdealId {
        (0..k).fold(self.whole(), |acc, _| self.product(acc, a))
    }

    /// Least `k ≥ 1` with `a^k = a^(k+1)`.
    pub fn stabilization_index(&self, a: IdealId) -> u32 {
        let mut k = 1;
        let mut p = a;
        loop {
            let next = self.product(p, a);
            if next == p {
                return k;
            }
            p = next;
            k += 1;
        }
    }

    pub fn minimal_primes(&self, a: IdealId) -> Vec<IdealId> {
        let above: Vec<IdealId> = self
            .primes()
            .into_iter()
            .filter(|&p| self.le(a, p))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&p| !above.iter().any(|&q| q != p && self.le(q, p)))
            .collect()
    }

    /// Localizations at every maximal ideal, in canonical order.
    pub fn localizations(&self) -> &[(IdealId, Localization)] {
        self.localizations.get_or_init(|| {
            self.maximals()
                .into_iter()
                .map(|m| {
                    let loc = localize_at_prime(&self.ideals[m]).expect("maximal ideals are prime");
                    (m, loc)
                })
                .collect()
        })
    }

    /// Regular, and principal after localizing at each maximal ideal.
    /// Finite generation is automatic here.
    pub fn is_invertible(&self, id: IdealId) -> bool {
        self.invertible.get_or_init(|| {
            self.ids()
                .map(|i| {
                    self.regular[i]
                        && self
                            .localizations()
                            .iter()
                            .all(|(_, loc)| loc.extend(&self.ideals[i]).is_principal())
                })
                .collect()
        })[id]
    }

    pub fn invertibles(&self) -> Vec<IdealId> {
        self.ids().filter(|&i| self.is_invertible(i)).collect()
    }

    /// Whether every ideal `K ⊆ I` equals `J·I` for some `J`. On success
    /// returns the `(K, J)` witnesses (least `J` in canonical order); on
    /// failure the first `K` without one.
    pub fn multiplication_witnesses(&self, i: IdealId) -> Result<Vec<(IdealId, IdealId)>, IdealId> {
        let mut out = Vec::new();
        for k in self.ids().filter(|&k| self.le(k, i)) {
            match self.ids().find(|&j| self.product(j, i) == k) {
                Some(j) => out.push((k, j)),
                None => return Err(k),
            }
        }
        Ok(out)
    }

    pub fn is_multiplication_ideal(&self, i: IdealId) -> bool {
        self.multiplication_witnesses(i).is_ok()
    }
}

/// Regular and locally principal at each maximal ideal.
pub fn is_invertible(ideal: &Ideal) -> bool {
    if !ideal.is_regular() {
        return false;
    }
    let lattice = all_ideals(ideal.ring());
    let id = lattice.id_of(ideal).expect("ideal appears in its lattice");
    lattice.is_invertible(id)
}

pub fn is_multiplication_ideal(ideal: &Ideal) -> bool {
    let lattice = all_ideals(ideal.ring());
    let id = lattice.id_of(ideal).expect("ideal appears in its lattice");
    lattice.is_multiplication_ideal(id)
}
