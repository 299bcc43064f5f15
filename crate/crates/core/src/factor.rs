//! Factorization of an ideal as an invertible ideal times a nonempty product
//! of proper radical (or prime) ideals.
//!
//! Every factor contains the product, so candidates are restricted to ideals
//! containing the target. A factor `H` never needs an exponent above its
//! stabilization index `k` (the least `k` with `H^k = H^(k+1)`), since any
//! higher power equals `H^k`; with that cap the search space is finite.
//!
//! Among all factorizations the engine returns the least one in the order
//! (number of factors, sorted factor list, invertible part), comparing ideals
//! by their canonical lattice order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::lattice::{all_ideals, IdealId, IdealLattice};

/// Which factor alphabet to search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorMode {
    /// Invertible ideal times proper radical ideals.
    InvRadical,
    /// Proper radical ideals only.
    RadicalsOnly,
    /// Prime ideals only.
    PrimesOnly,
    /// Invertible ideal times prime ideals.
    InvPrimes,
}

impl FactorMode {
    pub fn allows_invertible(self) -> bool {
        matches!(self, FactorMode::InvRadical | FactorMode::InvPrimes)
    }

    fn admits(self, lat: &IdealLattice, id: IdealId) -> bool {
        match self {
            FactorMode::InvRadical | FactorMode::RadicalsOnly => {
                lat.is_proper(id) && lat.is_radical(id)
            }
            FactorMode::PrimesOnly | FactorMode::InvPrimes => lat.is_prime(id),
        }
    }
}

/// Lattice-level result: invertible part plus sorted factor ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorIds {
    pub invertible: IdealId,
    pub parts: Vec<IdealId>,
}

impl FactorIds {
    pub fn product(&self, lat: &IdealLattice) -> IdealId {
        self.parts
            .iter()
            .fold(self.invertible, |acc, &h| lat.product(acc, h))
    }

    fn key(&self) -> (usize, &[IdealId], IdealId) {
        (self.parts.len(), &self.parts, self.invertible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub invertible: Ideal,
    pub parts: Vec<Ideal>,
}

impl Factorization {
    pub fn from_ids(lat: &IdealLattice, ids: &FactorIds) -> Self {
        Factorization {
            invertible: lat.get(ids.invertible).clone(),
            parts: ids.parts.iter().map(|&p| lat.get(p).clone()).collect(),
        }
    }

    pub fn product(&self) -> Ideal {
        self.parts
            .iter()
            .fold(self.invertible.clone(), |acc, h| acc.product_unchecked(h))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(Ideal::literal).collect();
        write!(f, "{} * [{}]", self.invertible.literal(), parts.join(", "))
    }
}

impl IdealLattice {
    /// Factor alphabet for a target: admissible ideals containing it, with
    /// their exponent caps.
    pub fn factor_alphabet(&self, target: IdealId, mode: FactorMode) -> Vec<(IdealId, u32)> {
        self.ids()
            .filter(|&h| self.le(target, h) && mode.admits(self, h))
            .map(|h| (h, self.stabilization_index(h)))
            .collect()
    }

    pub fn invertible_candidates(&self, target: IdealId, mode: FactorMode) -> Vec<IdealId> {
        if mode.allows_invertible() {
            self.ids()
                .filter(|&j| self.le(target, j) && self.is_invertible(j))
                .collect()
        } else {
            vec![self.whole()]
        }
    }

    /// Canonical least factorization of a proper ideal, if one exists.
    pub fn factor(&self, target: IdealId, mode: FactorMode) -> Option<FactorIds> {
        assert!(self.is_proper(target), "factor target must be proper");
        let alphabet = self.factor_alphabet(target, mode);
        let depth: u32 = alphabet.iter().map(|&(_, cap)| cap).sum();
        let mut best: Option<FactorIds> = None;
        for j in self.invertible_candidates(target, mode) {
            let mut search = Search {
                lat: self,
                target,
                alphabet: &alphabet,
                failed: HashSet::new(),
                path: Vec::new(),
            };
            for n in 1..=depth as usize {
                if let Some(n_best) = &best {
                    if n > n_best.parts.len() {
                        break;
                    }
                }
                if search.run(j, 0, n) {
                    let found = FactorIds {
                        invertible: j,
                        parts: search.path.clone(),
                    };
                    if best.as_ref().is_none_or(|b| found.key() < b.key()) {
                        best = Some(found);
                    }
                    break;
                }
            }
        }
        best
    }
}

struct Search<'a> {
    lat: &'a IdealLattice,
    target: IdealId,
    alphabet: &'a [(IdealId, u32)],
    /// (partial product, alphabet position, factors still to place)
    failed: HashSet<(IdealId, usize, usize)>,
    path: Vec<IdealId>,
}

impl Search<'_> {
    /// Extends `path` with exactly `remaining` factors drawn from
    /// `alphabet[pos..]` so the product reaches the target. Larger exponents
    /// of earlier ideals are tried first, which yields the lexicographically
    /// least sorted factor list.
    fn run(&mut self, partial: IdealId, pos: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return partial == self.target;
        }
        if pos == self.alphabet.len() || !self.lat.le(self.target, partial) {
            return false;
        }
        if self.failed.contains(&(partial, pos, remaining)) {
            return false;
        }
        let (h, cap) = self.alphabet[pos];
        let top = (cap as usize).min(remaining);
        let mut powers = Vec::with_capacity(top + 1);
        powers.push(partial);
        for e in 1..=top {
            powers.push(self.lat.product(powers[e - 1], h));
        }
        for e in (0..=top).rev() {
            let mark = self.path.len();
            self.path.extend(std::iter::repeat_n(h, e));
            if self.run(powers[e], pos + 1, remaining - e) {
                return true;
            }
            self.path.truncate(mark);
        }
        self.failed.insert((partial, pos, remaining));
        false
    }
}

fn factor_ideal(ideal: &Ideal, mode: FactorMode) -> Result<Option<Factorization>> {
    if !ideal.is_proper() {
        return Err(Error::NotProper(ideal.literal()));
    }
    let lat = all_ideals(ideal.ring());
    let id = lat.id_of(ideal).expect("ideal appears in its lattice");
    Ok(lat.factor(id, mode).map(|f| Factorization::from_ids(&lat, &f)))
}

/// `I = J·H1⋯Hn` with `J` invertible (possibly the whole ring), `n ≥ 1`
/// and each `Hi` proper radical.
pub fn factor_inv_radical(ideal: &Ideal, require_regular: bool) -> Result<Option<Factorization>> {
    if require_regular && !ideal.is_regular() {
        return Err(Error::Semantic(format!("{} is not a regular ideal", ideal.literal())));
    }
    factor_ideal(ideal, FactorMode::InvRadical)
}

pub fn factor_radicals_only(ideal: &Ideal) -> Result<Option<Vec<Ideal>>> {
    Ok(factor_ideal(ideal, FactorMode::RadicalsOnly)?.map(|f| f.parts))
}

pub fn factor_primes_only(ideal: &Ideal) -> Result<Option<Vec<Ideal>>> {
    Ok(factor_ideal(ideal, FactorMode::PrimesOnly)?.map(|f| f.parts))
}

pub fn factor_inv_primes(ideal: &Ideal) -> Result<Option<Factorization>> {
    factor_ideal(ideal, FactorMode::InvPrimes)
}

/// Command-line names for the factorization modes, one per ring class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMode {
    Isp,
    Strong,
    Sp,
    Ssp,
    Zpi,
    Zpui,
}

impl ClassMode {
    pub const ALL: [ClassMode; 6] = [
        ClassMode::Isp,
        ClassMode::Strong,
        ClassMode::Sp,
        ClassMode::Ssp,
        ClassMode::Zpi,
        ClassMode::Zpui,
    ];

    pub fn factor_mode(self) -> FactorMode {
        match self {
            ClassMode::Isp | ClassMode::Strong => FactorMode::InvRadical,
            ClassMode::Sp | ClassMode::Ssp => FactorMode::RadicalsOnly,
            ClassMode::Zpi => FactorMode::PrimesOnly,
            ClassMode::Zpui => FactorMode::InvPrimes,
        }
    }

    /// ISP and SP only quantify over regular ideals.
    pub fn regular_only(self) -> bool {
        matches!(self, ClassMode::Isp | ClassMode::Sp)
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassMode::Isp => "isp",
            ClassMode::Strong => "strong",
            ClassMode::Sp => "sp",
            ClassMode::Ssp => "ssp",
            ClassMode::Zpi => "zpi",
            ClassMode::Zpui => "zpui",
        }
    }
}

impl FromStr for ClassMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown factorization mode `{s}`")))
    }
}

impl fmt::Display for ClassMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
