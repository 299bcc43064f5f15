//! Finite commutative rings with identity.
//!
//! Elements are the indices `0..size`, with `0` the additive identity.
//! Structured rings (`Z/n`, products, idealizations, duplications) keep the
//! rule they were built from and materialize operation tables when small
//! enough; quotients and localizations are always table-backed.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::expr::ElemLit;
use crate::ideal::Ideal;
use crate::module::FiniteModule;

/// Shared handle to a ring. Ideals and modules keep one of these.
pub type Ring = Arc<FiniteRing>;

/// Rings at most this large get full add/mul tables.
const TABLE_LIMIT: usize = 1024;

/// How a ring was built. Doubles as the arithmetic rule for rings that are
/// not table-backed.
pub enum Construction {
    Zmod(usize),
    Product(Vec<Ring>),
    TrivExt {
        base: Ring,
        module: Arc<FiniteModule>,
    },
    /// `A ⋈ I`: element `a * |I| + k` is the pair `(a, a + ideal[k])`.
    Dup {
        base: Ring,
        ideal: Vec<usize>,
        slot: Vec<u32>,
    },
    Quotient {
        base: Ring,
        ideal: ElemSet,
    },
    Localization {
        base: Ring,
        prime: ElemSet,
    },
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::Zmod(_) => "zmod",
            Construction::Product(_) => "product",
            Construction::TrivExt { .. } => "trivext",
            Construction::Dup { .. } => "dup",
            Construction::Quotient { .. } => "quotient",
            Construction::Localization { .. } => "localization",
        }
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

pub struct FiniteRing {
    size: usize,
    one: usize,
    construction: Construction,
    tables: Option<Tables>,
    neg: Vec<u32>,
    provenance: String,
    units: OnceLock<ElemSet>,
    regular: OnceLock<ElemSet>,
    nilpotents: OnceLock<ElemSet>,
    idempotents: OnceLock<Vec<usize>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.provenance, self.size)
    }
}

impl FiniteRing {
    /// `Z/nZ`, element `i` being the residue `i`.
    pub fn zmod(n: u64) -> Result<Ring> {
        if n <= 1 {
            return Err(Error::ZeroRing(n));
        }
        let n = n as usize;
        Ok(Self::assemble(
            n,
            1,
            Construction::Zmod(n),
            None,
            format!("Zmod({n})"),
        ))
    }

    pub(crate) fn assemble(
        size: usize,
        one: usize,
        construction: Construction,
        tables: Option<(Vec<u32>, Vec<u32>)>,
        provenance: String,
    ) -> Ring {
        debug_assert!(size >= 2 && one != 0 && one < size);
        let mut ring = FiniteRing {
            size,
            one,
            construction,
            tables: tables.map(|(add, mul)| Tables { add, mul }),
            neg: Vec::new(),
            provenance,
            units: OnceLock::new(),
            regular: OnceLock::new(),
            nilpotents: OnceLock::new(),
            idempotents: OnceLock::new(),
        };
        if ring.tables.is_none() && size <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    add.push(ring.rule_add(a, b) as u32);
                    mul.push(ring.rule_mul(a, b) as u32);
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        let minus_one = (0..size)
            .find(|&x| ring.add(one, x) == 0)
            .expect("additive inverse of one");
        ring.neg = (0..size).map(|a| ring.mul(minus_one, a) as u32).collect();
        Arc::new(ring)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Construction expression; always re-parseable.
    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.add[a * self.size + b] as usize,
            None => self.rule_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.tables {
            Some(t) => t.mul[a * self.size + b] as usize,
            None => self.rule_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, k: u32) -> usize {
        (0..k).fold(self.one, |acc, _| self.mul(acc, a))
    }

    /// The image of the integer `k` under `Z -> A`.
    pub fn integer(&self, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k % self.characteristic() as u64 {
            acc = self.add(acc, self.one);
        }
        acc
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut acc = a;
        while acc != 0 {
            acc = self.add(acc, a);
            k += 1;
        }
        k
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    fn rule_add(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Zmod(n) => (a + b) % n,
            Construction::Product(parts) => {
                let (x, y) = (decode(parts, a), decode(parts, b));
                let z: Vec<usize> = parts
                    .iter()
                    .zip(x.iter().zip(&y))
                    .map(|(r, (&p, &q))| r.add(p, q))
                    .collect();
                encode(parts, &z)
            }
            Construction::TrivExt { base, module } => {
                let m = module.size();
                let (a0, e0) = (a / m, a % m);
                let (a1, e1) = (b / m, b % m);
                base.add(a0, a1) * m + module.add(e0, e1)
            }
            Construction::Dup { base, .. } => {
                let (p, q) = self.dup_pair(a);
                let (r, s) = self.dup_pair(b);
                self.dup_index(base.add(p, r), base.add(q, s))
            }
            Construction::Quotient { .. } | Construction::Localization { .. } => {
                unreachable!("table-backed ring without tables")
            }
        }
    }

    fn rule_mul(&self, a: usize, b: usize) -> usize {
        match &self.construction {
            Construction::Zmod(n) => (a * b) % n,
            Construction::Product(parts) => {
                let (x, y) = (decode(parts, a), decode(parts, b));
                let z: Vec<usize> = parts
                    .iter()
                    .zip(x.iter().zip(&y))
                    .map(|(r, (&p, &q))| r.mul(p, q))
                    .collect();
                encode(parts, &z)
            }
            Construction::TrivExt { base, module } => {
                // (a, e)(b, f) = (ab, af + be)
                let m = module.size();
                let (a0, e0) = (a / m, a % m);
                let (a1, e1) = (b / m, b % m);
                let e = module.add(module.act(a0, e1), module.act(a1, e0));
                base.mul(a0, a1) * m + e
            }
            Construction::Dup { base, .. } => {
                let (p, q) = self.dup_pair(a);
                let (r, s) = self.dup_pair(b);
                self.dup_index(base.mul(p, r), base.mul(q, s))
            }
            Construction::Quotient { .. } | Construction::Localization { .. } => {
                unreachable!("table-backed ring without tables")
            }
        }
    }

    /// Components of an element of a direct product.
    pub fn product_components(&self, a: usize) -> Option<Vec<usize>> {
        match &self.construction {
            Construction::Product(parts) => Some(decode(parts, a)),
            _ => None,
        }
    }

    /// `(a, a + i)` coordinates of an element of `A ⋈ I`.
    pub fn dup_pair(&self, x: usize) -> (usize, usize) {
        match &self.construction {
            Construction::Dup { base, ideal, .. } => {
                let k = ideal.len();
                let a = x / k;
                (a, base.add(a, ideal[x % k]))
            }
            _ => panic!("dup_pair on {}", self.provenance),
        }
    }

    /// Index of the pair `(a, b)` in `A ⋈ I`, if `b - a ∈ I`.
    pub fn try_dup_index(&self, a: usize, b: usize) -> Option<usize> {
        match &self.construction {
            Construction::Dup {
                base, ideal, slot, ..
            } => {
                let s = slot[base.sub(b, a)];
                (s != u32::MAX).then(|| a * ideal.len() + s as usize)
            }
            _ => None,
        }
    }

    fn dup_index(&self, a: usize, b: usize) -> usize {
        self.try_dup_index(a, b).expect("dup closed under ring operations")
    }

    /// `(a, e)` coordinates of an element of `A ∝ E`.
    pub fn trivext_pair(&self, x: usize) -> Option<(usize, usize)> {
        match &self.construction {
            Construction::TrivExt { module, .. } => Some((x / module.size(), x % module.size())),
            _ => None,
        }
    }

    pub fn units(&self) -> &ElemSet {
        self.units.get_or_init(|| {
            let mut s = ElemSet::empty(self.size);
            for a in self.elements() {
                if self.elements().any(|b| self.mul(a, b) == self.one) {
                    s.insert(a);
                }
            }
            s
        })
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.units().contains(a)
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.elements().find(|&b| self.mul(a, b) == self.one)
    }

    pub fn is_zero_divisor(&self, a: usize) -> bool {
        self.elements().any(|b| b != 0 && self.mul(a, b) == 0)
    }

    /// Complement of the zero-divisor set `Z(A)`.
    pub fn regular_elements(&self) -> &ElemSet {
        self.regular.get_or_init(|| {
            ElemSet::from_indices(
                self.size,
                self.elements().filter(|&a| !self.is_zero_divisor(a)),
            )
        })
    }

    pub fn is_regular(&self, a: usize) -> bool {
        self.regular_elements().contains(a)
    }

    pub fn idempotents(&self) -> &[usize] {
        self.idempotents
            .get_or_init(|| self.elements().filter(|&a| self.mul(a, a) == a).collect())
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.nilpotents().contains(a)
    }

    pub fn nilpotents(&self) -> &ElemSet {
        self.nilpotents.get_or_init(|| {
            let mut s = ElemSet::empty(self.size);
            for a in self.elements() {
                let mut x = a;
                // x^(2^k) reaches 0 within log2(size) + 1 squarings when nilpotent
                for _ in 0..=usize::BITS - self.size.leading_zeros() {
                    x = self.mul(x, x);
                }
                if x == 0 {
                    s.insert(a);
                }
            }
            s
        })
    }

    pub fn is_reduced(&self) -> bool {
        self.nilpotents().len() == 1
    }

    pub fn is_field(&self) -> bool {
        self.units().len() == self.size - 1
    }

    /// A finite ring is a domain exactly when it is a field.
    pub fn is_domain(&self) -> bool {
        self.elements()
            .filter(|&a| a != 0)
            .all(|a| !self.is_zero_divisor(a))
    }

    /// Total quotient ring: every regular element is a unit.
    pub fn is_total_quotient(&self) -> bool {
        self.regular_elements().is_subset(self.units())
    }

    /// In a local ring the non-units are closed under addition and form the
    /// unique maximal ideal.
    pub fn maximal_if_local(self: &Ring) -> Option<Ideal> {
        let nonunits = self.units().complement();
        let closed = nonunits
            .iter()
            .all(|a| nonunits.iter().all(|b| nonunits.contains(self.add(a, b))));
        closed.then(|| Ideal::from_set_unchecked(self, nonunits))
    }

    pub fn is_local(self: &Ring) -> bool {
        self.maximal_if_local().is_some()
    }

    pub fn nilradical(self: &Ring) -> Ideal {
        Ideal::from_set_unchecked(self, self.nilpotents().clone())
    }

    /// Human-facing coordinates of an element, in the expression syntax.
    pub fn element_label(&self, x: usize) -> ElemLit {
        match &self.construction {
            Construction::Zmod(_) | Construction::Quotient { .. } | Construction::Localization { .. } => {
                ElemLit::Int(x as u64)
            }
            Construction::Product(parts) => ElemLit::Tuple(
                parts
                    .iter()
                    .zip(decode(parts, x))
                    .map(|(r, c)| r.element_label(c))
                    .collect(),
            ),
            Construction::TrivExt { base, module } => {
                let (a, e) = (x / module.size(), x % module.size());
                ElemLit::Tuple(vec![base.element_label(a), module.element_label(e)])
            }
            Construction::Dup { base, .. } => {
                let (a, b) = self.dup_pair(x);
                ElemLit::Tuple(vec![base.element_label(a), base.element_label(b)])
            }
        }
    }

    pub fn parse_element(&self, lit: &ElemLit) -> Result<usize> {
        let bad = |reason: &str| Error::BadElement {
            literal: lit.to_string(),
            ring: self.provenance.clone(),
            reason: reason.to_string(),
        };
        match (&self.construction, lit) {
            (Construction::Zmod(n), ElemLit::Int(k)) => Ok((*k % *n as u64) as usize),
            (Construction::Quotient { .. } | Construction::Localization { .. }, ElemLit::Int(k)) => {
                if (*k as usize) < self.size {
                    Ok(*k as usize)
                } else {
                    Err(bad("index out of range"))
                }
            }
            (Construction::Product(parts), ElemLit::Tuple(items)) => {
                if items.len() != parts.len() {
                    return Err(bad("wrong number of components"));
                }
                let comps = parts
                    .iter()
                    .zip(items)
                    .map(|(r, l)| r.parse_element(l))
                    .collect::<Result<Vec<_>>>()?;
                Ok(encode(parts, &comps))
            }
            (Construction::TrivExt { base, module }, ElemLit::Tuple(items)) if items.len() == 2 => {
                let a = base.parse_element(&items[0])?;
                let e = module.parse_element(&items[1])?;
                Ok(a * module.size() + e)
            }
            (Construction::Dup { base, .. }, ElemLit::Tuple(items)) if items.len() == 2 => {
                let a = base.parse_element(&items[0])?;
                let b = base.parse_element(&items[1])?;
                self.try_dup_index(a, b)
                    .ok_or_else(|| bad("second coordinate minus first is not in the ideal"))
            }
            (Construction::TrivExt { .. } | Construction::Dup { .. }, _) => {
                Err(bad("expected a pair"))
            }
            (Construction::Product(_), _) => Err(bad("expected a tuple")),
            _ => Err(bad("expected an integer")),
        }
    }

    /// Exhaustive check of the commutative ring axioms. Cubic in the size.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.size;
        for a in 0..n {
            if self.add(a, 0) != a {
                return Err(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, self.one) != a {
                return Err(format!("{a} * 1 != {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(format!("{a} + (-{a}) != 0"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("addition not commutative at ({a}, {b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("multiplication not commutative at ({a}, {b})"));
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("addition not associative at ({a}, {b}, {c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("multiplication not associative at ({a}, {b}, {c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        if self.one == 0 {
            return Err("1 = 0".into());
        }
        Ok(())
    }
}

/// Mixed-radix encoding, first component most significant.
pub(crate) fn encode(parts: &[Ring], comps: &[usize]) -> usize {
    parts
        .iter()
        .zip(comps)
        .fold(0, |acc, (r, &c)| acc * r.size() + c)
}

pub(crate) fn decode(parts: &[Ring], mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; parts.len()];
    for (slot, r) in out.iter_mut().zip(parts).rev() {
        *slot = idx % r.size();
        idx /= r.size();
    }
    out
}

/// `A / I` together with the projection `A -> A / I`.
pub struct Quotient {
    pub ring: Ring,
    pub projection: Vec<usize>,
}

/// Cosets are indexed in order of their least representative.
pub fn quotient(ideal: &Ideal) -> Result<Quotient> {
    if !ideal.is_proper() {
        return Err(Error::NotProper(ideal.literal()));
    }
    let base = ideal.ring();
    let n = base.size();
    let mut projection = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for i in ideal.elements() {
            projection[base.add(x, i)] = c;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(projection[base.add(a, b)] as u32);
            mul.push(projection[base.mul(a, b)] as u32);
        }
    }
    let ring = FiniteRing::assemble(
        m,
        projection[base.one()],
        Construction::Quotient {
            base: base.clone(),
            ideal: ideal.set().clone(),
        },
        Some((add, mul)),
        format!("quot({}, {})", base.provenance(), ideal.literal()),
    );
    Ok(Quotient { ring, projection })
}

/// The fraction ring `A_S` for `S = A \ P`, with the canonical map `A -> A_S`.
pub struct Localization {
    pub ring: Ring,
    /// `a ↦ a/1`.
    pub map: Vec<usize>,
    base: Ring,
    /// `K = { x : u x = 0 for some u ∈ S }`.
    kernel: ElemSet,
    denominators: ElemSet,
}

impl Localization {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn denominators(&self) -> &ElemSet {
        &self.denominators
    }

    /// The class of the fraction `a/s`, found as the least `b` with
    /// `(a, s) ~ (b, 1)`, i.e. `u (a - b s) = 0` for some `u ∈ S`.
    pub fn class_of_pair(&self, a: usize, s: usize) -> usize {
        assert!(self.denominators.contains(s), "denominator {s} lies in the prime");
        let b = self
            .base
            .elements()
            .find(|&b| self.kernel.contains(self.base.sub(a, self.base.mul(b, s))))
            .expect("every fraction over a finite ring has a representative over 1");
        self.map[b]
    }

    /// Image `I A_P` of an ideal of the base ring.
    pub fn extend(&self, ideal: &Ideal) -> Ideal {
        let gens: Vec<usize> = ideal.elements().map(|x| self.map[x]).collect();
        Ideal::generated(&self.ring, &gens)
    }
}

pub fn localize_at_prime(prime: &Ideal) -> Result<Localization> {
    if !prime.is_prime() {
        return Err(Error::NotPrime(prime.literal()));
    }
    let base = prime.ring().clone();
    let n = base.size();
    let denominators = prime.set().complement();
    let kernel = ElemSet::from_indices(
        n,
        base.elements()
            .filter(|&x| denominators.iter().any(|u| base.mul(u, x) == 0)),
    );
    // (a,1) ~ (b,1) iff u (a - b) = 0 for some u ∈ S, i.e. a - b ∈ K
    let mut map = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if map[a] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(a);
        for k in &kernel {
            map[base.add(a, k)] = c;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(map[base.add(a, b)] as u32);
            mul.push(map[base.mul(a, b)] as u32);
        }
    }
    let ring = FiniteRing::assemble(
        m,
        map[base.one()],
        Construction::Localization {
            base: base.clone(),
            prime: prime.set().clone(),
        },
        Some((add, mul)),
        format!("loc({}, {})", base.provenance(), prime.literal()),
    );
    Ok(Localization {
        ring,
        map,
        base,
        kernel,
        denominators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_arithmetic() {
        let r = FiniteRing::zmod(8).unwrap();
        assert_eq!(r.size(), 8);
        assert_eq!(r.add(1, 7), 0);
        assert_eq!(r.mul(3, 3), 1);
        assert_eq!(r.neg(3), 5);
        assert_eq!(r.characteristic(), 8);
        assert!(r.check_axioms().is_ok());
    }

    #[test]
    fn zmod_rejects_zero_ring() {
        assert_eq!(FiniteRing::zmod(1).unwrap_err(), Error::ZeroRing(1));
        assert!(FiniteRing::zmod(0).is_err());
        assert!(FiniteRing::zmod(2).unwrap().is_field());
    }

    #[test]
    fn units_and_regular_elements() {
        let z8 = FiniteRing::zmod(8).unwrap();
        assert_eq!(z8.units().to_vec(), vec![1, 3, 5, 7]);
        assert_eq!(z8.regular_elements().to_vec(), vec![1, 3, 5, 7]);
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(z6.units().to_vec(), vec![1, 5]);
        assert_eq!(z6.regular_elements().to_vec(), vec![1, 5]);
        let f2 = FiniteRing::zmod(2).unwrap();
        assert_eq!(f2.units().to_vec(), vec![1]);
    }

    #[test]
    fn idempotents_nilradical_locality() {
        let z6 = FiniteRing::zmod(6).unwrap();
        assert_eq!(z6.idempotents(), &[0, 1, 3, 4]);
        assert!(z6.is_reduced());
        assert!(!z6.is_local());
        let z12 = FiniteRing::zmod(12).unwrap();
        assert_eq!(z12.nilradical().set().to_vec(), vec![0, 6]);
        let z8 = FiniteRing::zmod(8).unwrap();
        let m = z8.maximal_if_local().unwrap();
        assert_eq!(m, Ideal::principal(&z8, 2));
        assert!(!z8.is_reduced());
        assert!(!z8.is_field());
    }

    #[test]
    fn quotient_of_z12_by_4_is_z4() {
        let z12 = FiniteRing::zmod(12).unwrap();
        let i = Ideal::principal(&z12, 4);
        let q = quotient(&i).unwrap();
        assert_eq!(q.ring.size(), 4);
        assert_eq!(q.ring.size() * i.len(), z12.size());
        assert_eq!(q.ring.characteristic(), 4);
        assert!(q.ring.check_axioms().is_ok());
        for a in 0..12 {
            for b in 0..12 {
                assert_eq!(q.projection[z12.mul(a, b)], q.ring.mul(q.projection[a], q.projection[b]));
                assert_eq!(q.projection[z12.add(a, b)], q.ring.add(q.projection[a], q.projection[b]));
            }
        }
        let kernel: Vec<usize> = (0..12).filter(|&a| q.projection[a] == 0).collect();
        assert_eq!(kernel, i.set().to_vec());
        assert_eq!(q.ring.provenance(), "quot(Zmod(12), ideal(4))");
    }

    #[test]
    fn quotient_of_z8_by_2_is_f2() {
        let z8 = FiniteRing::zmod(8).unwrap();
        let q = quotient(&Ideal::principal(&z8, 2)).unwrap();
        assert_eq!(q.ring.size(), 2);
        assert!(q.ring.is_field());
    }

    #[test]
    fn quotient_by_whole_ring_rejected() {
        let z8 = FiniteRing::zmod(8).unwrap();
        assert!(matches!(quotient(&Ideal::whole(&z8)), Err(Error::NotProper(_))));
    }

    #[test]
    fn localization_rejects_non_prime() {
        let z12 = FiniteRing::zmod(12).unwrap();
        assert!(matches!(
            localize_at_prime(&Ideal::principal(&z12, 4)),
            Err(Error::NotPrime(_))
        ));
    }

    #[test]
    fn localization_pairs_agree_with_canonical_map() {
        let z12 = FiniteRing::zmod(12).unwrap();
        let loc = localize_at_prime(&Ideal::principal(&z12, 2)).unwrap();
        assert_eq!(loc.ring.size(), 4);
        for s in loc.denominators().iter() {
            let inv_s = loc.ring.inverse(loc.map[s]).expect("denominators become units");
            for a in 0..12 {
                assert_eq!(loc.class_of_pair(a, s), loc.ring.mul(loc.map[a], inv_s));
            }
        }
    }

    #[test]
    fn local_ring_localizes_to_itself() {
        let z9 = FiniteRing::zmod(9).unwrap();
        let m = z9.maximal_if_local().unwrap();
        let loc = localize_at_prime(&m).unwrap();
        assert_eq!(loc.ring.size(), 9);
        assert_eq!(loc.map, (0..9).collect::<Vec<_>>());
    }
}
