//! Finite modules over finite rings and their submodule lattices.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::expr::ElemLit;
use crate::ideal::Ideal;
use crate::lattice::all_ideals;
use crate::ring::{localize_at_prime, Localization, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleShape {
    /// `Z/d1 ⊕ ... ⊕ Z/dk`, first summand most significant in the index.
    Cyclic(Vec<usize>),
    /// The ring acting on itself.
    Regular,
    /// An ideal of the ring; element `k` is the `k`-th smallest ideal element.
    Ideal(Vec<usize>),
    Localized,
}

pub struct FiniteModule {
    ring: Ring,
    size: usize,
    add: Vec<u32>,
    act: Vec<u32>,
    neg: Vec<u32>,
    shape: ModuleShape,
    provenance: String,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteModule({} over {}, size {})",
            self.provenance,
            self.ring.provenance(),
            self.size
        )
    }
}

impl FiniteModule {
    fn assemble(ring: &Ring, size: usize, add: Vec<u32>, act: Vec<u32>, shape: ModuleShape, provenance: String) -> Arc<FiniteModule> {
        let neg = (0..size)
            .map(|e| {
                (0..size)
                    .find(|&f| add[e * size + f] == 0)
                    .expect("additive inverse in module") as u32
            })
            .collect();
        Arc::new(FiniteModule {
            ring: ring.clone(),
            size,
            add,
            act,
            neg,
            shape,
            provenance,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn shape(&self) -> &ModuleShape {
        &self.shape
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, e: usize, f: usize) -> usize {
        self.add[e * self.size + f] as usize
    }

    #[inline]
    pub fn neg(&self, e: usize) -> usize {
        self.neg[e] as usize
    }

    #[inline]
    pub fn sub(&self, e: usize, f: usize) -> usize {
        self.add(e, self.neg(f))
    }

    /// Scalar action `a·e`.
    #[inline]
    pub fn act(&self, a: usize, e: usize) -> usize {
        self.act[a * self.size + e] as usize
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn element_label(&self, e: usize) -> ElemLit {
        match &self.shape {
            ModuleShape::Cyclic(orders) if orders.len() > 1 => {
                let mut comps = vec![0; orders.len()];
                let mut x = e;
                for (slot, &d) in comps.iter_mut().zip(orders).rev() {
                    *slot = x % d;
                    x /= d;
                }
                ElemLit::Tuple(comps.into_iter().map(|c| ElemLit::Int(c as u64)).collect())
            }
            _ => ElemLit::Int(e as u64),
        }
    }

    pub fn parse_element(&self, lit: &ElemLit) -> Result<usize> {
        let bad = |reason: &str| Error::BadElement {
            literal: lit.to_string(),
            ring: self.provenance.clone(),
            reason: reason.to_string(),
        };
        match (&self.shape, lit) {
            (ModuleShape::Cyclic(orders), ElemLit::Int(k)) if orders.len() == 1 => {
                Ok((*k % orders[0] as u64) as usize)
            }
            (ModuleShape::Cyclic(orders), ElemLit::Tuple(items)) if orders.len() > 1 => {
                if items.len() != orders.len() {
                    return Err(bad("wrong number of components"));
                }
                let mut idx = 0;
                for (item, &d) in items.iter().zip(orders) {
                    match item {
                        ElemLit::Int(k) => idx = idx * d + (*k % d as u64) as usize,
                        ElemLit::Tuple(_) => return Err(bad("expected integer components")),
                    }
                }
                Ok(idx)
            }
            (ModuleShape::Cyclic(_), _) => Err(bad("shape does not match the module")),
            (_, ElemLit::Int(k)) if (*k as usize) < self.size => Ok(*k as usize),
            _ => Err(bad("expected an element index")),
        }
    }

    /// Exhaustive check that `(E, +)` is an abelian group and the action is
    /// bilinear, associative and unital.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let r = &self.ring;
        for e in self.elements() {
            if self.add(e, 0) != e || self.act(r.one(), e) != e {
                return Err(format!("identity fails at {e}"));
            }
            for f in self.elements() {
                if self.add(e, f) != self.add(f, e) {
                    return Err(format!("addition not commutative at ({e}, {f})"));
                }
                for g in self.elements() {
                    if self.add(self.add(e, f), g) != self.add(e, self.add(f, g)) {
                        return Err(format!("addition not associative at ({e}, {f}, {g})"));
                    }
                }
                for a in r.elements() {
                    if self.act(a, self.add(e, f)) != self.add(self.act(a, e), self.act(a, f)) {
                        return Err(format!("a(e+f) != ae+af at a={a}, e={e}, f={f}"));
                    }
                }
            }
            for a in r.elements() {
                for b in r.elements() {
                    if self.act(r.add(a, b), e) != self.add(self.act(a, e), self.act(b, e)) {
                        return Err(format!("(a+b)e != ae+be at a={a}, b={b}, e={e}"));
                    }
                    if self.act(r.mul(a, b), e) != self.act(a, self.act(b, e)) {
                        return Err(format!("(ab)e != a(be) at a={a}, b={b}, e={e}"));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z(E)`: ring elements killing some nonzero element.
    pub fn zero_divisors(&self) -> ElemSet {
        ElemSet::from_indices(
            self.ring.size(),
            self.ring
                .elements()
                .filter(|&a| self.elements().any(|e| e != 0 && self.act(a, e) == 0)),
        )
    }
}

/// `Z/d1 ⊕ ... ⊕ Z/dk` over a cyclic ring `Z/c`, acting by reduction. Each
/// `di` must divide `c`.
pub fn make_module(ring: &Ring, orders: &[u64]) -> Result<Arc<FiniteModule>> {
    let c = ring.characteristic();
    let order_err = |order: u64, reason: String| Error::ModuleOrder {
        order,
        ring: ring.provenance().to_string(),
        reason,
    };
    if orders.is_empty() {
        return Err(Error::Semantic("a module needs at least one cyclic summand".into()));
    }
    if c != ring.size() {
        return Err(order_err(
            orders[0],
            format!("the ring is not cyclic (characteristic {c}, size {})", ring.size()),
        ));
    }
    for &d in orders {
        if d == 0 || !(c as u64).is_multiple_of(d) {
            return Err(order_err(d, format!("{d} does not divide the additive exponent {c}")));
        }
    }
    let orders: Vec<usize> = orders.iter().map(|&d| d as usize).collect();
    let size: usize = orders.iter().product();
    // ring element -> integer it represents
    let mut as_int = vec![0usize; ring.size()];
    for k in 0..c {
        as_int[ring.integer(k as u64)] = k;
    }
    let decode = |mut x: usize| {
        let mut comps = vec![0; orders.len()];
        for (slot, &d) in comps.iter_mut().zip(&orders).rev() {
            *slot = x % d;
            x /= d;
        }
        comps
    };
    let encode = |comps: &[usize]| comps.iter().zip(&orders).fold(0, |acc, (&c, &d)| acc * d + c);
    let mut add = Vec::with_capacity(size * size);
    for e in 0..size {
        let x = decode(e);
        for f in 0..size {
            let y = decode(f);
            let z: Vec<usize> = x
                .iter()
                .zip(&y)
                .zip(&orders)
                .map(|((a, b), d)| (a + b) % d)
                .collect();
            add.push(encode(&z) as u32);
        }
    }
    let mut act = Vec::with_capacity(ring.size() * size);
    for a in ring.elements() {
        let k = as_int[a];
        for e in 0..size {
            let z: Vec<usize> = decode(e)
                .iter()
                .zip(&orders)
                .map(|(x, d)| (k * x) % d)
                .collect();
            act.push(encode(&z) as u32);
        }
    }
    let labels: Vec<String> = orders.iter().map(|d| d.to_string()).collect();
    Ok(FiniteModule::assemble(
        ring,
        size,
        add,
        act,
        ModuleShape::Cyclic(orders),
        format!("mod({})", labels.join(", ")),
    ))
}

/// The ring as a module over itself.
pub fn regular_module(ring: &Ring) -> Arc<FiniteModule> {
    let n = ring.size();
    let mut add = Vec::with_capacity(n * n);
    let mut act = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(ring.add(a, b) as u32);
            act.push(ring.mul(a, b) as u32);
        }
    }
    FiniteModule::assemble(ring, n, add, act, ModuleShape::Regular, "regular".into())
}

/// An ideal viewed as a module over its ring.
pub fn ideal_module(ideal: &Ideal) -> Arc<FiniteModule> {
    let ring = ideal.ring();
    let elems: Vec<usize> = ideal.elements().collect();
    let mut pos = vec![u32::MAX; ring.size()];
    for (k, &x) in elems.iter().enumerate() {
        pos[x] = k as u32;
    }
    let m = elems.len();
    let mut add = Vec::with_capacity(m * m);
    for &x in &elems {
        for &y in &elems {
            add.push(pos[ring.add(x, y)]);
        }
    }
    let mut act = Vec::with_capacity(ring.size() * m);
    for a in ring.elements() {
        for &x in &elems {
            act.push(pos[ring.mul(a, x)]);
        }
    }
    FiniteModule::assemble(ring, m, add, act, ModuleShape::Ideal(elems), ideal.literal())
}

#[derive(Clone)]
pub struct Submodule {
    module: Arc<FiniteModule>,
    set: ElemSet,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.module, &other.module) && self.set == other.set
    }
}

impl Eq for Submodule {}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{:?}", self.set)
    }
}

impl Submodule {
    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: usize) -> bool {
        self.set.contains(e)
    }

    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.set.len() == self.module.size()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn zero(module: &Arc<FiniteModule>) -> Submodule {
        Submodule {
            module: module.clone(),
            set: ElemSet::from_indices(module.size(), [0]),
        }
    }

    pub fn whole(module: &Arc<FiniteModule>) -> Submodule {
        Submodule {
            module: module.clone(),
            set: ElemSet::full(module.size()),
        }
    }

    /// `Ae`.
    pub fn cyclic(module: &Arc<FiniteModule>, e: usize) -> Submodule {
        let set = ElemSet::from_indices(
            module.size(),
            module.ring().elements().map(|a| module.act(a, e)),
        );
        Submodule {
            module: module.clone(),
            set,
        }
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let m = &self.module;
        let mut set = ElemSet::empty(m.size());
        for e in &self.set {
            for f in &other.set {
                set.insert(m.add(e, f));
            }
        }
        Submodule {
            module: m.clone(),
            set,
        }
    }

    pub fn generated(module: &Arc<FiniteModule>, gens: &[usize]) -> Submodule {
        gens.iter().fold(Submodule::zero(module), |acc, &g| {
            if acc.contains(g) {
                acc
            } else {
                acc.sum(&Submodule::cyclic(module, g))
            }
        })
    }

    /// Validates closure under addition and the scalar action.
    pub fn from_elements<I: IntoIterator<Item = usize>>(module: &Arc<FiniteModule>, elems: I) -> Result<Submodule> {
        let set = ElemSet::from_indices(module.size(), elems);
        let closed = set.contains(0)
            && set.iter().all(|e| {
                set.iter().all(|f| set.contains(module.add(e, f)))
                    && module.ring().elements().all(|a| set.contains(module.act(a, e)))
            });
        if !closed {
            return Err(Error::Semantic(format!("{set:?} is not a submodule")));
        }
        Ok(Submodule {
            module: module.clone(),
            set,
        })
    }
}

/// `I·V`, the submodule generated by all `a v`.
pub fn ideal_times(ideal: &Ideal, sub: &Submodule) -> Submodule {
    let m = sub.module();
    let gens: Vec<usize> = ideal
        .generators()
        .into_iter()
        .flat_map(|a| sub.set().iter().map(move |v| m.act(a, v)))
        .collect();
    Submodule::generated(m, &gens)
}

/// Every submodule exactly once, in canonical (size, encoding) order:
/// cyclic submodules closed under pairwise sums.
pub fn submodules(module: &Arc<FiniteModule>) -> Vec<Submodule> {
    let mut cyclic = Vec::new();
    let mut seen = HashSet::new();
    for e in module.elements() {
        let c = Submodule::cyclic(module, e);
        if seen.insert(c.set.clone()) {
            cyclic.push(c);
        }
    }
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for c in &cyclic {
                if c.is_subset(x) {
                    continue;
                }
                let s = x.sum(c);
                if seen.insert(s.set.clone()) {
                    next.push(s.clone());
                    all.push(s);
                }
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.set.cmp(&b.set));
    all
}

/// Nonzero with no submodules besides `0` and itself.
pub fn is_simple(module: &Arc<FiniteModule>) -> bool {
    !module.is_zero() && submodules(module).len() == 2
}

/// `E = aE` for every regular `a`.
pub fn is_divisible(module: &Arc<FiniteModule>) -> bool {
    let whole = Submodule::whole(module);
    module.ring().regular_elements().iter().all(|a| {
        let ae = Submodule::generated(module, &module.elements().map(|e| module.act(a, e)).collect::<Vec<_>>());
        ae == whole
    })
}

pub fn annihilator(module: &Arc<FiniteModule>) -> Ideal {
    let r = module.ring();
    let set = ElemSet::from_indices(
        r.size(),
        r.elements()
            .filter(|&a| module.elements().all(|e| module.act(a, e) == 0)),
    );
    Ideal::from_elements(r, set.iter()).expect("annihilator is an ideal")
}

/// For each submodule `V`, the least ideal `I` (canonical order) with
/// `IE = V`; or the first submodule without one.
pub fn multiplication_witnesses(module: &Arc<FiniteModule>) -> std::result::Result<Vec<(Submodule, Ideal)>, Submodule> {
    let lattice = all_ideals(module.ring());
    let whole = Submodule::whole(module);
    let products: Vec<Submodule> = lattice
        .ideals()
        .iter()
        .map(|i| ideal_times(i, &whole))
        .collect();
    let mut out = Vec::new();
    for v in submodules(module) {
        match products.iter().position(|p| *p == v) {
            Some(k) => out.push((v, lattice.get(k).clone())),
            None => return Err(v),
        }
    }
    Ok(out)
}

/// Every submodule has the form `IE`.
pub fn is_multiplication_module(module: &Arc<FiniteModule>) -> bool {
    multiplication_witnesses(module).is_ok()
}

/// Primes containing the annihilator.
pub fn support(module: &Arc<FiniteModule>) -> Vec<Ideal> {
    let ann = annihilator(module);
    all_ideals(module.ring())
        .ideals()
        .iter()
        .filter(|p| p.is_prime() && ann.is_subset(p))
        .cloned()
        .collect()
}

/// `E_P` over `A_P`, built from pairs `(e, s)` with `(e,s) ~ (f,t)` iff
/// `u(te - sf) = 0` for some `u ∉ P`.
pub struct LocalizedModule {
    pub module: Arc<FiniteModule>,
    pub localization: Localization,
    /// `e ↦ e/1`.
    pub map: Vec<usize>,
    base: Arc<FiniteModule>,
    kernel: ElemSet,
}

impl LocalizedModule {
    /// Class of the fraction `e/s`: the least `f` with `(e, s) ~ (f, 1)`.
    pub fn class_of_pair(&self, e: usize, s: usize) -> usize {
        let m = &self.base;
        let f = m
            .elements()
            .find(|&f| self.kernel.contains(m.sub(e, m.act(s, f))))
            .expect("every fraction over a finite module has a representative over 1");
        self.map[f]
    }
}

pub fn localize_module(module: &Arc<FiniteModule>, prime: &Ideal) -> Result<LocalizedModule> {
    if !Arc::ptr_eq(module.ring(), prime.ring()) {
        return Err(Error::RingMismatch(
            module.ring().provenance().to_string(),
            prime.ring().provenance().to_string(),
        ));
    }
    let loc = localize_at_prime(prime)?;
    let s = loc.denominators().clone();
    let kernel = ElemSet::from_indices(
        module.size(),
        module
            .elements()
            .filter(|&e| s.iter().any(|u| module.act(u, e) == 0)),
    );
    let mut map = vec![usize::MAX; module.size()];
    let mut reps = Vec::new();
    for e in module.elements() {
        if map[e] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(e);
        for k in &kernel {
            map[module.add(e, k)] = c;
        }
    }
    let m = reps.len();
    let base_ring = module.ring();
    let mut ring_reps = vec![usize::MAX; loc.ring.size()];
    for a in base_ring.elements().rev() {
        ring_reps[loc.map[a]] = a;
    }
    let mut add = Vec::with_capacity(m * m);
    for &e in &reps {
        for &f in &reps {
            add.push(map[module.add(e, f)] as u32);
        }
    }
    let mut act = Vec::with_capacity(loc.ring.size() * m);
    for &a in &ring_reps {
        for &e in &reps {
            act.push(map[module.act(a, e)] as u32);
        }
    }
    let localized = FiniteModule::assemble(
        &loc.ring,
        m,
        add,
        act,
        ModuleShape::Localized,
        format!("loc({}, {})", module.provenance(), prime.literal()),
    );
    Ok(LocalizedModule {
        module: localized,
        localization: loc,
        map,
        base: module.clone(),
        kernel,
    })
}
