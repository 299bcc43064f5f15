//! Direct products, trivial ring extensions `A ∝ E` and amalgamated
//! duplications `A ⋈ I`, plus the ideal maps between them and their bases.

use std::sync::Arc;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::{ideal_times, FiniteModule, Submodule};
use crate::ring::{encode, Construction, FiniteRing, Ring};

pub fn direct_product(parts: &[Ring]) -> Result<Ring> {
    if parts.len() < 2 {
        return Err(Error::Semantic("a direct product needs at least two factors".into()));
    }
    let size = parts.iter().map(|r| r.size()).product();
    let ones: Vec<usize> = parts.iter().map(|r| r.one()).collect();
    let one = encode(parts, &ones);
    let names: Vec<&str> = parts.iter().map(|r| r.provenance()).collect();
    let provenance = format!("prod({})", names.join(", "));
    Ok(FiniteRing::assemble(
        size,
        one,
        Construction::Product(parts.to_vec()),
        None,
        provenance,
    ))
}

/// `A ∝ E` on pairs `(a, e)`, indexed `a * |E| + e`, with
/// `(a, e)(b, f) = (ab, af + be)`.
pub fn trivext(base: &Ring, module: &Arc<FiniteModule>) -> Result<Ring> {
    if !Arc::ptr_eq(base, module.ring()) {
        return Err(Error::RingMismatch(
            base.provenance().to_string(),
            module.ring().provenance().to_string(),
        ));
    }
    let provenance = format!("trivext({}, {})", base.provenance(), module.provenance());
    Ok(FiniteRing::assemble(
        base.size() * module.size(),
        base.one() * module.size(),
        Construction::TrivExt {
            base: base.clone(),
            module: module.clone(),
        },
        None,
        provenance,
    ))
}

/// `A ⋈ I = {(a, a + i)}` as a subring of `A × A`.
pub fn dup(ideal: &Ideal) -> Result<Ring> {
    let base = ideal.ring();
    let elems: Vec<usize> = ideal.elements().collect();
    let mut slot = vec![u32::MAX; base.size()];
    for (k, &x) in elems.iter().enumerate() {
        slot[x] = k as u32;
    }
    let k = elems.len();
    let provenance = format!("dup({}, {})", base.provenance(), ideal.literal());
    Ok(FiniteRing::assemble(
        base.size() * k,
        base.one() * k,
        Construction::Dup {
            base: base.clone(),
            ideal: elems,
            slot,
        },
        None,
        provenance,
    ))
}

/// Base ring and module of `A ∝ E`.
pub fn trivext_parts(ring: &Ring) -> Result<(Ring, Arc<FiniteModule>)> {
    match ring.construction() {
        Construction::TrivExt { base, module } => Ok((base.clone(), module.clone())),
        _ => Err(Error::WrongConstruction {
            ring: ring.provenance().to_string(),
            expected: "trivial ring extension",
        }),
    }
}

/// Base ring and duplicated ideal of `A ⋈ I`.
pub fn dup_parts(ring: &Ring) -> Result<(Ring, Ideal)> {
    match ring.construction() {
        Construction::Dup { base, ideal, .. } => {
            let set = ElemSet::from_indices(base.size(), ideal.iter().copied());
            Ok((base.clone(), Ideal::from_set_unchecked(base, set)))
        }
        _ => Err(Error::WrongConstruction {
            ring: ring.provenance().to_string(),
            expected: "amalgamated duplication",
        }),
    }
}

/// `I ∝ V = {(a, v) : a ∈ I, v ∈ V}`, which is an ideal exactly when `IE ⊆ V`.
pub fn homogeneous_ideal(ring: &Ring, ideal: &Ideal, sub: &Submodule) -> Result<Ideal> {
    let (base, module) = trivext_parts(ring)?;
    if !Arc::ptr_eq(&base, ideal.ring()) || !Arc::ptr_eq(&module, sub.module()) {
        return Err(Error::RingMismatch(
            ring.provenance().to_string(),
            ideal.ring().provenance().to_string(),
        ));
    }
    if !ideal_times(ideal, &Submodule::whole(&module)).is_subset(sub) {
        return Err(Error::NotHomogeneous(ideal.literal()));
    }
    let m = module.size();
    let set = ElemSet::from_indices(
        ring.size(),
        ideal
            .elements()
            .flat_map(|a| sub.set().iter().map(move |v| a * m + v)),
    );
    Ok(Ideal::from_set_unchecked(ring, set))
}

/// `0 ∝ E`.
pub fn module_ideal(ring: &Ring) -> Result<Ideal> {
    let (base, module) = trivext_parts(ring)?;
    homogeneous_ideal(ring, &Ideal::zero(&base), &Submodule::whole(&module))
}

/// Splits an ideal of `A ∝ E` into `(I, V)` when it is homogeneous.
pub fn homogeneous_components(ideal: &Ideal) -> Result<Option<(Ideal, Submodule)>> {
    let ring = ideal.ring();
    let (base, module) = trivext_parts(ring)?;
    let m = module.size();
    let i = ElemSet::from_indices(base.size(), ideal.elements().map(|x| x / m));
    let v = ElemSet::from_indices(
        m,
        ideal.elements().filter(|x| x / m == 0).map(|x| x % m),
    );
    // the fibres are cosets of V, so homogeneity means each fibre is V itself
    if !i.iter().all(|a| ideal.contains(a * m)) {
        return Ok(None);
    }
    let i = Ideal::from_set_unchecked(&base, i);
    let v = Submodule::from_elements(&module, v.iter())?;
    Ok(Some((i, v)))
}

/// `H ⋈ I = {(h, h + i) : h ∈ H, i ∈ I}` in `A ⋈ I`.
pub fn dup_ideal(ring: &Ring, h: &Ideal) -> Result<Ideal> {
    let (base, i) = dup_parts(ring)?;
    if !Arc::ptr_eq(&base, h.ring()) {
        return Err(Error::RingMismatch(
            ring.provenance().to_string(),
            h.ring().provenance().to_string(),
        ));
    }
    let set = ElemSet::from_indices(
        ring.size(),
        h.elements().flat_map(|a| {
            let ring = ring.clone();
            let base = base.clone();
            i.elements().map(move |x| {
                ring.try_dup_index(a, base.add(a, x))
                    .expect("(h, h + i) lies in the duplication")
            })
        }),
    );
    Ideal::from_elements(ring, set.iter())
}

/// Image of an ideal of `A ⋈ I` under the first projection.
pub fn dup_first_projection(ideal: &Ideal) -> Result<Ideal> {
    let (base, _) = dup_parts(ideal.ring())?;
    let set = ElemSet::from_indices(
        base.size(),
        ideal.elements().map(|x| ideal.ring().dup_pair(x).0),
    );
    Ok(Ideal::from_set_unchecked(&base, set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::all_ideals;
    use crate::module::{make_module, submodules};

    fn z(n: u64) -> Ring {
        FiniteRing::zmod(n).unwrap()
    }

    #[test]
    fn product_of_z2_z3() {
        let r = direct_product(&[z(2), z(3)]).unwrap();
        assert_eq!(r.size(), 6);
        assert!(r.check_axioms().is_ok());
        assert_eq!(r.units().len(), 2);
        assert_eq!(all_ideals(&r).len(), 4);
        assert_eq!(r.provenance(), "prod(Zmod(2), Zmod(3))");
        assert!(direct_product(&[z(2)]).is_err());
    }

    #[test]
    fn trivext_z4_z2() {
        let a = z(4);
        let e = make_module(&a, &[2]).unwrap();
        let r = trivext(&a, &e).unwrap();
        assert_eq!(r.size(), 8);
        assert!(r.check_axioms().is_ok());
        let two = r.parse_element(&crate::expr::ElemLit::Tuple(vec![
            crate::expr::ElemLit::Int(2),
            crate::expr::ElemLit::Int(0),
        ]))
        .unwrap();
        assert!(r.is_nilpotent(two));
        let oe = module_ideal(&r).unwrap();
        assert_eq!(oe.len(), 2);
        assert!(oe.product(&oe).unwrap().is_zero());
        assert_eq!(r.provenance(), "trivext(Zmod(4), mod(2))");
    }

    #[test]
    fn trivext_rejects_foreign_module() {
        let e = make_module(&z(4), &[2]).unwrap();
        assert!(matches!(trivext(&z(4), &e), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn homogeneous_ideals() {
        let a = z(4);
        let e = make_module(&a, &[2]).unwrap();
        let r = trivext(&a, &e).unwrap();
        let m = homogeneous_ideal(&r, &Ideal::principal(&a, 2), &Submodule::whole(&e)).unwrap();
        assert_eq!(r.maximal_if_local().unwrap(), m);
        let zero = homogeneous_ideal(&r, &Ideal::zero(&a), &Submodule::zero(&e)).unwrap();
        assert!(zero.is_zero());
        assert!(matches!(
            homogeneous_ideal(&r, &Ideal::whole(&a), &Submodule::zero(&e)),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn homogeneous_product_formula() {
        // (I ∝ E)(J ∝ E) = IJ ∝ (I + J)E
        for (n, orders) in [(4u64, vec![2u64]), (2, vec![2, 2]), (8, vec![4]), (6, vec![6])] {
            let a = z(n);
            let e = make_module(&a, &orders).unwrap();
            let r = trivext(&a, &e).unwrap();
            let whole = Submodule::whole(&e);
            let ideals = all_ideals(&a);
            for i in ideals.ideals() {
                for j in ideals.ideals() {
                    let lhs = homogeneous_ideal(&r, i, &whole)
                        .unwrap()
                        .product(&homogeneous_ideal(&r, j, &whole).unwrap())
                        .unwrap();
                    let ij = i.product(j).unwrap();
                    let v = ideal_times(&i.sum(j).unwrap(), &whole);
                    assert_eq!(lhs, homogeneous_ideal(&r, &ij, &v).unwrap());
                }
            }
        }
    }

    #[test]
    fn zero_module_ideals_cover_submodules() {
        let f2 = z(2);
        let e = make_module(&f2, &[2, 2]).unwrap();
        let r = trivext(&f2, &e).unwrap();
        let lat = all_ideals(&r);
        for v in submodules(&e) {
            let h = homogeneous_ideal(&r, &Ideal::zero(&f2), &v).unwrap();
            assert!(lat.id_of(&h).is_some());
        }
    }

    #[test]
    fn dup_sizes() {
        let a = z(8);
        let r = dup(&Ideal::principal(&a, 2)).unwrap();
        assert_eq!(r.size(), 32);
        assert!(r.check_axioms().is_ok());
        assert_eq!(r.provenance(), "dup(Zmod(8), ideal(2))");
        let r6 = dup(&Ideal::principal(&z(6), 3)).unwrap();
        assert_eq!(r6.size(), 12);
        let r0 = dup(&Ideal::zero(&a)).unwrap();
        assert_eq!(r0.size(), 8);
        assert_eq!(all_ideals(&r0).len(), 4);
    }

    #[test]
    fn dup_ideal_enumerated() {
        let a = z(8);
        let i = Ideal::principal(&a, 2);
        let r = dup(&i).unwrap();
        let h = dup_ideal(&r, &i).unwrap();
        // brute force: pairs (x, y) with x ∈ H and y - x ∈ I
        let brute = r
            .elements()
            .filter(|&x| {
                let (p, q) = r.dup_pair(x);
                i.contains(p) && i.contains(a.sub(q, p))
            })
            .count();
        assert_eq!(h.len(), brute);
        assert_eq!(h.len(), 16);
        assert!(dup_ideal(&r, &Ideal::whole(&a)).unwrap().is_whole());
        let z0 = dup_ideal(&r, &Ideal::zero(&a)).unwrap();
        assert_eq!(z0.len(), i.len());
        assert!(z0.elements().all(|x| r.dup_pair(x).0 == 0));
        assert_eq!(dup_first_projection(&h).unwrap(), i);
    }

    #[test]
    fn homogeneous_components_split() {
        let a = z(4);
        let e = make_module(&a, &[2]).unwrap();
        let r = trivext(&a, &e).unwrap();
        let m = r.maximal_if_local().unwrap();
        let (i, v) = homogeneous_components(&m).unwrap().unwrap();
        assert_eq!(i, Ideal::principal(&a, 2));
        assert!(v.is_whole());
    }
}
