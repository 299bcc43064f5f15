//! Trivial ring extensions, amalgamated duplications and their
//! distinguished ideals.

use isp_workbench::construct::{dup, dup_ideal, homogeneous_components, homogeneous_ideal, module_ideal, trivext};
use isp_workbench::ideal::Ideal;
use isp_workbench::iso::{invariant_vector, is_isomorphic};
use isp_workbench::module::{make_module, Submodule};
use isp_workbench::ring::FiniteRing;
use isp_workbench::all_ideals;

fn main() -> isp_workbench::Result<()> {
    let z4 = FiniteRing::zmod(4)?;
    let e = make_module(&z4, &[2])?;
    let t = trivext(&z4, &e)?;
    println!("{}: size {}", t.provenance(), t.size());
    let zero_e = module_ideal(&t)?;
    println!("0∝E = {}, squares to zero: {}", zero_e.literal(), zero_e.product(&zero_e)?.is_zero());
    let m = homogeneous_ideal(&t, &Ideal::principal(&z4, 2), &Submodule::whole(&e))?;
    println!("(2)∝E = {} is the maximal ideal: {}", m.literal(), Some(&m) == t.maximal_if_local().as_ref());
    for i in all_ideals(&t).ideals() {
        let shape = match homogeneous_components(i)? {
            Some((a, v)) => format!("homogeneous: {} ∝ submodule of size {}", a.literal(), v.len()),
            None => "not homogeneous".into(),
        };
        println!("  {}: {shape}", i.literal());
    }

    let z8 = FiniteRing::zmod(8)?;
    let two = Ideal::principal(&z8, 2);
    let d = dup(&two)?;
    println!("{}: size {}", d.provenance(), d.size());
    let h = dup_ideal(&d, &two)?;
    println!("(2)⋈(2) = {} with {} elements", h.literal(), h.len());

    let four = Ideal::principal(&z8, 4);
    let d4 = dup(&four)?;
    let t4 = trivext(&z8, &make_module(&z8, &[2])?)?;
    println!(
        "(4)² = 0, so {} and {} agree: invariants {:?} / {:?}, isomorphic {:?}",
        d4.provenance(),
        t4.provenance(),
        invariant_vector(&d4),
        invariant_vector(&t4),
        is_isomorphic(&d4, &t4),
    );
    Ok(())
}
