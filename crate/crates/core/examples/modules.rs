//! Cyclic-sum modules over Z/n: submodules and the module predicates.

use isp_workbench::module::{
    annihilator, is_divisible, is_multiplication_module, is_simple, localize_module, make_module, submodules, support,
};
use isp_workbench::ring::FiniteRing;
use isp_workbench::all_ideals;

fn main() -> isp_workbench::Result<()> {
    let f2 = FiniteRing::zmod(2)?;
    let z4 = FiniteRing::zmod(4)?;
    for (ring, orders) in [(&f2, vec![2]), (&f2, vec![2, 2]), (&z4, vec![2]), (&z4, vec![4, 2])] {
        let e = make_module(ring, &orders)?;
        let supp: Vec<String> = support(&e).iter().map(|p| p.literal()).collect();
        println!(
            "{} over {}: size {}, {} submodules, simple {}, divisible {}, multiplication {}, ann {}, support {:?}",
            e.provenance(),
            ring.provenance(),
            e.size(),
            submodules(&e).len(),
            is_simple(&e),
            is_divisible(&e),
            is_multiplication_module(&e),
            annihilator(&e).literal(),
            supp,
        );
        for p in all_ideals(ring).primes() {
            let lat = all_ideals(ring);
            let local = localize_module(&e, lat.get(p))?;
            println!("  localized at {}: size {}", lat.get(p).literal(), local.module.size());
        }
    }
    match make_module(&f2, &[3]) {
        Err(e) => println!("mod(3) over Zmod(2): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
