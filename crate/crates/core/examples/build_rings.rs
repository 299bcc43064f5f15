//! Residue rings, products, quotients and localizations, with the
//! structural queries on each.

use isp_workbench::construct::direct_product;
use isp_workbench::ideal::Ideal;
use isp_workbench::ring::{localize_at_prime, quotient, FiniteRing};
use isp_workbench::Ring;

fn describe(r: &Ring) {
    println!(
        "{}: size {}, units {:?}, idempotents {:?}, nilradical {}, local {}, field {}",
        r.provenance(),
        r.size(),
        r.units().to_vec(),
        r.idempotents(),
        r.nilradical().literal(),
        r.is_local(),
        r.is_field(),
    );
}

fn main() -> isp_workbench::Result<()> {
    let z12 = FiniteRing::zmod(12)?;
    describe(&z12);
    describe(&direct_product(&[FiniteRing::zmod(4)?, FiniteRing::zmod(3)?])?);

    let q = quotient(&Ideal::principal(&z12, 4))?;
    describe(&q.ring);
    println!("projection Z/12 -> quotient: {:?}", q.projection);

    for p in [2, 3] {
        let loc = localize_at_prime(&Ideal::principal(&z12, p))?;
        describe(&loc.ring);
        println!("canonical map into the localization at ({p}): {:?}", loc.map);
    }

    if let Err(e) = FiniteRing::zmod(1) {
        println!("Zmod(1) rejected: {e}");
    }
    Ok(())
}
