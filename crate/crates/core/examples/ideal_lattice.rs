//! The ideal lattice of a ring with arithmetic and status flags.

use isp_workbench::expr::{elaborate_finite, parse_ring};
use isp_workbench::all_ideals;

fn main() -> isp_workbench::Result<()> {
    let expr = std::env::args().nth(1).unwrap_or_else(|| "Zmod(12)".into());
    let ring = elaborate_finite(&parse_ring(&expr)?, 4096)?;
    let lat = all_ideals(&ring);
    println!("{} has {} ideals", ring.provenance(), lat.len());
    for i in lat.ids() {
        let ideal = lat.get(i);
        println!(
            "  {:<24} size {:>3}  radical {}  prime {}  maximal {}  primary {}  multiplication {}  stabilizes at {}",
            ideal.literal(),
            ideal.len(),
            ideal.radical().literal(),
            lat.is_prime(i),
            lat.is_maximal(i),
            ideal.is_primary(),
            lat.is_multiplication_ideal(i),
            lat.stabilization_index(i),
        );
    }
    let (a, b) = (lat.len() / 2, lat.len() - 2);
    println!(
        "{} * {} = {}, {} + {} = {}",
        lat.get(a).literal(),
        lat.get(b).literal(),
        lat.get(lat.product(a, b)).literal(),
        lat.get(a).literal(),
        lat.get(b).literal(),
        lat.get(lat.sum(a, b)).literal(),
    );
    Ok(())
}
