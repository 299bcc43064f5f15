//! Every proper ideal of a ring factored in each of the four alphabets.

use isp_workbench::expr::{elaborate_finite, parse_ring};
use isp_workbench::factor::{FactorMode, Factorization};
use isp_workbench::all_ideals;

fn main() -> isp_workbench::Result<()> {
    let expr = std::env::args().nth(1).unwrap_or_else(|| "trivext(Zmod(4), mod(2))".into());
    let ring = elaborate_finite(&parse_ring(&expr)?, 4096)?;
    let lat = all_ideals(&ring);
    println!("{}", ring.provenance());
    for t in lat.proper_ideals() {
        println!("  {}", lat.get(t).literal());
        for mode in [FactorMode::InvRadical, FactorMode::RadicalsOnly, FactorMode::PrimesOnly, FactorMode::InvPrimes] {
            let shown = match lat.factor(t, mode) {
                Some(f) => Factorization::from_ids(&lat, &f).to_string(),
                None => "none".into(),
            };
            println!("    {mode:?}: {shown}");
        }
    }
    Ok(())
}
