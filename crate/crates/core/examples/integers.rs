//! The integer backend: ideal arithmetic on nZ and its factorizations.

use isp_workbench::integers::{int_factor_isp, int_factor_primes, int_factor_sp, int_factor_zpui, int_is_isp, IntegerIdeal};

fn main() -> isp_workbench::Result<()> {
    let (a, b) = (IntegerIdeal(12), IntegerIdeal(18));
    println!("{} * {} = {}", a.literal(), b.literal(), a.product(b).literal());
    println!("{} + {} = {}", a.literal(), b.literal(), a.sum(b).literal());
    for n in [0, 12, 49, 72, 97, 360] {
        let (m, parts) = int_factor_isp(n)?;
        println!(
            "n = {n}: isp ({m}, {parts:?}), sp {:?}, primes {:?}, zpui {:?}",
            int_factor_sp(n)?,
            int_factor_primes(n)?,
            int_factor_zpui(n)?
        );
    }
    let cert = int_is_isp(10_000);
    println!("certificate: {}", serde_json::to_string(&cert).expect("serializes"));
    Ok(())
}
