//! Single theorem checks with transcripts, then the whole suite over a few
//! rings.

use isp_workbench::expr::{elaborate_finite, parse_ring};
use isp_workbench::ideal::Ideal;
use isp_workbench::module::make_module;
use isp_workbench::ring::FiniteRing;
use isp_workbench::theorems::{check_theorem, run_suite, Instance, TheoremId};

fn main() -> isp_workbench::Result<()> {
    let z6 = FiniteRing::zmod(6)?;
    let f2 = FiniteRing::zmod(2)?;
    let plane = elaborate_finite(&parse_ring("trivext(Zmod(2), mod(2, 2))")?, 4096)?;
    for (id, inst) in [
        (TheoremId::ThmDupli, Instance::with_ideal(&Ideal::principal(&z6, 3))),
        (TheoremId::PropCar, Instance::with_module(&make_module(&f2, &[2, 2])?)),
        (TheoremId::PropSpr, Instance::ring(&plane)),
    ] {
        let check = check_theorem(id, &inst)?;
        println!("{} [{}]: {}", check.id, check.instance, check.outcome);
        for line in &check.transcript {
            println!("  {line}");
        }
    }

    let rings = ["Zmod(8)", "Zmod(12)", "trivext(Zmod(4), mod(2))", "dup(Zmod(6), ideal(3))"]
        .iter()
        .map(|e| elaborate_finite(&parse_ring(e)?, 4096))
        .collect::<isp_workbench::Result<Vec<_>>>()?;
    let report = run_suite(&rings)?;
    println!(
        "suite: {} checks, {} pass, {} fail, {} inapplicable",
        report.checks.len(),
        report.passed,
        report.failed,
        report.inapplicable
    );
    Ok(())
}
