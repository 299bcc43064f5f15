//! Full classification report for a ring expression, text and JSON.

use isp_workbench::classify::{check_implications, classify};
use isp_workbench::expr::{elaborate_finite, parse_ring};

fn main() -> isp_workbench::Result<()> {
    let expr = std::env::args().nth(1).unwrap_or_else(|| "trivext(Zmod(4), mod(2))".into());
    let ring = elaborate_finite(&parse_ring(&expr)?, 4096)?;
    let report = classify(&ring, 0)?;
    print!("{}", report.render_text());
    check_implications(&report)?;
    println!("implication diagram respected");
    println!("{}", serde_json::to_string(&report.property("strongly_isp")).expect("serializes"));
    Ok(())
}
