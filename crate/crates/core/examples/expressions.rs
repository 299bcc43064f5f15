//! Parsing, printing and elaborating ring, ideal and module expressions,
//! including the error positions for malformed input.

use isp_workbench::expr::{elaborate, elaborate_ideal, parse_ideal, parse_ring, Elaborated};

fn main() {
    for text in [
        "dup(Zmod(8), ideal(2))",
        "trivext( Zmod(4) ,mod(2) )",
        "loc(prod(Zmod(4), Zmod(9)), ideal((1, 3)))",
        "quot(trivext(Zmod(4), mod(2, 2)), ideal((0, (1, 0))))",
        "Zint",
        "Zmod(1)",
        "prod(Zmod(2))",
        "dup(Zmod(8), ideal(2)",
        "dup(Zmod(64), ideal(1))",
    ] {
        let parsed = match parse_ring(text) {
            Ok(e) => e,
            Err(e) => {
                println!("{text:?}: {e}");
                continue;
            }
        };
        match elaborate(&parsed, 1024) {
            Ok(Elaborated::Finite(r)) => println!("{text:?} -> {parsed} with {} elements", r.size()),
            Ok(Elaborated::Integers) => println!("{text:?} -> the integers"),
            Err(e) => println!("{text:?} -> {parsed}: {e}"),
        }
    }
    let ring = match elaborate(&parse_ring("Zmod(12)").unwrap(), 64).unwrap() {
        Elaborated::Finite(r) => r,
        Elaborated::Integers => unreachable!(),
    };
    let ideal = elaborate_ideal(&ring, &parse_ideal("ideal(8, 6)").unwrap()).unwrap();
    println!("ideal(8, 6) in Zmod(12) is {} = {:?}", ideal.literal(), ideal.elements().collect::<Vec<_>>());
}
