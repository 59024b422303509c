//! Contact capacities [c]_k for E(3.5, 4): from the commonly quoted c_k row,
//! and from the computed one.

use capax::contact::contact_sequence;
use capax::{q, CapacityConfig, ToricDomain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = ToricDomain::ellipsoid(vec![q("3.5"), q("4")])?;
    let cfg = CapacityConfig::default();

    let quoted: Vec<_> = ["3.5", "4", "7", "7.5", "8", "10.5", "11", "11.5", "12", "14"]
        .iter()
        .map(|s| q(s))
        .collect();
    let from_quoted = contact_sequence(&e, 10, Some(&quoted), &cfg)?;
    let computed = contact_sequence(&e, 10, None, &cfg)?;

    println!("‖Ω°_1‖∞ = {}  big = {}", computed.polar_inf_norm, computed.big);
    println!("{:>3} {:>6} {:>6} {:>6} {:>6}", "k", "c_k", "[c]_k", "c_k*", "[c]_k*");
    for (a, b) in from_quoted.entries.iter().zip(&computed.entries) {
        println!(
            "{:>3} {:>6} {:>6} {:>6} {:>6}",
            a.k,
            a.c_k.to_decimal_string(),
            a.contact_c_k,
            b.c_k.to_decimal_string(),
            b.contact_c_k
        );
    }
    println!("(* computed from the formula)");
    Ok(())
}
