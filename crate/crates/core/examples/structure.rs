//! Degree data of the cohomology module for E(3.5, 4) at a few levels T.

use capax::module_structure::structure_report;
use capax::toric_geometry::DEFAULT_ENUM_BUDGET;
use capax::{q, ToricDomain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = ToricDomain::ellipsoid(vec![q("3.5"), q("4")])?;

    for (t, ell) in [("0", 3), ("5", 3), ("8", 11), ("20", 3)] {
        // Z = (-2,-2) lies in Ω°_T once T ≥ ‖(2,2)‖* = 8
        let eta = if t == "8" { vec![vec![q("-2"), q("-2")]] } else { vec![] };
        let r = structure_report(&e, q(t), ell, &eta, DEFAULT_ENUM_BUDGET)?;
        print!("T={t:<3} ℓ={ell:<3} bound={:<5} ", r.admissibility_bound.to_decimal_string());
        match &r.invariants {
            Some(inv) => println!(
                "I={} min_degree={} window={:?} corners={:?} [{}]",
                inv.lattice_max, inv.min_degree, inv.torsion_window, inv.bouquet_corners, inv.bouquet_label
            ),
            None => println!("not admissible"),
        }
        if let Some(inv) = &r.invariants {
            for eta in &inv.eta_exponents {
                println!("    {}", eta.statement);
            }
        }
    }
    Ok(())
}
