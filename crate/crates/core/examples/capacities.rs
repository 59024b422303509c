//! c_k by the lattice formula, the polar formula and (where one exists) the
//! closed form.

use capax::capacities::{capacity_sequence, CapacityConfig, Method};
use capax::{q, ToricDomain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CapacityConfig::default();
    let domains = [
        ToricDomain::ellipsoid(vec![q("3.5"), q("4")])?,
        ToricDomain::ball(q("1"), 2)?,
        ToricDomain::polydisk(vec![q("2"), q("3")])?,
        ToricDomain::polytope(vec![
            vec![q("0"), q("0")],
            vec![q("3"), q("0")],
            vec![q("2"), q("2")],
            vec![q("0"), q("3")],
        ])?,
    ];

    for d in &domains {
        let lattice = capacity_sequence(d, 8, Method::Lattice, &cfg)?;
        let polar = capacity_sequence(d, 8, Method::Polar, &cfg)?;
        assert_eq!(lattice.values(), polar.values());

        let row: Vec<String> = lattice.values().iter().map(|c| c.to_decimal_string()).collect();
        println!("{:<10} {}", d.shape().kind(), row.join(" "));
        if let Ok(closed) = capacity_sequence(d, 8, Method::ClosedForm, &cfg) {
            assert_eq!(closed.values(), lattice.values());
        }
    }

    // witnesses: the minimizing lattice vector and the threshold T
    let e = &domains[0];
    for entry in capacity_sequence(e, 4, Method::Lattice, &cfg)?.entries {
        println!("c_{} = {}  v = {:?}", entry.k, entry.c_k, entry.witness_vector);
    }
    Ok(())
}
