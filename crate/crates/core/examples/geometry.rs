//! Parse a domain spec and look at the moment body and its polar slices.

use capax::toric_geometry::{polar_slice, spec_file};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = r#"{"type": "polytope", "vertices": [[0,0],[3,0],[2,2],[0,3]]}"#;
    let domain = spec_file::parse_domain(text)?;

    println!("vertices: {:?}", domain.canonical_vertices());
    for h in domain.halfspaces() {
        println!("  {:?}·x <= {}", h.normal, h.offset);
    }
    println!("‖(1,1)‖* = {}", domain.support_lattice(&[1, 1]));
    println!("‖Ω°_1‖∞ = {}", domain.polar_inf_norm()?);

    for t in [2i64, 4, 8] {
        let slice = polar_slice(&domain, t.into())?;
        let best = slice.max_lattice_functional()?;
        println!("T={t}: I(Ω°_T) = {} at z = {:?}", best.value, best.witness_z());
    }
    Ok(())
}
