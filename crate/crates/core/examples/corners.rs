//! Corner sets ∂J of saturated regions: a polar slice and a union of boxes.

use capax::module_structure::{corner_analysis, corner_lemma_check, SaturatedBoxUnion};
use capax::toric_geometry::{polar_slice, DEFAULT_ENUM_BUDGET};
use capax::{q, ToricDomain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e = ToricDomain::ellipsoid(vec![q("7/2"), q("4")])?;
    let slice = polar_slice(&e, q("8"))?;
    let c = corner_analysis(&slice, DEFAULT_ENUM_BUDGET)?;
    println!("Ω°_8 of E(7/2,4): ∂J = {:?}, I_C = {}", c.boundary_j, c.i_c);

    let staircase = SaturatedBoxUnion::from_depths(vec![
        vec![q("5/2"), q("1/2")],
        vec![q("3/2"), q("3/2")],
        vec![q("1/3"), q("7/2")],
    ])?;
    let c = corner_analysis(&staircase, DEFAULT_ENUM_BUDGET)?;
    println!("staircase: ∂J = {:?}, sums {:?}, I_C = {}", c.boundary_j, c.corner_sums(), c.i_c);
    println!("corner lemma holds: {}", corner_lemma_check(&c));
    Ok(())
}
