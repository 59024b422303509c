//! Indices of the circulant form A_z: closed formulas against a dense
//! Jacobi eigensolve.

use capax::module_structure::{spectrum_report, CirculantForm};
use capax::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>3} {:>6} {:>5} {:>5} {:>6}", "M", "ell", "z", "ind", "fix", "agree");
    for (m, ell, z) in [(3, 5, "-6/5"), (1, 5, "0"), (3, 5, "-3"), (5, 3, "-7/2"), (1, 21, "-5")] {
        let form = CirculantForm::new(m, ell, q(z))?;
        let r = spectrum_report(&form);
        println!(
            "{m:>3} {ell:>3} {z:>6} {:>5} {:>5} {:>6}",
            r.index_count, r.fixed_index_count, r.oracle_agrees
        );
    }

    let form = CirculantForm::with_auto_m(7, q("-9/2"))?;
    println!("auto M for ℓ=7, z=-9/2: M={}", form.m());
    Ok(())
}
