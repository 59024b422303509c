use serde::{Deserialize, Serialize};

use super::corners::corner_analysis;
use super::StructureError;
use crate::contact::smallest_prime_factor;
use crate::rational::Rational;
use crate::toric_geometry::{lattice_functional, polar_slice, Shape, ToricDomain};

pub const BOUQUET_LABEL: &str = "HEURISTIC";

/// I(Z) for a requested point, i.e. η_{ℓ,T} = u^{I(Z)}·γ_{Z,ℓ}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaExponent {
    pub point: Vec<Rational>,
    pub exponent: i64,
    pub statement: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWindow {
    pub lo: i64,
    pub hi: i64,
}

/// Integer invariants of the F_p[u]-module, available when T is admissible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleInvariants {
    /// I(Ω°_T).
    pub lattice_max: u64,
    /// −2·I(Ω°_T).
    pub min_degree: i64,
    /// [min_degree, −1]; `None` when min_degree = 0.
    pub torsion_window: Option<DegreeWindow>,
    /// Rank of the free part, generated like F[u, θ] with |u| = 2, |θ| = 1.
    pub free_rank: u32,
    pub eta_exponents: Vec<EtaExponent>,
    /// {I(v) : v ∈ ∂J of the slice}; a heuristic picture of the torsion.
    pub bouquet_corners: Vec<u64>,
    pub bouquet_label: String,
    /// `Some(true)` for ellipsoids, whose module is u^{−I}·F[u, θ];
    /// `None` where the torsion is not pinned down.
    pub torsion_free: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub domain: ToricDomain,
    #[serde(rename = "T")]
    pub t: Rational,
    pub ell: u64,
    pub p_ell: u64,
    /// p_ℓ / ‖Ω°_1‖_∞.
    pub admissibility_bound: Rational,
    pub admissible: bool,
    pub invariants: Option<ModuleInvariants>,
}

/// Structural invariants of the cohomology at level T over F_{p_ℓ}; these
/// are defined only for 0 ≤ T < p_ℓ/‖Ω°_1‖_∞, otherwise only the
/// admissibility verdict is returned.
pub fn structure_report(
    domain: &ToricDomain,
    t: Rational,
    ell: u64,
    eta_points: &[Vec<Rational>],
    budget: u64,
) -> Result<StructureReport, StructureError> {
    if ell < 3 || ell.is_multiple_of(2) {
        return Err(StructureError::EvenEll(ell));
    }
    let p_ell = smallest_prime_factor(ell).expect("ell ≥ 3");
    let norm = domain.polar_inf_norm()?;
    let admissibility_bound = Rational::from(p_ell) / norm;
    let slice = polar_slice(domain, t.clone())?;
    let admissible = t < admissibility_bound;
    let invariants = if admissible {
        let lattice_max = slice.max_lattice_functional_budgeted(budget)?.value;
        let corners = corner_analysis(&slice, budget)?;
        assert_eq!(corners.i_c, lattice_max, "corner maximum equals I(Ω°_T)");
        let eta_exponents = eta_points
            .iter()
            .map(|z| {
                if !slice.contains(z) {
                    return Err(StructureError::PointNotInSlice { point: z.clone() });
                }
                let exponent = lattice_functional(z);
                Ok(EtaExponent {
                    point: z.clone(),
                    exponent,
                    statement: format!("η_{{ℓ,T}} = u^{exponent}·γ_Z"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let min_degree = -2 * lattice_max as i64;
        Some(ModuleInvariants {
            lattice_max,
            min_degree,
            torsion_window: (min_degree < 0).then_some(DegreeWindow {
                lo: min_degree,
                hi: -1,
            }),
            free_rank: 2,
            eta_exponents,
            bouquet_corners: corners.corner_sums(),
            bouquet_label: BOUQUET_LABEL.to_string(),
            torsion_free: matches!(domain.shape(), Shape::Ellipsoid { .. } | Shape::Ball { .. })
                .then_some(true),
        })
    } else {
        None
    };
    Ok(StructureReport {
        domain: domain.clone(),
        t,
        ell,
        p_ell,
        admissibility_bound,
        admissible,
        invariants,
    })
}
