//! Integer data behind the cohomology module: circulant spectra and their
//! indices, corner combinatorics of polar slices, and the predicted degree
//! data of the F_p[u]-module.

pub mod circulant;
pub mod corners;
pub mod jacobi;
mod report;

use thiserror::Error;

use crate::rational::Rational;
use crate::toric_geometry::GeometryError;

pub use circulant::{spectrum_report, CirculantForm, SpectrumReport, EIGEN_TOLERANCE};
pub use corners::{
    corner_analysis, corner_lemma_check, AxisBox, CornerData, SaturatedBoxUnion, SaturatedRegion,
};
pub use report::{structure_report, DegreeWindow, EtaExponent, ModuleInvariants, StructureReport, BOUQUET_LABEL};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("M·ℓ must be odd and positive, got M={m}, ℓ={ell}")]
    EvenProduct { m: u64, ell: u64 },
    #[error("z={z} is outside the window (−Mℓ/4, 0] for M={m}, ℓ={ell}")]
    OutsideWindow { z: Rational, m: u64, ell: u64 },
    #[error("ℓ must be odd and at least 3, got {0}")]
    EvenEll(u64),
    #[error("point {point:?} is not in the polar slice")]
    PointNotInSlice { point: Vec<Rational> },
    #[error("empty box union")]
    EmptySet,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("box has lo > hi: {0:?}")]
    InvalidBox(AxisBox),
    #[error("box leaves the nonpositive orthant: {0:?}")]
    OutsideOrthant(AxisBox),
    #[error("not star-shaped about O: segment to {corner:?} leaves the set")]
    NotStarShaped { corner: Vec<Rational> },
    #[error("not γ-saturated: {missing:?} is not covered")]
    NotSaturated { missing: AxisBox },
    #[error("corner enumeration exceeded budget of {budget} points")]
    EnumerationBudgetExceeded { budget: u64 },
    #[error(transparent)]
    Geometry(GeometryError),
}

impl From<GeometryError> for StructureError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::EnumerationBudgetExceeded { budget } => {
                StructureError::EnumerationBudgetExceeded { budget }
            }
            other => StructureError::Geometry(other),
        }
    }
}
