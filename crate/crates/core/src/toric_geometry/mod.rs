//! Exact convex geometry of moment bodies: validation, support functions,
//! polar slices and the lattice functional I.

mod domain;
pub mod hull;
mod linalg;
mod scaled;
mod slice;
pub mod spec_file;

use thiserror::Error;

use crate::rational::Rational;

pub use domain::{moment_map, Shape, ToricDomain};
pub(crate) use scaled::ScaledVertices;
pub use slice::{lattice_functional, polar_slice, LatticeMax, PolarSlice, DEFAULT_ENUM_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("parameter {index} must be positive, got {value}")]
    NonPositiveParameter { index: usize, value: Rational },
    #[error("vertex {vertex:?} has a negative coordinate")]
    NegativeVertexCoordinate { vertex: Vec<Rational> },
    #[error("not downward closed: {projected:?} (from vertex {vertex:?}) lies outside the body")]
    NotDownwardClosed {
        vertex: Vec<Rational>,
        projected: Vec<Rational>,
    },
    #[error("not in convex position: {point:?} is not a vertex of the hull")]
    NotConvex { point: Vec<Rational> },
    #[error("domain has empty interior")]
    EmptyDomain,
    #[error("unbounded domains are not supported")]
    UnboundedDomain,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("action value {index} is negative")]
    NegativeActionValue { index: usize },
    #[error("support function is only defined for nonnegative directions")]
    NegativeDirection,
    #[error("T must be nonnegative, got {0}")]
    NegativeT(Rational),
    #[error("extent of coordinate {coordinate} is zero")]
    DegenerateExtent { coordinate: usize },
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(Rational),
    #[error("lattice enumeration exceeded budget of {budget} points")]
    EnumerationBudgetExceeded { budget: u64 },
}
