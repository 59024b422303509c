//! Exact symplectic capacities c_k and contact capacities [c]_k of convex
//! toric domains X_Ω, with the lattice and spectral invariants that go with
//! them.
//!
//! All scalars are exact rationals; only the circulant spectra use `f64`.

#![allow(clippy::result_large_err)]

pub mod capacities;
pub mod cli;
pub mod contact;
pub mod module_structure;
pub mod rational;
pub mod toric_geometry;

pub use capacities::{CapacityConfig, CapacityReport, Method};
pub use contact::ContactCapacityReport;
pub use rational::{q, Rational};
pub use toric_geometry::ToricDomain;
