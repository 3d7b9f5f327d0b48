//! Exact computations in small Hopf algebras at roots of unity: structure checks,
//! representations, and the Green ring of projective modules.
pub mod cyclo;
mod error;
pub mod green;
pub mod hopf;
pub mod linalg;
pub mod repn;

/// Version tag carried by every JSON document the crate emits.
pub const SCHEMA_VERSION: u32 = 1;

pub use cyclo::{cyclo_field, CycloField, CycloNum, Rational};
pub use error::{Error, Result};
pub use hopf::{AlgElt, Algebra, AlgebraSpec, Family, FiniteAlgebra, HopfStructure};
pub use linalg::{Mat, SparseMat, Subspace};
