//! Exact linear algebra over Q(ζ_n).
mod dense;
mod sparse;
mod subspace;

pub use dense::{bilinear_radical, rref_rows, BasisCoords, Echelon, Mat};
pub(crate) use dense::kernel_from_echelon;
pub use sparse::SparseMat;
pub use subspace::{is_zero_vector, leading_index, zero_vector, Subspace, Vector};
