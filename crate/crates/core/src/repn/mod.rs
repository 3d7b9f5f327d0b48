//! Modules as matrix representations: simples, projective covers, tensor products,
//! and decomposition into simples and projectives by counting homomorphisms.
mod catalog;
mod discover;
mod graded;
mod hom;
mod label;
mod layers;
mod module;

pub use catalog::{CalibrationReport, CartanMatrix, Catalog, DecompVector, MAX_SPLIT_ATTEMPTS};
pub use discover::{certified_simple, search_simples, split_ideal, IdealPiece, SimpleSearch, Splitting};
pub use graded::{
    is_submodule, quotient, spin, submodule, to_weight_basis, weight_decomposition, weight_space_by_kernel, GradedSub,
    Grading,
};
pub use hom::{hom_basis, hom_dim, hom_dim_unstructured, is_homomorphism};
pub use label::Label;
pub use layers::{filtration_by_homs, radical_by_homs, radical_via_ideal, Filtration};
pub use module::{
    direct_sum, left_ideal_module, one_dim, projective_p, regular_representation, simple_s, tensor_module, Module,
    ModuleExport, Weight,
};
