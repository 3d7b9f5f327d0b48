//! Hopf algebras on PBW bases: construction by rewriting, Hopf maps, and structure
//! computations (radical, integrals, center, blocks).
mod algebra;
mod elt;
mod export;
mod rewrite;
mod structure;
mod tensor;
mod verify;

pub use algebra::{Algebra, AlgebraSpec, AlgebraTarget, CoproductTarget, CounitTarget, Family, FiniteAlgebra, HopfStructure};
pub use elt::{failing_relations, AlgElt, NcPoly, RelTarget, Relation, SparseElt, Tensor3Elt, TensorElt};
pub use rewrite::PowerRule;
pub use tensor::{tensor_iso_check, TensorAlgebra, TensorIsoReport};
pub use verify::{axiom_failures_at, verify_hopf_axioms, AxiomReport, Sampling};
pub use structure::{
    blocks_isomorphic_h0, center, center_and_blocks, check_idempotent_family, group_idempotents,
    h0_central_idempotents, hopf_ideal_check, ideal_generated, integrals_and_symmetry, jacobson_radical, left_ideal_generators,
    loewy_length, quotient_is_semisimple, radical_report, regular_traces, skew_pairing_tau, spin_ideal, trace_form,
    BlockIsoReport, CenterReport, HopfIdealCheck, CentralIdempotentCheck, IdempotentCheck, IntegralReport, RadicalReport,
};
pub use export::{structure_constants, StructureConstants};
