//! Projective class rings: closed-form fusion rules, tables checked against the
//! module computations, presentations, identities and class-algebra radicals.
mod closed_form;
mod identities;
mod poly;
mod presentation;
mod quiver;
mod radical;
mod ring;
mod table;

pub use closed_form::{closed_form_fusion, closed_form_with_rule, FusionRule};
pub use ring::{LabelMult, RingElt, RingFamily};
pub use table::{crosscheck, crosscheck_where, fusion_table, CrosscheckReport, FusionMode, FusionTable, FusionTableExport, Mismatch, RingAxiomReport, TableEntry};
pub use poly::{int_determinant, normal_form, Evaluator, IntPoly, Monomial, RewriteRule};
pub use presentation::{chebyshev_poly, lucas_coeff, lucas_poly, verify_presentation, PresentationReport, PresentationSpec, RelationValue};
pub use identities::{identity_suite_h1, IdentityCheck, IdentityGroup, IdentityReport};
pub use radical::{class_algebra_radical, ClassAlgebra, ClassRadicalReport, IdempotentCensus};
pub use quiver::{quiver_check_h0, QuiverReport};
