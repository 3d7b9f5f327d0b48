//! Exact arithmetic in Q(ζ_n).

mod field;
mod rational;

pub use field::{cyclo_field, cyclo_field_unchecked, cyclotomic_polynomial, CycloField, CycloNum};
pub use rational::Rational;
