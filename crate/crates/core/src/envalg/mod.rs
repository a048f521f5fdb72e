//! Enveloping algebras of finite-dimensional Lie algebras on the PBW basis:
//! products, left and two-sided Gröbner bases, and the symbol map.

mod lie;
mod pbw;
mod twostd;

pub use lie::{validate_lie, LieStructure};
pub use pbw::{free_to_pbw, pbw_mul, pbw_section, sigma, EnvelopingAlgebra};
pub use twostd::{
    is_two_sided_groebner, left_groebner, left_interreduce, left_normal_form, two_sided_groebner, TwoSidedLimits,
};
