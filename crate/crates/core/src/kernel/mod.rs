//! Scalars, monomials and monomial orderings shared by every other module.

mod field;
mod monomial;
mod order;

pub use field::{format_ratio, is_negative, Field, Fp, Rational};
pub use monomial::{ExpVec, Word};
pub use order::{cmp_c, cmp_w, CommOrder, OrderSpec, WordOrder};
