//! Finite Gröbner bases in the free associative algebra for ideals that
//! define almost commutative algebras.
//!
//! The crate follows a constructive route through an enveloping algebra
//! `U(g)`: a two-sided Gröbner basis in `U(g)`, its symbols in the
//! commutative associated graded ring, a homogeneous noncommutative lift of
//! the resulting commutative basis, and a filtered lift back to the free
//! algebra, checked independently by the diamond lemma.
//!
//! All algorithms are generic over the coefficient [`Field`]; the aliases
//! below fix the rationals, which is the default everywhere.

pub mod compoly;
pub mod envalg;
pub mod error;
pub mod freealg;
pub mod kernel;
pub mod liftkit;
pub mod poly;

pub use error::{Error, ErrorClass, Result};
pub use kernel::{CommOrder, ExpVec, Field, Fp, OrderSpec, Rational, Word, WordOrder};
pub use poly::{CPoly, Monomial, NcPoly, PbwPoly, Poly};

/// Commutative polynomial over the rationals.
pub type QCPoly = CPoly<Rational>;
/// Free-algebra polynomial over the rationals.
pub type QNcPoly = NcPoly<Rational>;
/// Enveloping-algebra element over the rationals.
pub type QPbwPoly = PbwPoly<Rational>;
/// Lie structure over the rationals.
pub type QLieStructure = envalg::LieStructure<Rational>;
/// Enveloping algebra over the rationals.
pub type QEnvelopingAlgebra = envalg::EnvelopingAlgebra<Rational>;
/// Residues modulo 32003, a common prime for modular cross-checks.
pub type F32003 = Fp<32003>;
