//! Noncommutative polynomials in the free associative algebra: two-sided
//! reduction, ambiguities, diamond-lemma verification and degree-bounded
//! completion.

mod ambiguity;
mod complete;
mod reduce;

pub use ambiguity::{ambiguities, Ambiguity, AmbiguityKind};
pub use complete::{
    graded_quotient_is_commutative, nc_complete_bounded, nc_is_groebner, AmbiguityFailure, Completion,
    GroebnerCertificate,
};
pub use reduce::{nc_interreduce, nc_normal_form, nc_normal_form_with_cofactors, nc_tail_reduce, Cofactor};

use crate::error::{Error, Result};
use crate::kernel::Field;
use crate::poly::NcPoly;

/// Leading homogeneous part: the top-degree component.
pub fn lh<F: Field>(f: &NcPoly<F>) -> Result<NcPoly<F>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("leading homogeneous part"));
    }
    Ok(f.leading_homogeneous())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Rational, Word};

    fn p(terms: &[(i64, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(
            terms
                .iter()
                .map(|(c, w)| (Word::new(w.to_vec()), Rational::from_integer((*c).into()))),
        )
    }

    #[test]
    fn leading_homogeneous_parts() {
        let f = p(&[(1, &[1, 0]), (-1, &[0, 1]), (1, &[2])]);
        assert_eq!(lh(&f).unwrap(), p(&[(1, &[1, 0]), (-1, &[0, 1])]));
        let x3 = p(&[(1, &[0, 0, 0])]);
        assert_eq!(lh(&x3).unwrap(), x3);
        let g = p(&[(2, &[0, 1, 2]), (-1, &[2, 2]), (-2, &[2])]);
        assert_eq!(lh(&g).unwrap(), p(&[(2, &[0, 1, 2])]));
        assert!(lh(&NcPoly::<Rational>::zero()).is_err());
    }
}
