//! From a commutative Gröbner basis of the associated graded ideal back to a
//! Gröbner basis in the free algebra: abelianization, the ordered splitting,
//! the homogeneous lift, the filtered lift, and the full pipeline.

mod eps;
mod filtered;
mod pipeline;

pub use eps::{eps_lift, eps_lift_detailed, LiftSource, LiftedElement};
pub use filtered::{defining_relations, filtered_lift, pair_preimages};
pub use pipeline::{pipeline, random_basis_change, PipelineOptions, PipelineTrace, StageTiming, Verification};

use crate::error::Result;
use crate::kernel::{Field, Word};
use crate::poly::{CPoly, NcPoly};

/// Abelianization `K<X> -> K[x]` on `n` letters.
pub fn gamma<F: Field>(f: &NcPoly<F>, n: usize) -> Result<CPoly<F>> {
    let mut out = CPoly::zero();
    for (w, c) in f.terms() {
        w.check_alphabet(n)?;
        out.add_term(w.abelianize(n), c.clone());
    }
    Ok(out)
}

/// Ordered splitting: each monomial becomes its letters in nondecreasing
/// order.
pub fn delta<F: Field>(f: &CPoly<F>) -> NcPoly<F> {
    NcPoly::from_terms(f.terms().map(|(a, c)| (Word::new(a.sorted_letters()), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ExpVec, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn nc(terms: &[(i64, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(terms.iter().map(|(c, w)| (Word::new(w.to_vec()), q(*c))))
    }

    fn cp(terms: &[(i64, &[u32])]) -> CPoly<Rational> {
        CPoly::from_terms(terms.iter().map(|(c, e)| (ExpVec::new(e.to_vec()), q(*c))))
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma(&nc(&[(1, &[1, 0]), (-1, &[0, 1]), (1, &[2])]), 3).unwrap(),
            cp(&[(1, &[0, 0, 1])])
        );
        assert_eq!(gamma(&nc(&[(1, &[0, 0, 0])]), 3).unwrap(), cp(&[(1, &[3, 0, 0])]));
        assert_eq!(
            gamma(&nc(&[(2, &[0, 1, 2]), (-1, &[2, 2]), (-2, &[2])]), 3).unwrap(),
            cp(&[(2, &[1, 1, 1]), (-1, &[0, 0, 2]), (-2, &[0, 0, 1])])
        );
        assert!(gamma(&nc(&[(1, &[3])]), 3).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&cp(&[(1, &[2, 1, 0])])), nc(&[(1, &[0, 0, 1])]));
        assert_eq!(delta(&cp(&[(1, &[0, 0, 0])])), nc(&[(1, &[])]));
        assert_eq!(
            delta(&cp(&[(1, &[1, 0, 2]), (2, &[1, 0, 0])])),
            nc(&[(1, &[0, 2, 2]), (2, &[0])])
        );
    }
}
