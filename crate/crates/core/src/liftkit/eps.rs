use crate::compoly::{u_set, MonomialIdeal, USet};
use crate::error::{Error, Result};
use crate::kernel::{ExpVec, Field, OrderSpec, Word};
use crate::liftkit::delta;
use crate::poly::{CPoly, NcPoly};

/// Where an element of a lifted basis comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftSource {
    /// The commutator of letters `high > low`.
    Commutator { high: usize, low: usize },
    /// `multiplier * basis[index]`, split into ordered words.
    Entry { index: usize, multiplier: ExpVec },
    /// The unit ideal.
    Unit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedElement<F: Field> {
    pub source: LiftSource,
    pub poly: NcPoly<F>,
}

pub(crate) fn commutator<F: Field>(high: usize, low: usize) -> NcPoly<F> {
    NcPoly::from_terms([
        (Word::new(vec![high as u32, low as u32]), F::one()),
        (Word::new(vec![low as u32, high as u32]), -F::one()),
    ])
}

fn check_lift_order(order: &OrderSpec) -> Result<()> {
    order.require_graded()?;
    if !order.has_identity_ranks() {
        return Err(Error::InvalidOrder(
            "lifting needs variables ranked in declaration order".into(),
        ));
    }
    Ok(())
}

/// Homogeneous lift of a reduced commutative Gröbner basis `basis` of a
/// homogeneous ideal: the commutators `XjXi - XiXj` (`j > i`) together with
/// the ordered splittings of `u * g` for every `g` in `basis` and every `u`
/// in the U-set of its leading monomial.
///
/// Fails with [`Error::InfiniteUSet`] when some U-set is infinite;
/// `degree_cap` only bounds how far that is searched for a witness.
pub fn eps_lift_detailed<F: Field>(
    basis: &[CPoly<F>],
    order: &OrderSpec,
    degree_cap: u32,
) -> Result<Vec<LiftedElement<F>>> {
    check_lift_order(order)?;
    let n = order.nvars();
    let mut heads = Vec::with_capacity(basis.len());
    for g in basis {
        let lm = g.leading_monomial(order).ok_or(Error::ZeroPolynomial("lift input"))?;
        lm.check_len(n)?;
        heads.push(lm.clone());
    }
    if heads.iter().any(ExpVec::is_one) {
        return Ok(vec![LiftedElement {
            source: LiftSource::Unit,
            poly: NcPoly::monomial(Word::empty(), F::one()),
        }]);
    }
    for (a, ha) in heads.iter().enumerate() {
        if heads.iter().enumerate().any(|(b, hb)| a != b && hb.divides(ha)) {
            return Err(Error::InvalidArgument(format!(
                "lift input is not a reduced basis: {ha} is redundant"
            )));
        }
    }
    let ideal = MonomialIdeal::new(n, heads.iter().cloned())?;

    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..j {
            out.push(LiftedElement {
                source: LiftSource::Commutator { high: j, low: i },
                poly: commutator(j, i),
            });
        }
    }
    for (index, (g, lm)) in basis.iter().zip(&heads).enumerate() {
        match u_set(&ideal, lm, order, degree_cap)? {
            USet::Finite(us) => {
                for u in us {
                    let shifted = CPoly::from_terms(g.terms().map(|(m, c)| (m.mul(&u), c.clone())));
                    out.push(LiftedElement {
                        source: LiftSource::Entry { index, multiplier: u },
                        poly: delta(&shifted).monic(order),
                    });
                }
            }
            USet::Infinite { variable, .. } => {
                return Err(Error::InfiniteUSet {
                    monomial: lm.clone(),
                    variable,
                });
            }
        }
    }
    Ok(out)
}

/// [`eps_lift_detailed`] without provenance, witness search capped at
/// degree 8.
pub fn eps_lift<F: Field>(basis: &[CPoly<F>], order: &OrderSpec) -> Result<Vec<NcPoly<F>>> {
    Ok(eps_lift_detailed(basis, order, 8)?
        .into_iter()
        .map(|e| e.poly)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::nc_is_groebner;
    use crate::kernel::{Rational, WordOrder};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn cp(terms: &[(i64, &[u32])]) -> CPoly<Rational> {
        CPoly::from_terms(terms.iter().map(|(c, e)| (ExpVec::new(e.to_vec()), q(*c))))
    }

    fn nc(terms: &[(i64, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(terms.iter().map(|(c, w)| (Word::new(w.to_vec()), q(*c))))
    }

    fn et(n: usize) -> OrderSpec {
        OrderSpec::grevlex(n).with_word_order(WordOrder::Et).unwrap()
    }

    #[test]
    fn empty_basis_gives_commutators() {
        let lift = eps_lift::<Rational>(&[], &et(3)).unwrap();
        assert_eq!(lift, vec![commutator(1, 0), commutator(2, 0), commutator(2, 1)]);
    }

    #[test]
    fn central_variable() {
        let lift = eps_lift(&[cp(&[(1, &[0, 0, 1])])], &et(3)).unwrap();
        assert_eq!(lift.len(), 4);
        assert_eq!(lift[3], nc(&[(1, &[2])]));
        assert!(nc_is_groebner(&lift, &et(3)).is_groebner());
    }

    #[test]
    fn sl2_graded_basis() {
        let monos: [&[u32]; 10] = [
            &[3, 0, 0],
            &[0, 3, 0],
            &[0, 0, 3],
            &[1, 0, 2],
            &[0, 1, 2],
            &[1, 1, 1],
            &[2, 1, 0],
            &[1, 2, 0],
            &[2, 0, 1],
            &[0, 2, 1],
        ];
        let basis: Vec<CPoly<Rational>> = monos.iter().map(|m| cp(&[(1, m)])).collect();
        let lift = eps_lift(&basis, &et(3)).unwrap();
        assert_eq!(lift.len(), 13);
        assert!(lift.contains(&nc(&[(1, &[0, 1, 2])])));
        assert!(lift.contains(&nc(&[(1, &[0, 0, 1])])));
        assert!(nc_is_groebner(&lift, &et(3)).is_groebner());
    }

    #[test]
    fn infinite_u_set_is_reported() {
        let err = eps_lift(&[cp(&[(1, &[1, 0, 1])])], &et(3)).unwrap_err();
        assert!(matches!(err, Error::InfiniteUSet { variable: 1, .. }));
    }

    #[test]
    fn nontrivial_u_set_is_groebner() {
        // x1 x3 with x2^2 present: U = {1, x2}
        let basis = [cp(&[(1, &[1, 0, 1])]), cp(&[(1, &[0, 2, 0])])];
        let lift = eps_lift_detailed(&basis, &et(3), 8).unwrap();
        assert_eq!(lift.len(), 6);
        assert!(lift.iter().any(|e| e.poly == nc(&[(1, &[0, 1, 2])])));
        let polys: Vec<_> = lift.into_iter().map(|e| e.poly).collect();
        assert!(nc_is_groebner(&polys, &et(3)).is_groebner());
    }

    #[test]
    fn unit_and_redundant_inputs() {
        assert_eq!(eps_lift(&[cp(&[(1, &[0, 0])])], &et(2)).unwrap(), vec![nc(&[(1, &[])])]);
        assert!(eps_lift(&[cp(&[(1, &[1, 0])]), cp(&[(1, &[2, 0])])], &et(2)).is_err());
    }
}
