use crate::compoly::c_divide;
use crate::envalg::{pbw_section, sigma, EnvelopingAlgebra, LieStructure};
use crate::error::{Error, Result};
use crate::kernel::{Field, OrderSpec, Word};
use crate::liftkit::eps::{eps_lift_detailed, LiftSource};
use crate::poly::{CPoly, NcPoly, PbwPoly};

/// The relations `XjXi - XiXj - [Xj, Xi]` for `j > i`, whose two-sided ideal
/// is the kernel of `K<X> -> U(g)`.
pub fn defining_relations<F: Field>(lie: &LieStructure<F>) -> Vec<NcPoly<F>> {
    let n = lie.dim();
    let mut out = Vec::new();
    for j in 0..n {
        for i in 0..j {
            out.push(tailed_commutator(lie, j, i));
        }
    }
    out
}

fn tailed_commutator<F: Field>(lie: &LieStructure<F>, j: usize, i: usize) -> NcPoly<F> {
    let mut p = super::eps::commutator::<F>(j, i);
    for (k, c) in lie.bracket(j, i).iter().enumerate() {
        if !c.is_zero() {
            p.add_term(Word::letter(k as u32), -c.clone());
        }
    }
    p
}

/// Pairs every element of the reduced basis `reduced` of the symbol ideal
/// with an element of the ideal whose symbol is exactly that element.
///
/// `basis` must be a two-sided Gröbner basis in `alg` for a graded order, so
/// that its symbols form a Gröbner basis of the symbol ideal.
pub fn pair_preimages<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    reduced: &[CPoly<F>],
    basis: &[PbwPoly<F>],
    order: &OrderSpec,
) -> Result<Vec<(CPoly<F>, PbwPoly<F>)>> {
    let symbols = basis.iter().map(sigma).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(reduced.len());
    for gbar in reduced {
        let direct = symbols.iter().zip(basis).find_map(|(s, g)| {
            let lc = s.leading_coeff(order)?;
            let target = gbar.leading_coeff(order)?;
            let c = lc.clone() * target.inv_nonzero();
            (s.scale(&c.inv_nonzero()) == *gbar).then(|| g.scale(&c.inv_nonzero()))
        });
        let g = match direct {
            Some(g) => g,
            None => {
                let (quotients, remainder) = c_divide(gbar, &symbols, order);
                if !remainder.is_zero() {
                    return Err(Error::VerificationFailed(format!(
                        "symbol {} is not in the ideal of symbols",
                        gbar.render_with(order, |m| m.to_string())
                    )));
                }
                quotients
                    .iter()
                    .zip(basis)
                    .filter(|(qj, _)| !qj.is_zero())
                    .fold(PbwPoly::zero(), |acc, (qj, gj)| acc.add(&alg.mul(qj, gj)))
            }
        };
        out.push((gbar.clone(), g));
    }
    Ok(out)
}

/// Filtered lift: attaches lower-order tails to the homogeneous lift of the
/// symbols in `pairs`, producing a Gröbner basis of the ideal of the free
/// algebra whose image in `U(g)` is the ideal containing the preimages.
///
/// Each commutator becomes the defining relation `XjXi - XiXj - [Xj, Xi]`,
/// and the entry for `u * gbar` becomes the ordered section of `X^u * g`.
/// The output is aligned with the homogeneous lift, element by element.
pub fn filtered_lift<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    pairs: &[(CPoly<F>, PbwPoly<F>)],
    order: &OrderSpec,
) -> Result<Vec<NcPoly<F>>> {
    for (gbar, g) in pairs {
        let s = sigma(g)?;
        if s != *gbar {
            return Err(Error::SymbolMismatch {
                expected: gbar.render_with(order, |m| m.to_string()),
                found: s.render_with(order, |m| m.to_string()),
            });
        }
    }
    let reduced: Vec<CPoly<F>> = pairs.iter().map(|(gbar, _)| gbar.clone()).collect();
    let homogeneous = eps_lift_detailed(&reduced, order, 8)?;
    let out = homogeneous
        .into_iter()
        .map(|e| match e.source {
            LiftSource::Commutator { high, low } => tailed_commutator(alg.lie(), high, low),
            LiftSource::Entry { index, multiplier } => {
                let u = PbwPoly::monomial(multiplier, F::one());
                pbw_section(&alg.mul(&u, &pairs[index].1)).monic(order)
            }
            LiftSource::Unit => e.poly,
        })
        .collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::envalg::free_to_pbw;
    use crate::freealg::lh;
    use crate::kernel::{ExpVec, Rational, WordOrder};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn nc(terms: &[(i64, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(terms.iter().map(|(c, w)| (Word::new(w.to_vec()), q(*c))))
    }

    fn pb(terms: &[(i64, &[u32])]) -> PbwPoly<Rational> {
        PbwPoly::from_terms(terms.iter().map(|(c, e)| (ExpVec::new(e.to_vec()), q(*c))))
    }

    fn et(n: usize) -> OrderSpec {
        OrderSpec::grevlex(n).with_word_order(WordOrder::Et).unwrap()
    }

    #[test]
    fn sl2_relations_carry_tails() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let rel = defining_relations(u.lie());
        assert_eq!(rel[0], nc(&[(1, &[1, 0]), (-1, &[0, 1]), (1, &[2])]));
        assert_eq!(rel[1], nc(&[(1, &[2, 0]), (-1, &[0, 2]), (-2, &[0])]));
        assert_eq!(rel[2], nc(&[(1, &[2, 1]), (-1, &[1, 2]), (2, &[1])]));
        for r in &rel {
            assert!(free_to_pbw(&u, r).unwrap().is_zero());
        }
        assert!(!free_to_pbw(&u, &nc(&[(1, &[1, 0]), (-1, &[0, 1])])).unwrap().is_zero());
    }

    #[test]
    fn lift_matches_symbols() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let o = et(3);
        let g = pb(&[(1, &[1, 2, 0]), (-1, &[0, 1, 1])]);
        let pairs = vec![(sigma(&g).unwrap(), g)];
        let lift = filtered_lift(&u, &pairs, &o).unwrap();
        assert_eq!(lift[3], nc(&[(1, &[0, 1, 1]), (-1, &[1, 2])]));
        assert_eq!(lh(&lift[3]).unwrap(), nc(&[(1, &[0, 1, 1])]));
    }

    #[test]
    fn abelian_lift_has_no_tails() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::abelian(2));
        let g = pb(&[(1, &[2, 0])]);
        let lift = filtered_lift(&u, &[(sigma(&g).unwrap(), g)], &et(2)).unwrap();
        assert_eq!(lift, vec![nc(&[(1, &[1, 0]), (-1, &[0, 1])]), nc(&[(1, &[0, 0])])]);
    }

    #[test]
    fn symbol_mismatch_is_rejected() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let g = pb(&[(1, &[2, 0, 0])]);
        let wrong = sigma(&pb(&[(1, &[0, 2, 0])])).unwrap();
        assert!(matches!(
            filtered_lift(&u, &[(wrong, g)], &et(3)),
            Err(Error::SymbolMismatch { .. })
        ));
    }

    #[test]
    fn preimages_through_quotients() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let o = et(3);
        // symbols x^2 and x^2 + x y; the reduced symbol basis is {x^2, x y}
        let basis = vec![
            pb(&[(1, &[2, 0, 0])]),
            pb(&[(1, &[2, 0, 0]), (1, &[1, 1, 0]), (1, &[0, 0, 1])]),
        ];
        let reduced = vec![sigma(&pb(&[(1, &[1, 1, 0])])).unwrap()];
        let pairs = pair_preimages(&u, &reduced, &basis, &o).unwrap();
        assert_eq!(sigma(&pairs[0].1).unwrap(), reduced[0]);
        assert_eq!(pairs[0].1, pb(&[(1, &[1, 1, 0]), (1, &[0, 0, 1])]));
    }
}
