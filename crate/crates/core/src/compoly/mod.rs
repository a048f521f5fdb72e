//! Commutative polynomials: division, Buchberger's algorithm, monomial
//! ideals and linear changes of variables.

mod buchberger;
mod ideal;
mod linear;

pub use buchberger::{c_buchberger, c_interreduce, s_polynomial};
pub use ideal::{mi_member, u_set, MonomialIdeal, USet};
pub use linear::{apply_linear_change, determinant, invert_matrix, Matrix};

use crate::kernel::{ExpVec, Field, OrderSpec};
use crate::poly::{CPoly, TermQueue};

/// Full reduction of `f` modulo `basis`, tracking quotients:
/// `f = sum(quotients[i] * basis[i]) + remainder`.
pub fn c_divide<F: Field>(f: &CPoly<F>, basis: &[CPoly<F>], order: &OrderSpec) -> (Vec<CPoly<F>>, CPoly<F>) {
    let heads: Vec<Option<(ExpVec, F)>> = basis
        .iter()
        .map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.inv_nonzero())))
        .collect();
    let mut quotients = vec![CPoly::zero(); basis.len()];
    let mut remainder = CPoly::zero();
    let mut work = TermQueue::new(f, order);
    while let Some((m, c)) = work.pop_max() {
        let hit = heads.iter().enumerate().find_map(|(i, h)| {
            let (lm, inv) = h.as_ref()?;
            lm.quotient_of(&m).map(|q| (i, q, c.clone() * inv.clone()))
        });
        match hit {
            Some((i, q, factor)) => {
                let lm = &heads[i].as_ref().expect("head").0;
                for (t, d) in basis[i].terms() {
                    if t != lm {
                        work.add(t.mul(&q), -(factor.clone() * d.clone()), order);
                    }
                }
                quotients[i].add_term(q, factor);
            }
            None => remainder.add_term(m, c),
        }
    }
    (quotients, remainder)
}

/// Remainder of `f` after full reduction modulo `basis`.
pub fn c_normal_form<F: Field>(f: &CPoly<F>, basis: &[CPoly<F>], order: &OrderSpec) -> CPoly<F> {
    c_divide(f, basis, order).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{CommOrder, Rational, WordOrder};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(terms: &[(i64, &[u32])]) -> CPoly<Rational> {
        CPoly::from_terms(terms.iter().map(|(c, e)| (ExpVec::new(e.to_vec()), q(*c))))
    }

    #[test]
    fn normal_form_examples() {
        let o = OrderSpec::grevlex(3);
        let x2y = p(&[(1, &[2, 1, 0])]);
        assert!(c_normal_form(&x2y, std::slice::from_ref(&x2y), &o).is_zero());
        let z = p(&[(1, &[0, 0, 1])]);
        let f = p(&[(1, &[0, 0, 3]), (-4, &[0, 0, 1])]);
        assert!(c_normal_form(&f, &[z], &o).is_zero());
    }

    #[test]
    fn one_step_reduction() {
        // NF(x y^2 + y, {x y - 1}) = 2y
        let o = OrderSpec::new(CommOrder::Grevlex, WordOrder::Et, vec![1, 0]).unwrap();
        let f = p(&[(1, &[1, 2]), (1, &[0, 1])]);
        let g = p(&[(1, &[1, 1]), (-1, &[0, 0])]);
        let (quot, rem) = c_divide(&f, std::slice::from_ref(&g), &o);
        assert_eq!(rem, p(&[(2, &[0, 1])]));
        assert_eq!(quot[0].product(&g).add(&rem), f);
    }
}
