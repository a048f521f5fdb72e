//! Left and two-sided Gröbner bases in an enveloping algebra.
//!
//! For a graded ordering the leading monomial of `X^m * g` is `m + LM(g)`
//! with coefficient `LC(g)`, since brackets lower the degree. Division and
//! S-polynomials therefore look commutative on the leading terms, with the
//! algebra product supplying the tails.

use crate::envalg::EnvelopingAlgebra;
use crate::error::{Error, Result};
use crate::kernel::{ExpVec, Field, OrderSpec};
use crate::poly::{PbwPoly, TermQueue};

fn heads<F: Field>(basis: &[PbwPoly<F>], order: &OrderSpec) -> Vec<Option<(ExpVec, F)>> {
    basis
        .iter()
        .map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.inv_nonzero())))
        .collect()
}

/// Left normal form: no remaining term is divisible by a leading monomial of
/// `basis`. `order` must be graded.
pub fn left_normal_form<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    f: &PbwPoly<F>,
    basis: &[PbwPoly<F>],
    order: &OrderSpec,
) -> PbwPoly<F> {
    let heads = heads(basis, order);
    let mut work = TermQueue::new(f, order);
    let mut result = PbwPoly::zero();
    while let Some((m, c)) = work.pop_max() {
        let hit = heads.iter().enumerate().find_map(|(i, h)| {
            let (lm, inv) = h.as_ref()?;
            lm.quotient_of(&m).map(|q| (i, q, c.clone() * inv.clone()))
        });
        match hit {
            Some((i, q, factor)) => {
                let prod = alg.mul(&PbwPoly::monomial(q, factor), &basis[i]);
                for (t, d) in prod.into_terms() {
                    if t != m {
                        work.add(t, -d, order);
                    }
                }
            }
            None => result.add_term(m, c),
        }
    }
    result
}

fn left_s_polynomial<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    f: &PbwPoly<F>,
    g: &PbwPoly<F>,
    order: &OrderSpec,
) -> PbwPoly<F> {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = mf.lcm(mg);
    let uf = PbwPoly::monomial(mf.quotient_of(&l).expect("lcm"), cf.inv_nonzero());
    let ug = PbwPoly::monomial(mg.quotient_of(&l).expect("lcm"), cg.inv_nonzero());
    alg.mul(&uf, f).sub(&alg.mul(&ug, g))
}

/// Caps for [`two_sided_groebner`].
#[derive(Clone, Copy, Debug)]
pub struct TwoSidedLimits {
    /// Largest number of basis elements kept before giving up.
    pub max_basis: usize,
    /// Largest number of S-polynomial and closure reductions.
    pub max_reductions: usize,
}

impl Default for TwoSidedLimits {
    fn default() -> Self {
        TwoSidedLimits {
            max_basis: 2_000,
            max_reductions: 200_000,
        }
    }
}

struct LeftBasis<'a, F: Field> {
    alg: &'a EnvelopingAlgebra<F>,
    order: &'a OrderSpec,
    elems: Vec<PbwPoly<F>>,
    pairs: Vec<(usize, usize, ExpVec)>,
    limits: TwoSidedLimits,
    reductions: usize,
}

impl<F: Field> LeftBasis<'_, F> {
    fn reduce(&mut self, f: &PbwPoly<F>) -> Result<PbwPoly<F>> {
        self.reductions += 1;
        if self.reductions > self.limits.max_reductions {
            return Err(Error::ResourceCap {
                stage: "twostd",
                detail: format!("more than {} reductions", self.limits.max_reductions),
            });
        }
        Ok(left_normal_form(self.alg, f, &self.elems, self.order))
    }

    /// Reduces `f` and adds it when nonzero; returns whether it was added.
    fn insert(&mut self, f: &PbwPoly<F>) -> Result<bool> {
        let r = self.reduce(f)?;
        if r.is_zero() {
            return Ok(false);
        }
        let r = r.monic(self.order);
        let lm = r.leading_monomial(self.order).expect("nonzero").clone();
        let j = self.elems.len();
        for (i, g) in self.elems.iter().enumerate() {
            self.pairs
                .push((i, j, g.leading_monomial(self.order).expect("nonzero").lcm(&lm)));
        }
        self.elems.push(r);
        if self.elems.len() > self.limits.max_basis {
            return Err(Error::ResourceCap {
                stage: "twostd",
                detail: format!("basis grew beyond {} elements", self.limits.max_basis),
            });
        }
        Ok(true)
    }

    fn complete(&mut self) -> Result<()> {
        while let Some(pos) = self.next_pair() {
            let (i, j, _) = self.pairs.swap_remove(pos);
            let s = left_s_polynomial(self.alg, &self.elems[i], &self.elems[j], self.order);
            self.insert(&s)?;
        }
        Ok(())
    }

    fn next_pair(&self) -> Option<usize> {
        self.pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.2.degree()
                    .cmp(&b.2.degree())
                    .then_with(|| self.order.cmp_exp(&a.2, &b.2))
                    .then_with(|| (a.1, a.0).cmp(&(b.1, b.0)))
            })
            .map(|(k, _)| k)
    }
}

/// Reduced monic form of a left Gröbner basis, sorted by ascending leading
/// monomial.
pub fn left_interreduce<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    basis: &[PbwPoly<F>],
    order: &OrderSpec,
) -> Vec<PbwPoly<F>> {
    let mut gens: Vec<PbwPoly<F>> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    gens.sort_by(|a, b| {
        order.cmp_exp(
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    let mut minimal: Vec<PbwPoly<F>> = Vec::new();
    for g in gens {
        let lm = g.leading_monomial(order).expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial(order).expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    (0..minimal.len())
        .map(|k| {
            let lm = minimal[k].leading_monomial(order).expect("nonzero").clone();
            let others: Vec<PbwPoly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, g)| g.clone())
                .collect();
            let tail = minimal[k].sub(&PbwPoly::monomial(lm.clone(), F::one()));
            let mut g = left_normal_form(alg, &tail, &others, order);
            g.add_term(lm, F::one());
            g
        })
        .collect()
}

/// Left Gröbner basis of the left ideal generated by `gens`, reduced.
pub fn left_groebner<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    gens: &[PbwPoly<F>],
    order: &OrderSpec,
    limits: TwoSidedLimits,
) -> Result<Vec<PbwPoly<F>>> {
    order.require_graded()?;
    let mut lb = LeftBasis {
        alg,
        order,
        elems: Vec::new(),
        pairs: Vec::new(),
        limits,
        reductions: 0,
    };
    for g in gens {
        lb.insert(g)?;
    }
    lb.complete()?;
    Ok(left_interreduce(alg, &lb.elems, order))
}

/// Two-sided Gröbner basis of the two-sided ideal generated by `gens`:
/// left completion alternated with closure under right multiplication by
/// the generators until nothing new appears. Reduced and monic.
pub fn two_sided_groebner<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    gens: &[PbwPoly<F>],
    order: &OrderSpec,
    limits: TwoSidedLimits,
) -> Result<Vec<PbwPoly<F>>> {
    order.require_graded()?;
    if order.nvars() != alg.nvars() {
        return Err(Error::LengthMismatch {
            expected: alg.nvars(),
            found: order.nvars(),
        });
    }
    for g in gens {
        if let Some((m, _)) = g.terms().next() {
            m.check_len(alg.nvars())?;
        }
    }
    let mut lb = LeftBasis {
        alg,
        order,
        elems: Vec::new(),
        pairs: Vec::new(),
        limits,
        reductions: 0,
    };
    for g in gens {
        lb.insert(g)?;
    }
    loop {
        lb.complete()?;
        let mut grew = false;
        let snapshot = lb.elems.clone();
        for g in &snapshot {
            for i in 0..alg.nvars() {
                let right = alg.poly_times_generator(g, i);
                grew |= lb.insert(&right)?;
            }
        }
        if !grew {
            break;
        }
    }
    Ok(left_interreduce(alg, &lb.elems, order))
}

/// Checks the defining properties of a two-sided Gröbner basis: every left
/// S-polynomial and every product `g * Xi` and `Xi * g` left-reduces to zero.
pub fn is_two_sided_groebner<F: Field>(alg: &EnvelopingAlgebra<F>, basis: &[PbwPoly<F>], order: &OrderSpec) -> bool {
    let basis: Vec<PbwPoly<F>> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let zero = |f: &PbwPoly<F>| left_normal_form(alg, f, &basis, order).is_zero();
    for (a, f) in basis.iter().enumerate() {
        for g in &basis[a + 1..] {
            if !zero(&left_s_polynomial(alg, f, g, order)) {
                return false;
            }
        }
        for i in 0..alg.nvars() {
            if !zero(&alg.poly_times_generator(f, i)) || !zero(&alg.mul(&alg.generator(i), f)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compoly::c_buchberger;
    use crate::envalg::LieStructure;
    use crate::kernel::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn pb(terms: &[(Rational, &[u32])]) -> PbwPoly<Rational> {
        PbwPoly::from_terms(terms.iter().map(|(c, e)| (ExpVec::new(e.to_vec()), c.clone())))
    }

    fn i(n: i64) -> Rational {
        q(n, 1)
    }

    #[test]
    fn left_reduction_examples() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let o = OrderSpec::grevlex(3);
        let f = pb(&[(i(1), &[2, 1, 0])]);
        let g = pb(&[(i(1), &[2, 1, 0]), (i(-1), &[1, 0, 1]), (i(-2), &[1, 0, 0])]);
        assert_eq!(
            left_normal_form(&u, &f, &[g], &o),
            pb(&[(i(1), &[1, 0, 1]), (i(2), &[1, 0, 0])])
        );
        let f = pb(&[(i(1), &[0, 0, 3])]);
        let g = pb(&[(i(1), &[0, 0, 3]), (i(-4), &[0, 0, 1])]);
        assert_eq!(left_normal_form(&u, &f, &[g], &o), pb(&[(i(4), &[0, 0, 1])]));
        let f = pb(&[(i(1), &[1, 1, 1])]);
        let g = pb(&[(i(2), &[1, 1, 1]), (i(-1), &[0, 0, 2]), (i(-2), &[0, 0, 1])]);
        assert_eq!(
            left_normal_form(&u, &f, &[g], &o),
            pb(&[(q(1, 2), &[0, 0, 2]), (i(1), &[0, 0, 1])])
        );
    }

    #[test]
    fn sl2_two_sided_basis() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let o = OrderSpec::grevlex(3);
        let gens = [
            pb(&[(i(1), &[3, 0, 0])]),
            pb(&[(i(1), &[0, 3, 0])]),
            pb(&[(i(1), &[0, 0, 3]), (i(-4), &[0, 0, 1])]),
        ];
        let gb = two_sided_groebner(&u, &gens, &o, TwoSidedLimits::default()).unwrap();
        let expected = [
            pb(&[(i(1), &[3, 0, 0])]),
            pb(&[(i(1), &[0, 3, 0])]),
            pb(&[(i(1), &[0, 0, 3]), (i(-4), &[0, 0, 1])]),
            pb(&[(i(1), &[1, 0, 2]), (i(2), &[1, 0, 1])]),
            pb(&[(i(1), &[0, 1, 2]), (i(-2), &[0, 1, 1])]),
            pb(&[(i(1), &[1, 1, 1]), (q(-1, 2), &[0, 0, 2]), (i(-1), &[0, 0, 1])]),
            pb(&[(i(1), &[2, 1, 0]), (i(-1), &[1, 0, 1]), (i(-2), &[1, 0, 0])]),
            pb(&[(i(1), &[1, 2, 0]), (i(-1), &[0, 1, 1])]),
            pb(&[(i(1), &[2, 0, 1]), (i(2), &[2, 0, 0])]),
            pb(&[(i(1), &[0, 2, 1]), (i(-2), &[0, 2, 0])]),
        ];
        assert_eq!(gb.len(), 10);
        assert!(is_two_sided_groebner(&u, &gb, &o));
        assert!(!is_two_sided_groebner(&u, &gens, &o));
        for g in &expected {
            assert!(gb.contains(g), "missing {g:?}");
        }
    }

    #[test]
    fn heisenberg_central_unit() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::heisenberg());
        let o = OrderSpec::grevlex(3);
        let g = pb(&[(i(1), &[0, 0, 1]), (i(-1), &[0, 0, 0])]);
        let gb = two_sided_groebner(&u, std::slice::from_ref(&g), &o, TwoSidedLimits::default()).unwrap();
        assert_eq!(gb, vec![g]);
    }

    #[test]
    fn abelian_case_is_commutative_buchberger() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::abelian(2));
        let o = OrderSpec::grevlex(2);
        let f = pb(&[(i(1), &[2, 0]), (i(-1), &[0, 1])]);
        let gb = two_sided_groebner(&u, std::slice::from_ref(&f), &o, TwoSidedLimits::default()).unwrap();
        assert_eq!(gb, c_buchberger(&[f], &o, true));
    }

    #[test]
    fn non_graded_orders_are_rejected() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::abelian(2));
        let o = OrderSpec::standard(crate::kernel::CommOrder::Lex, 2);
        assert!(two_sided_groebner(&u, &[], &o, TwoSidedLimits::default()).is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let u = EnvelopingAlgebra::new(LieStructure::<Rational>::sl2());
        let o = OrderSpec::grevlex(3);
        let gens = [pb(&[(i(1), &[3, 0, 0])])];
        let tight = TwoSidedLimits {
            max_basis: 2,
            max_reductions: 1_000,
        };
        assert!(matches!(
            two_sided_groebner(&u, &gens, &o, tight),
            Err(Error::ResourceCap { .. })
        ));
    }
}
