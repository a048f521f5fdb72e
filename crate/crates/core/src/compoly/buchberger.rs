use std::cmp::Ordering;

use crate::compoly::c_normal_form;
use crate::kernel::{ExpVec, Field, OrderSpec};
use crate::poly::CPoly;

/// `lcm/LM(f) * f / LC(f) - lcm/LM(g) * g / LC(g)`.
pub fn s_polynomial<F: Field>(f: &CPoly<F>, g: &CPoly<F>, order: &OrderSpec) -> CPoly<F> {
    let (mf, cf) = f.leading(order).expect("nonzero");
    let (mg, cg) = g.leading(order).expect("nonzero");
    let l = mf.lcm(mg);
    let uf = mf.quotient_of(&l).expect("lcm");
    let ug = mg.quotient_of(&l).expect("lcm");
    let n = l.nvars();
    let one = ExpVec::one(n);
    f.sandwich(&uf, &one, &cf.inv_nonzero())
        .sub(&g.sandwich(&ug, &one, &cg.inv_nonzero()))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: ExpVec,
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime-leading-monomial criterion.
///
/// With `reduce` the result is the reduced basis, sorted by ascending
/// leading monomial. Otherwise the monic basis in order of discovery.
pub fn c_buchberger<F: Field>(input: &[CPoly<F>], order: &OrderSpec, reduce: bool) -> Vec<CPoly<F>> {
    let mut basis: Vec<CPoly<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let push = |basis: &mut Vec<CPoly<F>>, pairs: &mut Vec<Pair>, p: CPoly<F>| {
        let p = p.monic(order);
        let lm = p.leading_monomial(order).expect("nonzero").clone();
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gm = g.leading_monomial(order).expect("nonzero");
            pairs.push(Pair { i, j, lcm: gm.lcm(&lm) });
        }
        basis.push(p);
    };

    for f in input {
        let r = c_normal_form(f, &basis, order);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }

    // smallest lcm under the (graded) order first; ties by pair index
    while let Some(pos) = pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| {
            a.lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| order.cmp_exp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
        })
        .map(|(k, _)| k)
    {
        let pair = pairs.swap_remove(pos);
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let li = fi.leading_monomial(order).expect("nonzero");
        let lj = fj.leading_monomial(order).expect("nonzero");
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(fi, fj, order);
        let r = c_normal_form(&s, &basis, order);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r);
        }
    }

    if reduce {
        c_interreduce(&basis, order)
    } else {
        basis
    }
}

/// Reduced form of a Gröbner basis: drops elements with redundant leading
/// monomials, tail-reduces the rest, makes them monic and sorts by
/// ascending leading monomial.
pub fn c_interreduce<F: Field>(basis: &[CPoly<F>], order: &OrderSpec) -> Vec<CPoly<F>> {
    let mut gens: Vec<CPoly<F>> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    gens.sort_by(|a, b| cmp_leading(a, b, order));
    let mut minimal: Vec<CPoly<F>> = Vec::new();
    for g in gens {
        let lm = g.leading_monomial(order).expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial(order).expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let (lm, _) = minimal[k].leading(order).expect("nonzero");
        let others: Vec<CPoly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let tail = minimal[k].sub(&CPoly::monomial(lm.clone(), F::one()));
        let tail = c_normal_form(&tail, &others, order);
        let mut g = tail;
        g.add_term(lm.clone(), F::one());
        reduced.push(g);
    }
    reduced
}

fn cmp_leading<F: Field>(a: &CPoly<F>, b: &CPoly<F>, order: &OrderSpec) -> Ordering {
    order.cmp_exp(
        a.leading_monomial(order).expect("nonzero"),
        b.leading_monomial(order).expect("nonzero"),
    )
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
    fn linear_system_lex() {
        // lex x > y > z: variables (x, y, z) have ranks (2, 1, 0)
        let o = OrderSpec::new(CommOrder::Lex, WordOrder::Deglex, vec![2, 1, 0]).unwrap();
        let f = [
            p(&[(1, &[1, 0, 0]), (-1, &[0, 1, 0])]),
            p(&[(1, &[0, 1, 0]), (-1, &[0, 0, 1])]),
        ];
        let gb = c_buchberger(&f, &o, true);
        let mut expected = vec![
            p(&[(1, &[0, 1, 0]), (-1, &[0, 0, 1])]),
            p(&[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]),
        ];
        expected.sort_by(|a, b| cmp_leading(a, b, &o));
        assert_eq!(gb, expected);
    }

    #[test]
    fn single_s_polynomial_adds_y_cubed() {
        // grevlex with x > y
        let o = OrderSpec::new(CommOrder::Grevlex, WordOrder::Et, vec![1, 0]).unwrap();
        let f = [p(&[(1, &[2, 0]), (1, &[0, 2])]), p(&[(1, &[1, 1])])];
        let gb = c_buchberger(&f, &o, true);
        assert_eq!(gb.len(), 3);
        assert!(gb.contains(&f[0]));
        assert!(gb.contains(&f[1]));
        assert!(gb.contains(&p(&[(1, &[0, 3])])));
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let o = OrderSpec::grevlex(3);
        let mons: [&[u32]; 10] = [
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
        let f: Vec<_> = mons.iter().map(|e| p(&[(1, e)])).collect();
        let gb = c_buchberger(&f, &o, true);
        assert_eq!(gb.len(), 10);
        for g in &f {
            assert!(gb.contains(g));
        }
    }
}
