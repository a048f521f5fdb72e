use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freealg::ambiguity::{ambiguities, one_step_reduct, Ambiguity};
use crate::freealg::reduce::{nc_interreduce, nc_normal_form};
use crate::kernel::{Field, OrderSpec, Word};
use crate::poly::NcPoly;

/// An ambiguity whose two one-step reducts have different normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityFailure<F: Field> {
    pub ambiguity: Ambiguity,
    pub first_nf: NcPoly<F>,
    pub second_nf: NcPoly<F>,
}

impl<F: Field> AmbiguityFailure<F> {
    pub fn difference(&self) -> NcPoly<F> {
        self.first_nf.sub(&self.second_nf)
    }
}

/// Outcome of the diamond-lemma check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerCertificate<F: Field> {
    pub ambiguities_checked: usize,
    /// First unresolved ambiguity in enumeration order, if any.
    pub failure: Option<AmbiguityFailure<F>>,
}

impl<F: Field> GroebnerCertificate<F> {
    pub fn is_groebner(&self) -> bool {
        self.failure.is_none()
    }
}

fn resolve<F: Field>(amb: &Ambiguity, basis: &[NcPoly<F>], order: &OrderSpec) -> Option<AmbiguityFailure<F>> {
    let r1 = one_step_reduct(&amb.word, &basis[amb.first], amb.first_offset, order);
    let r2 = one_step_reduct(&amb.word, &basis[amb.second], amb.second_offset, order);
    let n1 = nc_normal_form(&r1, basis, order);
    let n2 = nc_normal_form(&r2, basis, order);
    (n1 != n2).then(|| AmbiguityFailure {
        ambiguity: amb.clone(),
        first_nf: n1,
        second_nf: n2,
    })
}

/// Diamond-lemma confluence check: `basis` is a Gröbner basis of the
/// two-sided ideal it generates iff every ambiguity resolves.
pub fn nc_is_groebner<F: Field>(basis: &[NcPoly<F>], order: &OrderSpec) -> GroebnerCertificate<F> {
    let basis: Vec<NcPoly<F>> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    let amb = ambiguities(&basis, order);
    let failures: Vec<Option<AmbiguityFailure<F>>> = amb.par_iter().map(|a| resolve(a, &basis, order)).collect();
    GroebnerCertificate {
        ambiguities_checked: amb.len(),
        failure: failures.into_iter().flatten().next(),
    }
}

/// Result of [`nc_complete_bounded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion<F: Field> {
    /// Reduced monic basis, sorted by ascending leading word.
    pub basis: Vec<NcPoly<F>>,
    /// `true` when no ambiguity above the degree bound is unresolved, i.e.
    /// the basis is a Gröbner basis.
    pub complete: bool,
}

/// Degree-bounded Buchberger completion in the free algebra.
///
/// All ambiguities whose superposition has degree at most `max_degree` are
/// resolved; `complete` reports whether larger ones resolve as well.
/// `term_cap` bounds the total number of terms in the working basis.
pub fn nc_complete_bounded<F: Field>(
    gens: &[NcPoly<F>],
    order: &OrderSpec,
    max_degree: u32,
    term_cap: usize,
) -> Result<Completion<F>> {
    if !order.is_word_graded() {
        return Err(Error::InvalidOrder(
            "bounded completion needs a graded word ordering".into(),
        ));
    }
    let input_degree = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    if max_degree < input_degree {
        return Err(Error::InvalidArgument(format!(
            "degree bound {max_degree} is below the input degree {input_degree}"
        )));
    }
    let mut basis = nc_interreduce(gens, order);
    loop {
        check_cap(&basis, term_cap)?;
        let amb: Vec<Ambiguity> = ambiguities(&basis, order)
            .into_iter()
            .filter(|a| a.degree() <= max_degree)
            .collect();
        let residues: Vec<(u32, NcPoly<F>)> = amb
            .par_iter()
            .filter_map(|a| {
                let r1 = one_step_reduct(&a.word, &basis[a.first], a.first_offset, order);
                let r2 = one_step_reduct(&a.word, &basis[a.second], a.second_offset, order);
                let d = nc_normal_form(&r1.sub(&r2), &basis, order);
                (!d.is_zero()).then_some((a.degree(), d))
            })
            .collect();
        let Some(lowest) = residues.iter().map(|(d, _)| *d).min() else {
            break;
        };
        let mut grown = basis.clone();
        for (_, r) in residues.into_iter().filter(|(d, _)| *d == lowest) {
            let r = nc_normal_form(&r, &grown, order);
            if !r.is_zero() {
                grown.push(r.monic(order));
            }
        }
        basis = nc_interreduce(&grown, order);
    }
    let complete = ambiguities(&basis, order)
        .par_iter()
        .filter(|a| a.degree() > max_degree)
        .all(|a| resolve(a, &basis, order).is_none());
    Ok(Completion { basis, complete })
}

fn check_cap<F: Field>(basis: &[NcPoly<F>], term_cap: usize) -> Result<()> {
    let terms: usize = basis.iter().map(|g| g.len()).sum();
    if terms > term_cap {
        Err(Error::ResourceCap {
            stage: "completion",
            detail: format!("{terms} terms in the working basis exceed the cap of {term_cap}"),
        })
    } else {
        Ok(())
    }
}

/// Checks that every commutator `XjXi - XiXj` reduces to zero modulo `basis`,
/// i.e. that the quotient by the ideal it generates is commutative. `basis`
/// must already be a Gröbner basis.
pub fn graded_quotient_is_commutative<F: Field>(basis: &[NcPoly<F>], order: &OrderSpec) -> bool {
    let n = order.nvars() as u32;
    (0..n).all(|j| {
        (0..j).all(|i| {
            let c = NcPoly::from_terms([(Word::new(vec![j, i]), F::one()), (Word::new(vec![i, j]), -F::one())]);
            nc_normal_form(&c, basis, order).is_zero()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{CommOrder, Rational, WordOrder};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(terms: &[(i64, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(terms.iter().map(|(c, w)| (Word::new(w.to_vec()), q(*c))))
    }

    fn commutators(n: u32) -> Vec<NcPoly<Rational>> {
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..j {
                out.push(p(&[(1, &[j, i]), (-1, &[i, j])]));
            }
        }
        out
    }

    fn deglex(n: usize) -> OrderSpec {
        OrderSpec::new(CommOrder::Grlex, WordOrder::Deglex, (0..n).collect()).unwrap()
    }

    #[test]
    fn commutators_are_a_groebner_basis() {
        let cert = nc_is_groebner(&commutators(3), &OrderSpec::grevlex(3));
        assert!(cert.is_groebner());
        assert_eq!(cert.ambiguities_checked, 1);
    }

    #[test]
    fn failing_basis_reports_witness() {
        // {X^2 Y - X, X^2 - Y}
        let g = [p(&[(1, &[0, 0, 1]), (-1, &[0])]), p(&[(1, &[0, 0]), (-1, &[1])])];
        let cert = nc_is_groebner(&g, &deglex(2));
        let fail = cert.failure.expect("not a Groebner basis");
        let pair = [fail.first_nf.clone(), fail.second_nf.clone()];
        assert!(pair.contains(&p(&[(1, &[0])])));
        assert!(pair.contains(&p(&[(1, &[1, 1])])));
    }

    #[test]
    fn completion_keeps_a_resolved_input() {
        let o = deglex(2);
        let g = vec![p(&[(1, &[1, 0]), (-1, &[0, 1])]), p(&[(1, &[0, 0])])];
        let c = nc_complete_bounded(&g, &o, 4, 10_000).unwrap();
        assert!(c.complete);
        assert_eq!(c.basis.len(), 2);
        assert!(g.iter().all(|x| c.basis.contains(x)));

        let g = vec![p(&[(1, &[1, 0]), (-1, &[0, 1])]), p(&[(1, &[0, 0]), (1, &[1])])];
        let c = nc_complete_bounded(&g, &o, 4, 10_000).unwrap();
        assert!(c.complete);
        assert!(g.iter().all(|x| c.basis.contains(x)) && c.basis.len() == 2);
    }

    #[test]
    fn infinite_completion_is_flagged() {
        // letters ranked Y < X: X has rank 1, Y rank 0; relation X^2 - YX
        let o = OrderSpec::new(CommOrder::Grlex, WordOrder::Deglex, vec![1, 0]).unwrap();
        let g = vec![p(&[(1, &[0, 0]), (-1, &[1, 0])])];
        let c = nc_complete_bounded(&g, &o, 4, 10_000).unwrap();
        assert!(!c.complete);
        assert!(c.basis.contains(&p(&[(1, &[0, 1, 0]), (-1, &[1, 1, 0])])));
        assert!(c.basis.iter().all(|b| b.degree().unwrap() <= 4));
    }

    #[test]
    fn bound_below_input_degree_is_rejected() {
        let g = vec![p(&[(1, &[0, 0, 0])])];
        assert!(nc_complete_bounded(&g, &deglex(1), 2, 100).is_err());
    }

    #[test]
    fn term_cap_is_enforced() {
        let o = OrderSpec::new(CommOrder::Grlex, WordOrder::Deglex, vec![1, 0]).unwrap();
        let g = vec![p(&[(1, &[0, 0]), (-1, &[1, 0])])];
        assert!(matches!(
            nc_complete_bounded(&g, &o, 8, 5),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn graded_commutativity() {
        let o = OrderSpec::grevlex(3);
        assert!(graded_quotient_is_commutative(&commutators(3), &o));
        assert!(!graded_quotient_is_commutative(&[p(&[(1, &[0, 0, 0])])], &o));
    }
}
