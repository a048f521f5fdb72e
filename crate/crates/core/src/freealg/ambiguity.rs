use crate::kernel::{Field, OrderSpec, Word};
use crate::poly::NcPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AmbiguityKind {
    /// A proper suffix of the first leading word is a prefix of the second.
    Overlap,
    /// The second leading word occurs inside the first.
    Inclusion,
}

/// A word containing the leading words of `basis[first]` and
/// `basis[second]` at the given offsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambiguity {
    pub first: usize,
    pub second: usize,
    pub kind: AmbiguityKind,
    pub word: Word,
    pub first_offset: usize,
    pub second_offset: usize,
}

impl Ambiguity {
    pub fn degree(&self) -> u32 {
        self.word.degree()
    }
}

/// All overlap ambiguities (self-overlaps included) and all inclusion
/// ambiguities among the leading words of `basis`. An inclusion is listed
/// once per occurrence; two members with the same leading word give a single
/// inclusion from the lower index.
pub fn ambiguities<F: Field>(basis: &[NcPoly<F>], order: &OrderSpec) -> Vec<Ambiguity> {
    let words: Vec<Option<Word>> = basis.iter().map(|g| g.leading_monomial(order).cloned()).collect();
    let mut out = Vec::new();
    for (a, wa) in words.iter().enumerate() {
        let Some(wa) = wa else { continue };
        for (b, wb) in words.iter().enumerate() {
            let Some(wb) = wb else { continue };
            if a != b && wb.len() <= wa.len() && !(wa == wb && b < a) {
                for p in wa.occurrences(wb) {
                    out.push(Ambiguity {
                        first: a,
                        second: b,
                        kind: AmbiguityKind::Inclusion,
                        word: wa.clone(),
                        first_offset: 0,
                        second_offset: p,
                    });
                }
            }
            let (la, lb) = (wa.len(), wb.len());
            for k in (1..la.min(lb)).rev() {
                if wa.letters()[la - k..] == wb.letters()[..k] {
                    out.push(Ambiguity {
                        first: a,
                        second: b,
                        kind: AmbiguityKind::Overlap,
                        word: wa.concat(&wb.slice(k, lb)),
                        first_offset: 0,
                        second_offset: la - k,
                    });
                }
            }
        }
    }
    out
}

/// The reduct of `word` obtained by rewriting the leading word of `g` at
/// `offset`: `word - left * g * right / LC(g)`.
pub(crate) fn one_step_reduct<F: Field>(word: &Word, g: &NcPoly<F>, offset: usize, order: &OrderSpec) -> NcPoly<F> {
    let (lw, lc) = g.leading(order).expect("nonzero");
    let left = word.slice(0, offset);
    let right = word.slice(offset + lw.len(), word.len());
    NcPoly::monomial(word.clone(), F::one()).sub(&g.sandwich(&left, &right, &lc.inv_nonzero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn p(terms: &[(i64, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(terms.iter().map(|(c, w)| (Word::new(w.to_vec()), q(*c))))
    }

    #[test]
    fn single_commutator_has_no_ambiguity() {
        let o = OrderSpec::grevlex(2);
        assert!(ambiguities(&[p(&[(1, &[1, 0]), (-1, &[0, 1])])], &o).is_empty());
    }

    #[test]
    fn three_commutators_overlap_once() {
        let o = OrderSpec::grevlex(3);
        let g = [
            p(&[(1, &[1, 0]), (-1, &[0, 1])]),
            p(&[(1, &[2, 0]), (-1, &[0, 2])]),
            p(&[(1, &[2, 1]), (-1, &[1, 2])]),
        ];
        let amb = ambiguities(&g, &o);
        assert_eq!(amb.len(), 1);
        assert_eq!(amb[0].kind, AmbiguityKind::Overlap);
        assert_eq!(amb[0].word, Word::new(vec![2, 1, 0]));
        assert_eq!((amb[0].first, amb[0].second), (2, 0));
    }

    #[test]
    fn powers_of_one_letter() {
        let o = OrderSpec::grevlex(1);
        let g = [p(&[(1, &[0, 0])]), p(&[(1, &[0, 0, 0])])];
        let amb = ambiguities(&g, &o);
        let inclusions: Vec<_> = amb.iter().filter(|a| a.kind == AmbiguityKind::Inclusion).collect();
        assert!(inclusions
            .iter()
            .all(|a| (a.first, a.second) == (1, 0) && a.word.len() == 3));
        assert_eq!(
            inclusions.iter().map(|a| a.second_offset).collect::<Vec<_>>(),
            vec![0, 1]
        );
        // overlap lengths: X^2.X^2 {1}, X^2.X^3 {1}, X^3.X^2 {1}, X^3.X^3 {1, 2}
        assert_eq!(amb.len() - inclusions.len(), 5);
        for a in &amb {
            let wa = g[a.first].leading_monomial(&o).unwrap();
            let wb = g[a.second].leading_monomial(&o).unwrap();
            assert_eq!(a.word.slice(a.first_offset, a.first_offset + wa.len()), *wa);
            assert_eq!(a.word.slice(a.second_offset, a.second_offset + wb.len()), *wb);
        }
    }
}
