use crate::kernel::{Field, OrderSpec, Word};
use crate::poly::{NcPoly, TermQueue};

/// Leading word and inverse leading coefficient of each nonzero member.
pub(crate) struct Heads<F: Field> {
    heads: Vec<Option<(Word, F)>>,
}

impl<F: Field> Heads<F> {
    pub fn new(basis: &[NcPoly<F>], order: &OrderSpec) -> Self {
        Heads {
            heads: basis
                .iter()
                .map(|g| g.leading(order).map(|(w, c)| (w.clone(), c.inv_nonzero())))
                .collect(),
        }
    }

    /// Leftmost occurrence of any leading word in `w`, smallest basis index
    /// at that position.
    pub fn find(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.letters();
        for pos in 0..letters.len() {
            for (i, h) in self.heads.iter().enumerate() {
                let Some((lw, _)) = h else { continue };
                let k = lw.len();
                if pos + k <= letters.len() && letters[pos..pos + k] == *lw.letters() {
                    return Some((pos, i));
                }
            }
        }
        // the empty word divides everything, including the empty word
        self.heads
            .iter()
            .position(|h| matches!(h, Some((lw, _)) if lw.is_empty()))
            .map(|i| (0, i))
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.heads[i].as_ref().expect("nonzero member").0
    }

    pub fn inv_lc(&self, i: usize) -> &F {
        &self.heads[i].as_ref().expect("nonzero member").1
    }
}

/// One rewriting step recorded by [`nc_normal_form_with_cofactors`]: the
/// reduction subtracted `coeff * left * basis[index] * right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor<F: Field> {
    pub coeff: F,
    pub left: Word,
    pub index: usize,
    pub right: Word,
}

fn reduce<F: Field>(
    f: &NcPoly<F>,
    basis: &[NcPoly<F>],
    order: &OrderSpec,
    mut record: Option<&mut Vec<Cofactor<F>>>,
) -> NcPoly<F> {
    let heads = Heads::new(basis, order);
    let mut work = TermQueue::new(f, order);
    let mut result = NcPoly::zero();
    while let Some((w, c)) = work.pop_max() {
        match heads.find(&w) {
            Some((pos, i)) => {
                let lw = heads.word(i);
                let left = w.slice(0, pos);
                let right = w.slice(pos + lw.len(), w.len());
                let factor = c * heads.inv_lc(i).clone();
                for (t, d) in basis[i].terms() {
                    if t != lw {
                        work.add(left.concat(t).concat(&right), -(factor.clone() * d.clone()), order);
                    }
                }
                if let Some(rec) = record.as_deref_mut() {
                    rec.push(Cofactor {
                        coeff: factor,
                        left,
                        index: i,
                        right,
                    });
                }
            }
            None => result.add_term(w, c),
        }
    }
    result
}

/// Two-sided normal form: repeatedly rewrites the largest reducible term at
/// its leftmost occurrence of a leading word, using the smallest matching
/// basis index. Terminates for graded orders.
pub fn nc_normal_form<F: Field>(f: &NcPoly<F>, basis: &[NcPoly<F>], order: &OrderSpec) -> NcPoly<F> {
    reduce(f, basis, order, None)
}

/// Normal form together with the rewriting steps, so that
/// `f - NF(f) = sum coeff * left * basis[index] * right`.
pub fn nc_normal_form_with_cofactors<F: Field>(
    f: &NcPoly<F>,
    basis: &[NcPoly<F>],
    order: &OrderSpec,
) -> (NcPoly<F>, Vec<Cofactor<F>>) {
    let mut rec = Vec::new();
    let nf = reduce(f, basis, order, Some(&mut rec));
    (nf, rec)
}

/// Reduces the tail of every element modulo the whole of `basis`, which must
/// be a Gröbner basis. Leading words are kept, so redundant elements stay;
/// the result is monic and sorted by ascending leading word.
pub fn nc_tail_reduce<F: Field>(basis: &[NcPoly<F>], order: &OrderSpec) -> Vec<NcPoly<F>> {
    let mut out: Vec<NcPoly<F>> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let g = g.monic(order);
            let lw = g.leading_monomial(order).expect("nonzero").clone();
            let tail = g.sub(&NcPoly::monomial(lw.clone(), F::one()));
            let mut r = nc_normal_form(&tail, basis, order);
            r.add_term(lw, F::one());
            r
        })
        .collect();
    out.sort_by(|a, b| {
        order.cmp_word(
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    out.dedup();
    out
}

/// Inter-reduces a generating set: every element monic, no term of any
/// element contains the leading word of another, sorted by ascending leading
/// word. Spans the same two-sided ideal.
pub fn nc_interreduce<F: Field>(gens: &[NcPoly<F>], order: &OrderSpec) -> Vec<NcPoly<F>> {
    let mut list: Vec<NcPoly<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(order)).collect();
    list.sort_by(|a, b| {
        order.cmp_word(
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    list.dedup();
    loop {
        let mut heads_changed = false;
        let mut i = 0;
        while i < list.len() {
            let g = list.remove(i);
            let r = nc_normal_form(&g, &list, order);
            if r.is_zero() {
                heads_changed = true;
                continue;
            }
            let r = r.monic(order);
            if r.leading_monomial(order) != g.leading_monomial(order) {
                heads_changed = true;
            }
            list.insert(i, r);
            i += 1;
        }
        if !heads_changed {
            break;
        }
    }
    list.sort_by(|a, b| {
        order.cmp_word(
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    list
}
