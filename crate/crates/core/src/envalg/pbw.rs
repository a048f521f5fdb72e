use std::collections::HashMap;
use std::sync::RwLock;

use crate::compoly::{invert_matrix, Matrix};
use crate::envalg::LieStructure;
use crate::error::{Error, Result};
use crate::kernel::{ExpVec, Field, Word};
use crate::poly::{CPoly, NcPoly, PbwPoly};

/// The enveloping algebra `U(g)` with elements written on the PBW basis
/// `X1^a1 X2^a2 ... Xn^an`.
///
/// Products of a PBW monomial by a generator are memoized. The cache sits
/// behind a lock, so one algebra can be shared between threads.
pub struct EnvelopingAlgebra<F: Field> {
    lie: LieStructure<F>,
    cache: RwLock<HashMap<(ExpVec, usize), PbwPoly<F>>>,
}

impl<F: Field> Clone for EnvelopingAlgebra<F> {
    fn clone(&self) -> Self {
        EnvelopingAlgebra::new(self.lie.clone())
    }
}

impl<F: Field> std::fmt::Debug for EnvelopingAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnvelopingAlgebra").field("lie", &self.lie).finish()
    }
}

impl<F: Field> EnvelopingAlgebra<F> {
    pub fn new(lie: LieStructure<F>) -> Self {
        EnvelopingAlgebra {
            lie,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &LieStructure<F> {
        &self.lie
    }

    pub fn nvars(&self) -> usize {
        self.lie.dim()
    }

    pub fn one(&self) -> PbwPoly<F> {
        PbwPoly::monomial(ExpVec::one(self.nvars()), F::one())
    }

    pub fn generator(&self, i: usize) -> PbwPoly<F> {
        PbwPoly::monomial(ExpVec::var(self.nvars(), i), F::one())
    }

    /// `X^a * Xk` on the PBW basis.
    pub fn mono_times_generator(&self, a: &ExpVec, k: usize) -> PbwPoly<F> {
        let top = a.exps().iter().rposition(|&e| e > 0);
        match top {
            Some(s) if s > k => {}
            _ => return PbwPoly::monomial(a.inc(k), F::one()),
        }
        let key = (a.clone(), k);
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let s = top.expect("nonunit");
        // X^a = X^b Xs with s > k: X^b Xs Xk = X^b Xk Xs + X^b [Xs, Xk]
        let b = a.with_exp(s, a.exps()[s] - 1);
        let swapped = self.poly_times_generator(&self.mono_times_generator(&b, k), s);
        let mut out = swapped;
        for (r, c) in self.lie.bracket(s, k).iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.mono_times_generator(&b, r).scale(c));
            }
        }
        self.cache.write().expect("cache lock").insert(key, out.clone());
        out
    }

    pub fn poly_times_generator(&self, p: &PbwPoly<F>, k: usize) -> PbwPoly<F> {
        let mut out = PbwPoly::zero();
        for (m, c) in p.terms() {
            for (t, d) in self.mono_times_generator(m, k).into_terms() {
                out.add_term(t, c.clone() * d);
            }
        }
        out
    }

    /// Right multiplication by a word of generators.
    pub fn poly_times_word(&self, p: &PbwPoly<F>, letters: &[u32]) -> PbwPoly<F> {
        letters
            .iter()
            .fold(p.clone(), |acc, &l| self.poly_times_generator(&acc, l as usize))
    }

    /// Product in `U(g)`.
    pub fn mul(&self, p: &PbwPoly<F>, q: &PbwPoly<F>) -> PbwPoly<F> {
        let mut out = PbwPoly::zero();
        for (b, d) in q.terms() {
            let part = self.poly_times_word(p, &b.sorted_letters());
            out = out.add(&part.scale(d));
        }
        out
    }

    /// Canonical projection `K<X> -> U(g)`.
    pub fn free_to_pbw(&self, f: &NcPoly<F>) -> Result<PbwPoly<F>> {
        let n = self.nvars();
        let mut out = PbwPoly::zero();
        for (w, c) in f.terms() {
            w.check_alphabet(n)?;
            let img = self.poly_times_word(&PbwPoly::monomial(ExpVec::one(n), c.clone()), w.letters());
            out = out.add(&img);
        }
        Ok(out)
    }

    /// Rewrites an element given in this algebra's basis `X` into the basis
    /// `Yr = sum_i m[r][i] Xi` of `target`, whose structure constants must
    /// come from [`LieStructure::change_basis`] with the same matrix.
    pub fn transport(&self, p: &PbwPoly<F>, m: &Matrix<F>, target: &EnvelopingAlgebra<F>) -> Result<PbwPoly<F>> {
        let n = self.nvars();
        let inv = invert_matrix(m)?;
        // Xi = sum_r inv[i][r] Yr
        let images: Vec<PbwPoly<F>> = (0..n)
            .map(|i| PbwPoly::from_terms((0..n).map(|r| (ExpVec::var(n, r), inv[i][r].clone()))))
            .collect();
        let mut out = PbwPoly::zero();
        for (a, c) in p.terms() {
            a.check_len(n)?;
            let mut term = target.one().scale(c);
            for l in a.sorted_letters() {
                term = target.mul(&term, &images[l as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

/// Product in `U(g)`.
pub fn pbw_mul<F: Field>(alg: &EnvelopingAlgebra<F>, p: &PbwPoly<F>, q: &PbwPoly<F>) -> PbwPoly<F> {
    alg.mul(p, q)
}

/// Canonical projection `K<X> -> U(g)`.
pub fn free_to_pbw<F: Field>(alg: &EnvelopingAlgebra<F>, f: &NcPoly<F>) -> Result<PbwPoly<F>> {
    alg.free_to_pbw(f)
}

/// Ordered-word section `X^a -> X1...X1 X2...Xn`.
pub fn pbw_section<F: Field>(p: &PbwPoly<F>) -> NcPoly<F> {
    NcPoly::from_terms(p.terms().map(|(a, c)| (Word::new(a.sorted_letters()), c.clone())))
}

/// Symbol: the top filtration-degree part, read as a commutative polynomial.
pub fn sigma<F: Field>(g: &PbwPoly<F>) -> Result<CPoly<F>> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial("symbol"));
    }
    Ok(g.leading_homogeneous())
}
