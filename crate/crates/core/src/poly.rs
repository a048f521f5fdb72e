//! Sparse polynomials over an exact field, generic in the monomial type.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use crate::kernel::{format_ratio, is_negative, ExpVec, Field, OrderSpec, Word};

/// A monomial type together with its ordering and product.
pub trait Monomial: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn degree(&self) -> u32;
    fn cmp_in(&self, other: &Self, order: &OrderSpec) -> Ordering;
    fn sort_key(&self, order: &OrderSpec) -> Vec<i64>;
    /// Product in the underlying free commutative or free monoid.
    fn mul(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
}

impl Monomial for ExpVec {
    fn degree(&self) -> u32 {
        ExpVec::degree(self)
    }
    fn cmp_in(&self, other: &Self, order: &OrderSpec) -> Ordering {
        order.cmp_exp(self, other)
    }
    fn sort_key(&self, order: &OrderSpec) -> Vec<i64> {
        order.exp_key(self)
    }
    fn mul(&self, other: &Self) -> Self {
        ExpVec::mul(self, other)
    }
    fn is_unit(&self) -> bool {
        self.is_one()
    }
}

impl Monomial for Word {
    fn degree(&self) -> u32 {
        Word::degree(self)
    }
    fn cmp_in(&self, other: &Self, order: &OrderSpec) -> Ordering {
        order.cmp_word(self, other)
    }
    fn sort_key(&self, order: &OrderSpec) -> Vec<i64> {
        order.word_key(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self.concat(other)
    }
    fn is_unit(&self) -> bool {
        self.is_empty()
    }
}

/// Association from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<M: Monomial, F: Field> {
    terms: BTreeMap<M, F>,
}

impl<M: Monomial, F: Field> Default for Poly<M, F> {
    fn default() -> Self {
        Poly { terms: BTreeMap::new() }
    }
}

impl<M: Monomial, F: Field> Poly<M, F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, F)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, F)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &M) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: M, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|c| c.clone() * s.clone())
    }

    fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect(),
        }
    }

    /// Product in the free commutative algebra (for [`ExpVec`]) or the free
    /// associative algebra (for [`Word`]). Not the enveloping-algebra product.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, c) in self.terms() {
            for (b, d) in other.terms() {
                out.add_term(a.mul(b), c.clone() * d.clone());
            }
        }
        out
    }

    /// Multiplies every monomial by `left` on the left and `right` on the
    /// right, scaling by `s`.
    pub fn sandwich(&self, left: &M, right: &M, s: &F) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (left.mul(m).mul(right), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Top-degree homogeneous component; zero for the zero polynomial.
    pub fn leading_homogeneous(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_part(d),
            None => Self::zero(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn leading(&self, order: &OrderSpec) -> Option<(&M, &F)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_in(b.0, order))
    }

    pub fn leading_monomial(&self, order: &OrderSpec) -> Option<&M> {
        self.leading(order).map(|(m, _)| m)
    }

    pub fn leading_coeff(&self, order: &OrderSpec) -> Option<&F> {
        self.leading(order).map(|(_, c)| c)
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self, order: &OrderSpec) -> Self {
        match self.leading_coeff(order) {
            Some(c) => self.scale(&c.inv_nonzero()),
            None => Self::zero(),
        }
    }

    /// Terms sorted from largest to smallest monomial.
    pub fn sorted_terms(&self, order: &OrderSpec) -> Vec<(&M, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_in(a.0, order));
        v
    }

    /// `true` when `self = s * other` for some nonzero scalar `s`.
    pub fn equal_up_to_scalar(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let Some((m, c)) = self.terms.iter().next() else {
            return true;
        };
        let d = other.coeff(m);
        if d.is_zero() {
            return false;
        }
        other.scale(&c.checked_div(&d).expect("nonzero")) == *self
    }

    /// Renders with caller-supplied monomial printing; terms largest first.
    pub fn render_with(&self, order: &OrderSpec, mono: impl Fn(&M) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = is_negative(c);
            let (num, den) = c.to_ratio();
            let abs = format_ratio(&num.magnitude().clone().into(), &den);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_unit() {
                out.push_str(&abs);
            } else {
                if abs != "1" {
                    out.push_str(&abs);
                    out.push('*');
                }
                out.push_str(&mono(m));
            }
        }
        out
    }
}

impl<M: Monomial, F: Field> fmt::Debug for Poly<M, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{}", c, m)?;
        }
        Ok(())
    }
}

pub type CPoly<F> = Poly<ExpVec, F>;
pub type NcPoly<F> = Poly<Word, F>;

/// Element of an enveloping algebra written on the PBW basis. Shares the
/// representation of commutative polynomials; its product is the one of
/// [`crate::envalg::EnvelopingAlgebra`].
pub type PbwPoly<F> = Poly<ExpVec, F>;

/// Working set of terms kept in descending order, used by the reduction
/// loops.
pub(crate) struct TermQueue<M: Monomial, F: Field> {
    map: BTreeMap<Vec<i64>, (M, F)>,
}

impl<M: Monomial, F: Field> TermQueue<M, F> {
    pub fn new(p: &Poly<M, F>, order: &OrderSpec) -> Self {
        let mut q = TermQueue { map: BTreeMap::new() };
        for (m, c) in p.terms() {
            q.add(m.clone(), c.clone(), order);
        }
        q
    }

    pub fn add(&mut self, m: M, c: F, order: &OrderSpec) {
        if c.is_zero() {
            return;
        }
        let key = m.sort_key(order);
        match self.map.get_mut(&key) {
            Some(entry) => {
                let sum = entry.1.clone() + c;
                if sum.is_zero() {
                    self.map.remove(&key);
                } else {
                    entry.1 = sum;
                }
            }
            None => {
                self.map.insert(key, (m, c));
            }
        }
    }

    pub fn pop_max(&mut self) -> Option<(M, F)> {
        self.map.pop_last().map(|(_, t)| t)
    }
}
