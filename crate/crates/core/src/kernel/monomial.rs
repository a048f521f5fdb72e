use std::fmt;

use crate::error::{Error, Result};

/// Exponent tuple of a commutative monomial `x1^a1 * ... * xn^an`.
///
/// Also used for PBW monomials `X1^a1 ... Xn^an` of an enveloping algebra,
/// where the tuple is read as an ordered product.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn one(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: n,
                found: self.0.len(),
            })
        }
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &ExpVec) -> Option<ExpVec> {
        if self.divides(other) {
            Some(ExpVec(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Generator of the colon ideal `(<self> : m)`: `self / gcd(self, m)`.
    pub fn colon(&self, m: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&m.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn with_exp(&self, i: usize, e: u32) -> ExpVec {
        let mut v = self.0.clone();
        v[i] = e;
        ExpVec(v)
    }

    pub fn inc(&self, i: usize) -> ExpVec {
        let mut v = self.0.clone();
        v[i] += 1;
        ExpVec(v)
    }

    /// Variables with nonzero exponent, smallest index first, repeated by
    /// multiplicity.
    pub fn sorted_letters(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i as u32, e as usize));
        }
        out
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// A word in the free monoid on letters `0..n`; the empty word is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u32) -> Self {
        Word(vec![i])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn check_alphabet(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l as usize >= n) {
            Some(&l) => Err(Error::LetterOutOfRange {
                letter: l as usize,
                alphabet: n,
            }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    /// Positions where `pattern` occurs as a contiguous subword.
    pub fn occurrences<'a>(&'a self, pattern: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let k = pattern.0.len();
        let n = self.0.len();
        (0..=n.saturating_sub(k)).filter(move |&p| k <= n && self.0[p..p + k] == pattern.0[..])
    }

    pub fn find(&self, pattern: &Word) -> Option<usize> {
        self.occurrences(pattern).next()
    }

    /// Commutative image: letter counts over `n` variables.
    pub fn abelianize(&self, n: usize) -> ExpVec {
        let mut e = vec![0; n];
        for &l in &self.0 {
            e[l as usize] += 1;
        }
        ExpVec(e)
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "X{}", l + 1)?;
        }
        Ok(())
    }
}
