//! Monomial orderings on commutative monomials and on words.
//!
//! Variables are ranked by a permutation: rank 0 is the smallest variable.
//! Orderings such as "e < f < h" are expressed through ranks rather than by
//! renaming variables.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{ExpVec, Word};

/// Ordering on commutative monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommOrder {
    Lex,
    Grlex,
    Grevlex,
}

impl CommOrder {
    pub fn is_graded(self) -> bool {
        !matches!(self, CommOrder::Lex)
    }

    pub fn name(self) -> &'static str {
        match self {
            CommOrder::Lex => "lex",
            CommOrder::Grlex => "grlex",
            CommOrder::Grevlex => "grevlex",
        }
    }
}

/// Ordering on words of the free monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordOrder {
    /// Length first, then left-to-right comparison of letter ranks.
    Deglex,
    /// Compare abelianizations with the commutative ordering; break ties
    /// between words with equal abelianization lexicographically.
    Et,
}

impl WordOrder {
    pub fn name(self) -> &'static str {
        match self {
            WordOrder::Deglex => "deglex",
            WordOrder::Et => "et",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    comm: CommOrder,
    word: WordOrder,
    /// `rank[v]` is the rank of variable `v`.
    rank: Vec<usize>,
    /// `by_rank[r]` is the variable of rank `r`.
    by_rank: Vec<usize>,
}

impl OrderSpec {
    pub fn new(comm: CommOrder, word: WordOrder, rank: Vec<usize>) -> Result<Self> {
        let n = rank.len();
        let mut by_rank = vec![usize::MAX; n];
        for (v, &r) in rank.iter().enumerate() {
            if r >= n || by_rank[r] != usize::MAX {
                return Err(Error::InvalidOrder(format!(
                    "rank list {:?} is not a permutation",
                    rank
                )));
            }
            by_rank[r] = v;
        }
        if word == WordOrder::Et && !comm.is_graded() {
            return Err(Error::InvalidOrder(
                "the et word ordering needs a graded commutative ordering".into(),
            ));
        }
        Ok(OrderSpec {
            comm,
            word,
            rank,
            by_rank,
        })
    }

    /// Variables ranked by index (`x1 < x2 < ... < xn`). Graded kinds use the
    /// et word ordering, lex falls back to deglex words.
    pub fn standard(comm: CommOrder, n: usize) -> Self {
        let word = if comm.is_graded() {
            WordOrder::Et
        } else {
            WordOrder::Deglex
        };
        OrderSpec::new(comm, word, (0..n).collect()).expect("identity ranks")
    }

    pub fn grevlex(n: usize) -> Self {
        Self::standard(CommOrder::Grevlex, n)
    }

    pub fn with_word_order(&self, word: WordOrder) -> Result<Self> {
        OrderSpec::new(self.comm, word, self.rank.clone())
    }

    pub fn comm(&self) -> CommOrder {
        self.comm
    }

    pub fn word(&self) -> WordOrder {
        self.word
    }

    pub fn nvars(&self) -> usize {
        self.rank.len()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn has_identity_ranks(&self) -> bool {
        self.rank.iter().enumerate().all(|(i, &r)| i == r)
    }

    /// Both the commutative and the word ordering are degree-compatible.
    pub fn is_graded(&self) -> bool {
        self.comm.is_graded()
    }

    /// Whether longer words are always larger.
    pub fn is_word_graded(&self) -> bool {
        self.word == WordOrder::Deglex || self.comm.is_graded()
    }

    pub fn require_graded(&self) -> Result<()> {
        if self.is_graded() {
            Ok(())
        } else {
            Err(Error::InvalidOrder(format!(
                "{} is not a graded ordering",
                self.comm.name()
            )))
        }
    }

    pub(crate) fn cmp_exp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        let lex = || {
            for &v in self.by_rank.iter().rev() {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        };
        let deg = |e: &[u32]| e.iter().sum::<u32>();
        match self.comm {
            CommOrder::Lex => lex(),
            CommOrder::Grlex => deg(a).cmp(&deg(b)).then_with(lex),
            CommOrder::Grevlex => deg(a).cmp(&deg(b)).then_with(|| {
                for &v in &self.by_rank {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn cmp_letters(&self, u: &Word, v: &Word) -> Ordering {
        for (x, y) in u.letters().iter().zip(v.letters()) {
            match self.rank[*x as usize].cmp(&self.rank[*y as usize]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        u.len().cmp(&v.len())
    }

    pub(crate) fn cmp_word(&self, u: &Word, v: &Word) -> Ordering {
        match self.word {
            WordOrder::Deglex => u.len().cmp(&v.len()).then_with(|| self.cmp_letters(u, v)),
            WordOrder::Et => {
                let n = self.nvars();
                self.cmp_exp(&u.abelianize(n), &v.abelianize(n))
                    .then_with(|| self.cmp_letters(u, v))
            }
        }
    }

    /// Sort key whose lexicographic order agrees with the commutative
    /// ordering. Injective.
    pub fn exp_key(&self, a: &ExpVec) -> Vec<i64> {
        let e = a.exps();
        let mut key = Vec::with_capacity(e.len() + 1);
        match self.comm {
            CommOrder::Lex => key.extend(self.by_rank.iter().rev().map(|&v| e[v] as i64)),
            CommOrder::Grlex => {
                key.push(a.degree() as i64);
                key.extend(self.by_rank.iter().rev().map(|&v| e[v] as i64));
            }
            CommOrder::Grevlex => {
                key.push(a.degree() as i64);
                key.extend(self.by_rank.iter().map(|&v| -(e[v] as i64)));
            }
        }
        key
    }

    /// Sort key whose lexicographic order agrees with the word ordering.
    /// Injective.
    pub fn word_key(&self, u: &Word) -> Vec<i64> {
        let mut key = match self.word {
            WordOrder::Deglex => vec![u.len() as i64],
            WordOrder::Et => self.exp_key(&u.abelianize(self.nvars())),
        };
        key.extend(u.letters().iter().map(|&l| self.rank[l as usize] as i64));
        key
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} ranks {:?}", self.comm.name(), self.word.name(), self.rank)
    }
}

/// Compares commutative monomials under `order`.
pub fn cmp_c(order: &OrderSpec, a: &ExpVec, b: &ExpVec) -> Result<Ordering> {
    a.check_len(order.nvars())?;
    b.check_len(order.nvars())?;
    Ok(order.cmp_exp(a, b))
}

/// Compares words under the word ordering of `order`.
pub fn cmp_w(order: &OrderSpec, u: &Word, v: &Word) -> Result<Ordering> {
    u.check_alphabet(order.nvars())?;
    v.check_alphabet(order.nvars())?;
    Ok(order.cmp_word(u, v))
}
