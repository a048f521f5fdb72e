use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::kernel::{ExpVec, OrderSpec};

/// Monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<ExpVec>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = ExpVec>) -> Result<Self> {
        let mut all: Vec<ExpVec> = Vec::new();
        for g in gens {
            g.check_len(nvars)?;
            all.push(g);
        }
        all.sort_by_key(|g| (g.degree(), g.clone()));
        all.dedup();
        let mut minimal: Vec<ExpVec> = Vec::new();
        for g in all {
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal { nvars, gens: minimal })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn contains(&self, m: &ExpVec) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `(L : m)`.
    pub fn colon(&self, m: &ExpVec) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.colon(m))).expect("same length")
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned()).expect("same length")
    }
}

pub fn mi_member(ideal: &MonomialIdeal, m: &ExpVec) -> Result<bool> {
    m.check_len(ideal.nvars)?;
    Ok(ideal.contains(m))
}

/// Result of [`u_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum USet {
    Finite(Vec<ExpVec>),
    /// No pure power of `variable` lies in the relevant colon ideal, so the
    /// set is infinite. `witness` lists its members up to the degree cap.
    Infinite {
        variable: usize,
        witness: Vec<ExpVec>,
    },
}

/// The set of monomials `u` in the variables strictly between the smallest
/// and largest variable of `m` (by index) such that neither `u*m/x_first`
/// nor `u*m/x_last` lies in `ideal`.
///
/// Finiteness is decided exactly: the set is the standard monomials of
/// `J = (L : m/x_first) + (L : m/x_last)` restricted to the in-between
/// variables. `degree_cap` only bounds the witness listed for an infinite
/// set. Members are sorted by degree, then by `order`.
pub fn u_set(ideal: &MonomialIdeal, m: &ExpVec, order: &OrderSpec, degree_cap: u32) -> Result<USet> {
    m.check_len(ideal.nvars)?;
    if m.is_one() {
        return Err(Error::InvalidArgument("U-set of the unit monomial".into()));
    }
    if !ideal.contains(m) {
        return Err(Error::NotInIdeal(m.clone()));
    }
    let e = m.exps();
    let first = e.iter().position(|&a| a > 0).expect("nonunit");
    let last = e.iter().rposition(|&a| a > 0).expect("nonunit");
    let between: Vec<usize> = (first + 1..last).collect();

    let lower_first = m.with_exp(first, e[first] - 1);
    let lower_last = m.with_exp(last, e[last] - 1);
    let j = ideal.colon(&lower_first).sum(&ideal.colon(&lower_last));

    // generators supported on the in-between variables
    let restricted: Vec<ExpVec> = j
        .generators()
        .iter()
        .filter(|g| {
            g.exps()
                .iter()
                .enumerate()
                .all(|(v, &a)| a == 0 || between.contains(&v))
        })
        .cloned()
        .collect();
    let standard = |u: &ExpVec| !restricted.iter().any(|g| g.divides(u));

    let mut bounds = Vec::with_capacity(between.len());
    let mut missing = None;
    for &v in &between {
        let pure = restricted
            .iter()
            .filter(|g| g.exps().iter().enumerate().all(|(w, &a)| w == v || a == 0))
            .map(|g| g.exps()[v])
            .min();
        match pure {
            Some(b) => bounds.push(b),
            None => {
                missing.get_or_insert(v);
                bounds.push(degree_cap + 1);
            }
        }
    }

    let mut found: BTreeSet<(u32, Vec<i64>, ExpVec)> = BTreeSet::new();
    let n = ideal.nvars;
    let mut stack = vec![(0usize, ExpVec::one(n))];
    while let Some((k, u)) = stack.pop() {
        if k == between.len() {
            let within_cap = missing.is_none() || u.degree() <= degree_cap;
            if within_cap && standard(&u) {
                found.insert((u.degree(), order.exp_key(&u), u));
            }
            continue;
        }
        let v = between[k];
        for a in 0..bounds[k] {
            let w = u.with_exp(v, a);
            if missing.is_some() && w.degree() > degree_cap {
                break;
            }
            stack.push((k + 1, w));
        }
    }
    let members: Vec<ExpVec> = found.into_iter().map(|(_, _, u)| u).collect();
    Ok(match missing {
        None => USet::Finite(members),
        Some(variable) => USet::Infinite {
            variable,
            witness: members,
        },
    })
}
