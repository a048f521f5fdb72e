use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compoly::{c_buchberger, c_interreduce, determinant, u_set, Matrix, MonomialIdeal, USet};
use crate::envalg::{
    left_normal_form, pbw_section, sigma, two_sided_groebner, validate_lie, EnvelopingAlgebra, LieStructure,
    TwoSidedLimits,
};
use crate::error::{Error, Result};
use crate::freealg::{
    graded_quotient_is_commutative, lh, nc_interreduce, nc_is_groebner, nc_normal_form, nc_tail_reduce,
    AmbiguityFailure,
};
use crate::kernel::{ExpVec, Field, OrderSpec, WordOrder};
use crate::liftkit::{defining_relations, eps_lift, filtered_lift, gamma, pair_preimages};
use crate::poly::{CPoly, NcPoly, PbwPoly};

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    /// Run the verification checks after the final stage.
    pub verify: bool,
    /// On an infinite U-set, retry once after a random change of Lie basis.
    pub random_basis_change: bool,
    pub seed: u64,
    pub limits: TwoSidedLimits,
    /// Degree up to which an infinite U-set is listed before giving up.
    pub u_set_degree_cap: u32,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            verify: true,
            random_basis_change: false,
            seed: 0,
            limits: TwoSidedLimits::default(),
            u_set_degree_cap: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageTiming {
    pub stage: &'static str,
    pub elapsed: Duration,
}

/// Verdicts of the independent checks on the final basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification<F: Field> {
    /// The homogeneous lift passes the diamond lemma.
    pub homogeneous_groebner: bool,
    /// The final basis passes the diamond lemma.
    pub groebner: bool,
    /// First unresolved ambiguity of the final basis, if any.
    pub witness: Option<AmbiguityFailure<F>>,
    /// The leading homogeneous parts give a commutative quotient.
    pub graded_commutative: bool,
    /// Every final element maps to zero in `U(g)/I`.
    pub final_in_ideal: bool,
    /// The defining relations and the sections of the generators reduce to
    /// zero modulo the final basis.
    pub generators_reduce: bool,
    /// The reduced basis of the abelianized homogeneous lift equals the
    /// reduced symbol basis.
    pub stage_identity: bool,
}

impl<F: Field> Verification<F> {
    pub fn passed(&self) -> bool {
        self.homogeneous_groebner
            && self.groebner
            && self.graded_commutative
            && self.final_in_ideal
            && self.generators_reduce
            && self.stage_identity
    }
}

/// Every stage of a pipeline run.
#[derive(Clone, Debug)]
pub struct PipelineTrace<F: Field> {
    /// The Lie structure the bases are written in; differs from the input
    /// after a random change of basis.
    pub lie: LieStructure<F>,
    /// Rows give the new basis in terms of the old one.
    pub basis_change: Option<Matrix<F>>,
    pub generators: Vec<PbwPoly<F>>,
    /// Ordering of the free-algebra stages.
    pub order: OrderSpec,
    pub two_sided: Vec<PbwPoly<F>>,
    pub symbols: Vec<CPoly<F>>,
    pub graded_basis: Vec<CPoly<F>>,
    /// U-set of each element of `graded_basis`.
    pub u_sets: Vec<Vec<ExpVec>>,
    pub homogeneous_lift: Vec<NcPoly<F>>,
    /// Filtered lift with every tail reduced; elements whose leading word is
    /// redundant are kept. See [`PipelineTrace::reduced_final_basis`].
    pub final_basis: Vec<NcPoly<F>>,
    /// `None` when verification was disabled.
    pub verification: Option<Verification<F>>,
    pub timings: Vec<StageTiming>,
}

impl<F: Field> PipelineTrace<F> {
    /// The unique reduced Gröbner basis of the ideal.
    pub fn reduced_final_basis(&self) -> Vec<NcPoly<F>> {
        nc_interreduce(&self.final_basis, &self.order)
    }
}

/// Random invertible integer matrix with entries in `-2..=2`.
pub fn random_basis_change<F: Field>(n: usize, seed: u64) -> Matrix<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m: Matrix<F> = (0..n)
            .map(|_| (0..n).map(|_| F::from_i64(rng.gen_range(-2..=2))).collect())
            .collect();
        if determinant(&m).map(|d| !d.is_zero()).unwrap_or(false) {
            return m;
        }
    }
}

struct Clock(Vec<StageTiming>, Instant);

impl Clock {
    fn lap(&mut self, stage: &'static str) {
        let now = Instant::now();
        self.0.push(StageTiming {
            stage,
            elapsed: now - self.1,
        });
        self.1 = now;
    }
}

/// Runs the full construction for the two-sided ideal of `U(lie)` generated
/// by `gens`: two-sided basis, symbols, reduced symbol basis, U-sets,
/// homogeneous lift, filtered lift, then verification.
///
/// `order` must be graded with variables ranked in declaration order; the
/// free-algebra stages use its lexicographic extension to words.
pub fn pipeline<F: Field>(
    lie: &LieStructure<F>,
    gens: &[PbwPoly<F>],
    order: &OrderSpec,
    options: &PipelineOptions,
) -> Result<PipelineTrace<F>> {
    validate_lie(lie)?;
    match run(lie, gens, order, options, None) {
        Err(Error::InfiniteUSet { .. }) if options.random_basis_change => {
            let m = random_basis_change(lie.dim(), options.seed);
            let changed = lie.change_basis(&m)?;
            let source = EnvelopingAlgebra::new(lie.clone());
            let target = EnvelopingAlgebra::new(changed.clone());
            let moved = gens
                .iter()
                .map(|g| source.transport(g, &m, &target))
                .collect::<Result<Vec<_>>>()?;
            run(&changed, &moved, order, options, Some(m))
        }
        other => other,
    }
}

fn run<F: Field>(
    lie: &LieStructure<F>,
    gens: &[PbwPoly<F>],
    order: &OrderSpec,
    options: &PipelineOptions,
    basis_change: Option<Matrix<F>>,
) -> Result<PipelineTrace<F>> {
    let n = lie.dim();
    if order.nvars() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: order.nvars(),
        });
    }
    let et = order.with_word_order(WordOrder::Et)?;
    if !et.has_identity_ranks() {
        return Err(Error::InvalidOrder(
            "the pipeline needs variables ranked in declaration order".into(),
        ));
    }
    let alg = EnvelopingAlgebra::new(lie.clone());
    let mut clock = Clock(Vec::new(), Instant::now());

    let two_sided = two_sided_groebner(&alg, gens, &et, options.limits)?;
    clock.lap("twostd");
    let symbols = two_sided.iter().map(sigma).collect::<Result<Vec<_>>>()?;
    clock.lap("symbols");
    let graded_basis = c_interreduce(&symbols, &et);
    clock.lap("graded_basis");

    let heads: Vec<ExpVec> = graded_basis
        .iter()
        .filter_map(|g| g.leading_monomial(&et).cloned())
        .collect();
    let mut u_sets = Vec::with_capacity(heads.len());
    if !heads.iter().any(ExpVec::is_one) {
        let ideal = MonomialIdeal::new(n, heads.iter().cloned())?;
        for lm in &heads {
            match u_set(&ideal, lm, &et, options.u_set_degree_cap)? {
                USet::Finite(us) => u_sets.push(us),
                USet::Infinite { variable, .. } => {
                    return Err(Error::InfiniteUSet {
                        monomial: lm.clone(),
                        variable,
                    })
                }
            }
        }
    }
    clock.lap("u_sets");

    let homogeneous_lift = eps_lift(&graded_basis, &et)?;
    clock.lap("eps_lift");
    let pairs = pair_preimages(&alg, &graded_basis, &two_sided, &et)?;
    let lifted = filtered_lift(&alg, &pairs, &et)?;
    let final_basis = nc_tail_reduce(&lifted, &et);
    clock.lap("final");

    let verification = if options.verify {
        let v = verify(
            &alg,
            gens,
            &two_sided,
            &graded_basis,
            &homogeneous_lift,
            &final_basis,
            &et,
        )?;
        clock.lap("verification");
        Some(v)
    } else {
        None
    };

    Ok(PipelineTrace {
        lie: lie.clone(),
        basis_change,
        generators: gens.to_vec(),
        order: et,
        two_sided,
        symbols,
        graded_basis,
        u_sets,
        homogeneous_lift,
        final_basis,
        verification,
        timings: clock.0,
    })
}

fn verify<F: Field>(
    alg: &EnvelopingAlgebra<F>,
    gens: &[PbwPoly<F>],
    two_sided: &[PbwPoly<F>],
    graded_basis: &[CPoly<F>],
    homogeneous_lift: &[NcPoly<F>],
    final_basis: &[NcPoly<F>],
    order: &OrderSpec,
) -> Result<Verification<F>> {
    let n = alg.nvars();
    let homogeneous_groebner = nc_is_groebner(homogeneous_lift, order).is_groebner();
    let cert = nc_is_groebner(final_basis, order);

    let heads = final_basis.iter().map(lh).collect::<Result<Vec<_>>>()?;
    let graded_commutative = graded_quotient_is_commutative(&heads, order);

    let mut final_in_ideal = true;
    for g in final_basis {
        let image = alg.free_to_pbw(g)?;
        final_in_ideal &= left_normal_form(alg, &image, two_sided, order).is_zero();
    }

    let generators_reduce = defining_relations(alg.lie())
        .iter()
        .chain(gens.iter().map(pbw_section).collect::<Vec<_>>().iter())
        .all(|r| nc_normal_form(r, final_basis, order).is_zero());

    let abelian = homogeneous_lift
        .iter()
        .map(|g| gamma(g, n))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect::<Vec<_>>();
    let stage_identity = c_buchberger(&abelian, order, true) == graded_basis;

    Ok(Verification {
        homogeneous_groebner,
        groebner: cert.is_groebner(),
        witness: cert.failure,
        graded_commutative,
        final_in_ideal,
        generators_reduce,
        stage_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Rational, Word};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn pb(terms: &[(Rational, &[u32])]) -> PbwPoly<Rational> {
        PbwPoly::from_terms(terms.iter().map(|(c, e)| (ExpVec::new(e.to_vec()), c.clone())))
    }

    fn nc(terms: &[(Rational, &[u32])]) -> NcPoly<Rational> {
        NcPoly::from_terms(terms.iter().map(|(c, w)| (Word::new(w.to_vec()), c.clone())))
    }

    fn i(n: i64) -> Rational {
        q(n, 1)
    }

    #[test]
    fn sl2_final_basis() {
        let gens = [
            pb(&[(i(1), &[3, 0, 0])]),
            pb(&[(i(1), &[0, 3, 0])]),
            pb(&[(i(1), &[0, 0, 3]), (i(-4), &[0, 0, 1])]),
        ];
        let t = pipeline(
            &LieStructure::sl2(),
            &gens,
            &OrderSpec::grevlex(3),
            &PipelineOptions::default(),
        )
        .unwrap();
        assert_eq!(t.two_sided.len(), 10);
        assert_eq!(t.graded_basis.len(), 10);
        assert!(t.u_sets.iter().all(|u| u.len() == 1 && u[0].is_one()));
        assert_eq!(t.homogeneous_lift.len(), 13);
        assert_eq!(t.final_basis.len(), 13);
        let v = t.verification.unwrap();
        assert!(v.passed(), "{v:?}");
        for expected in [
            nc(&[(i(1), &[1, 0]), (i(-1), &[0, 1]), (i(1), &[2])]),
            nc(&[(i(1), &[2, 0]), (i(-1), &[0, 2]), (i(-2), &[0])]),
            nc(&[(i(1), &[2, 1]), (i(-1), &[1, 2]), (i(2), &[1])]),
            nc(&[(i(1), &[0, 1, 2]), (q(-1, 2), &[2, 2]), (i(-1), &[2])]),
            nc(&[(i(1), &[0, 1, 1]), (i(-1), &[1, 2])]),
        ] {
            assert!(t.final_basis.contains(&expected), "missing {expected:?}");
        }
    }

    #[test]
    fn heisenberg_gives_weyl_algebra() {
        let gens = [pb(&[(i(1), &[0, 0, 1]), (i(-1), &[0, 0, 0])])];
        let t = pipeline(
            &LieStructure::heisenberg(),
            &gens,
            &OrderSpec::grevlex(3),
            &PipelineOptions::default(),
        )
        .unwrap();
        assert_eq!(t.final_basis.len(), 4);
        assert!(t
            .final_basis
            .contains(&nc(&[(i(1), &[1, 0]), (i(-1), &[0, 1]), (i(1), &[])])));
        assert!(t.final_basis.contains(&nc(&[(i(1), &[2]), (i(-1), &[])])));
        assert_eq!(t.reduced_final_basis().len(), 2);
        assert!(t.verification.unwrap().passed());
    }

    #[test]
    fn abelian_without_generators() {
        let t = pipeline(
            &LieStructure::<Rational>::abelian(2),
            &[],
            &OrderSpec::grevlex(2),
            &PipelineOptions::default(),
        )
        .unwrap();
        assert_eq!(t.final_basis, vec![nc(&[(i(1), &[1, 0]), (i(-1), &[0, 1])])]);
    }

    #[test]
    fn infinite_u_set_and_retry() {
        let gens = [pb(&[(i(1), &[1, 0, 1])])];
        let lie = LieStructure::<Rational>::abelian(3);
        let o = OrderSpec::grevlex(3);
        let err = pipeline(&lie, &gens, &o, &PipelineOptions::default()).unwrap_err();
        assert!(matches!(err, Error::InfiniteUSet { variable: 1, .. }));
        let opts = PipelineOptions {
            random_basis_change: true,
            seed: 7,
            ..PipelineOptions::default()
        };
        match pipeline(&lie, &gens, &o, &opts) {
            Ok(t) => {
                assert!(t.basis_change.is_some());
                assert!(t.verification.unwrap().passed());
            }
            Err(e) => assert!(matches!(e, Error::InfiniteUSet { .. })),
        }
    }

    #[test]
    fn no_verify_keeps_bases() {
        let gens = [pb(&[(i(1), &[2, 0, 0])])];
        let o = OrderSpec::grevlex(3);
        let a = pipeline(&LieStructure::sl2(), &gens, &o, &PipelineOptions::default()).unwrap();
        let b = pipeline(
            &LieStructure::sl2(),
            &gens,
            &o,
            &PipelineOptions {
                verify: false,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.final_basis, b.final_basis);
        assert!(b.verification.is_none());
    }

    #[test]
    fn random_matrices_are_invertible_and_seeded() {
        let a: Matrix<Rational> = random_basis_change(4, 3);
        assert_eq!(a, random_basis_change(4, 3));
        assert!(!num_traits::Zero::is_zero(&determinant(&a).unwrap()));
    }
}
