use alcom::compoly::{c_buchberger, c_normal_form, s_polynomial};
use alcom::envalg::{
    free_to_pbw, is_two_sided_groebner, two_sided_groebner, validate_lie, EnvelopingAlgebra, LieStructure,
    TwoSidedLimits,
};
use alcom::freealg::{
    graded_quotient_is_commutative, lh, nc_complete_bounded, nc_is_groebner, AmbiguityFailure, AmbiguityKind,
};
use alcom::liftkit::{defining_relations, gamma, pipeline, PipelineOptions};
use alcom::{CPoly, Error, ExpVec, Field, NcPoly, OrderSpec, PbwPoly, Word};
use serde_json::{json, Map, Value};

use crate::expr::{render_exponents, render_word};
use crate::problem::{Mode, Problem};
use crate::{RunError, Settings, Task};

pub(crate) struct Stage {
    name: &'static str,
    json: Vec<Value>,
    text: Vec<String>,
    extra: Option<(&'static str, Value)>,
}

pub(crate) struct Report {
    stages: Vec<Stage>,
    verification: Map<String, Value>,
    lines: Vec<String>,
}

impl Report {
    pub(crate) fn to_json(&self) -> String {
        let stages: Vec<Value> = self
            .stages
            .iter()
            .map(|s| {
                let mut obj = Map::new();
                obj.insert("name".into(), json!(s.name));
                obj.insert("basis".into(), Value::Array(s.json.clone()));
                if let Some((k, v)) = &s.extra {
                    obj.insert((*k).into(), v.clone());
                }
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "stages": stages, "verification": Value::Object(self.verification.clone()) });
        let mut s = serde_json::to_string(&doc).expect("serializable");
        s.push('\n');
        s
    }

    pub(crate) fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.stages {
            out.push_str(&format!("== {} ({} elements) ==\n", s.name, s.text.len()));
            for t in &s.text {
                out.push_str(t);
                out.push('\n');
            }
            out.push('\n');
        }
        out.push_str("== verification ==\n");
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

fn number(n: &num_bigint::BigInt) -> Value {
    serde_json::from_str(&n.to_string()).expect("integer literal")
}

fn coeff_pair<F: Field>(c: &F) -> (Value, Value) {
    let (n, d) = c.to_ratio();
    (number(&n), number(&d))
}

fn exp_poly_json<F: Field>(p: &CPoly<F>, order: &OrderSpec) -> Value {
    Value::Array(
        p.sorted_terms(order)
            .into_iter()
            .map(|(m, c)| {
                let (n, d) = coeff_pair(c);
                json!([n, d, m.exps()])
            })
            .collect(),
    )
}

fn word_poly_json<F: Field>(p: &NcPoly<F>, order: &OrderSpec) -> Value {
    Value::Array(
        p.sorted_terms(order)
            .into_iter()
            .map(|(w, c)| {
                let (n, d) = coeff_pair(c);
                let letters: Vec<u32> = w.letters().iter().map(|l| l + 1).collect();
                json!([n, d, letters])
            })
            .collect(),
    )
}

struct Names<'a> {
    vars: &'a [String],
    order: OrderSpec,
}

impl Names<'_> {
    fn exp<F: Field>(&self, p: &CPoly<F>) -> String {
        p.render_with(&self.order, |m: &ExpVec| render_exponents(m.exps(), self.vars))
    }

    fn word<F: Field>(&self, p: &NcPoly<F>) -> String {
        p.render_with(&self.order, |w: &Word| render_word(w, self.vars))
    }

    fn exp_stage<F: Field>(&self, name: &'static str, basis: &[CPoly<F>]) -> Stage {
        Stage {
            name,
            json: basis.iter().map(|p| exp_poly_json(p, &self.order)).collect(),
            text: basis.iter().map(|p| self.exp(p)).collect(),
            extra: None,
        }
    }

    fn word_stage<F: Field>(&self, name: &'static str, basis: &[NcPoly<F>]) -> Stage {
        Stage {
            name,
            json: basis.iter().map(|p| word_poly_json(p, &self.order)).collect(),
            text: basis.iter().map(|p| self.word(p)).collect(),
            extra: None,
        }
    }

    fn witness<F: Field>(&self, f: &AmbiguityFailure<F>) -> (Value, Vec<String>) {
        let a = &f.ambiguity;
        let kind = match a.kind {
            AmbiguityKind::Overlap => "overlap",
            AmbiguityKind::Inclusion => "inclusion",
        };
        let word = render_word(&a.word, self.vars);
        let value = json!({
            "kind": kind,
            "word": a.word.letters().iter().map(|l| l + 1).collect::<Vec<_>>(),
            "first": a.first + 1,
            "second": a.second + 1,
            "first_normal_form": word_poly_json(&f.first_nf, &self.order),
            "second_normal_form": word_poly_json(&f.second_nf, &self.order),
        });
        let lines = vec![
            format!(
                "witness: {kind} ambiguity {word} of relations {} and {}",
                a.first + 1,
                a.second + 1
            ),
            format!("  first reduct normal form: {}", self.word(&f.first_nf)),
            format!("  second reduct normal form: {}", self.word(&f.second_nf)),
        ];
        (value, lines)
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn convert<F: Field>(problem: &Problem, stage: &'static str) -> Result<Vec<NcPoly<F>>, RunError> {
    problem
        .ideal_over::<F>()
        .map_err(|e| RunError::math(stage, e, &problem.vars))
}

fn lie_of<F: Field>(problem: &Problem, task: Task) -> Result<LieStructure<F>, RunError> {
    if problem.mode != Mode::Lie {
        return Err(RunError::Usage(format!(
            "{} needs a Lie problem: add bracket lines or `mode lie`",
            task.name()
        )));
    }
    let lie = problem
        .lie::<F>()
        .map_err(|e| RunError::math("lie", e, &problem.vars))?;
    validate_lie(&lie).map_err(|e| RunError::math("lie", e, &problem.vars))?;
    Ok(lie)
}

fn pbw_generators<F: Field>(problem: &Problem, alg: &EnvelopingAlgebra<F>) -> Result<Vec<PbwPoly<F>>, RunError> {
    convert::<F>(problem, "input")?
        .iter()
        .map(|p| free_to_pbw(alg, p).map_err(|e| RunError::math("input", e, &problem.vars)))
        .collect()
}

fn relations<F: Field>(problem: &Problem) -> Result<Vec<NcPoly<F>>, RunError> {
    let mut rel = Vec::new();
    if problem.mode == Mode::Lie {
        let lie = problem
            .lie::<F>()
            .map_err(|e| RunError::math("lie", e, &problem.vars))?;
        rel.extend(defining_relations(&lie));
    }
    rel.extend(convert::<F>(problem, "input")?);
    Ok(rel)
}

fn pipeline_stage(e: &Error) -> &'static str {
    match e {
        Error::JacobiFailure { .. } => "lie",
        Error::InfiniteUSet { .. } => "u_sets",
        Error::ResourceCap { stage, .. } => stage,
        Error::SymbolMismatch { .. } => "final",
        _ => "pipeline",
    }
}

pub(crate) fn build<F: Field>(problem: &Problem, task: Task, settings: &Settings) -> Result<Report, RunError> {
    let order = problem.order();
    let names = Names {
        vars: &problem.vars,
        order: order.clone(),
    };
    let mut verification = Map::new();
    let mut lines = Vec::new();
    let stages = match task {
        Task::Pipeline => {
            let lie = lie_of::<F>(problem, task)?;
            let alg = EnvelopingAlgebra::new(lie.clone());
            let gens = pbw_generators(problem, &alg)?;
            let options = PipelineOptions {
                verify: settings.verify,
                random_basis_change: settings.random_basis_change,
                seed: settings.seed,
                limits: TwoSidedLimits::default(),
                u_set_degree_cap: 8,
            };
            let t = pipeline(&lie, &gens, &order, &options)
                .map_err(|e| RunError::math(pipeline_stage(&e), e, &problem.vars))?;
            let names = Names {
                vars: &problem.vars,
                order: t.order.clone(),
            };
            let mut u_stage_json = Vec::new();
            let mut u_stage_text = Vec::new();
            let mut u_lists = Vec::new();
            for (g, us) in t.graded_basis.iter().zip(&t.u_sets) {
                for u in us {
                    let shifted = CPoly::from_terms(g.terms().map(|(m, c)| (m.mul(u), c.clone())));
                    u_stage_json.push(exp_poly_json(&shifted, &t.order));
                    u_stage_text.push(names.exp(&shifted));
                }
                u_lists.push(Value::Array(us.iter().map(|u| json!(u.exps())).collect()));
            }
            if let Some(m) = &t.basis_change {
                let rows: Vec<Value> = m
                    .iter()
                    .map(|r| Value::Array(r.iter().map(|c| json!(c.to_string())).collect()))
                    .collect();
                verification.insert("basis_change".into(), Value::Array(rows));
                lines.push("basis changed: variables now name the rows of a random invertible matrix".into());
            }
            match &t.verification {
                Some(v) => {
                    verification.insert("verified".into(), json!(true));
                    verification.insert("passed".into(), json!(v.passed()));
                    verification.insert("homogeneous_groebner".into(), json!(v.homogeneous_groebner));
                    verification.insert("groebner".into(), json!(v.groebner));
                    verification.insert("graded_commutative".into(), json!(v.graded_commutative));
                    verification.insert("final_in_ideal".into(), json!(v.final_in_ideal));
                    verification.insert("generators_reduce".into(), json!(v.generators_reduce));
                    verification.insert("stage_identity".into(), json!(v.stage_identity));
                    lines.push(format!(
                        "homogeneous lift is a Groebner basis: {}",
                        yes(v.homogeneous_groebner)
                    ));
                    lines.push(format!("final basis is a Groebner basis: {}", yes(v.groebner)));
                    lines.push(format!("graded quotient is commutative: {}", yes(v.graded_commutative)));
                    lines.push(format!("final elements lie in the ideal: {}", yes(v.final_in_ideal)));
                    lines.push(format!(
                        "relations and generators reduce to zero: {}",
                        yes(v.generators_reduce)
                    ));
                    lines.push(format!("symbol basis matches the lift: {}", yes(v.stage_identity)));
                    if let Some(w) = &v.witness {
                        let (value, wl) = names.witness(w);
                        verification.insert("witness".into(), value);
                        lines.extend(wl);
                    }
                }
                None => {
                    verification.insert("verified".into(), json!(false));
                    lines.push("unverified".into());
                }
            }
            let pbw_names = Names {
                vars: &problem.vars,
                order: t.order.clone(),
            };
            vec![
                pbw_names.exp_stage("twostd", &t.two_sided),
                names.exp_stage("symbols", &t.symbols),
                names.exp_stage("graded_basis", &t.graded_basis),
                Stage {
                    name: "u_sets",
                    json: u_stage_json,
                    text: u_stage_text,
                    extra: Some(("u_sets", Value::Array(u_lists))),
                },
                names.word_stage("eps_lift", &t.homogeneous_lift),
                names.word_stage("final", &t.final_basis),
            ]
        }
        Task::Comgb => {
            let polys = convert::<F>(problem, "input")?
                .iter()
                .map(|p| gamma(p, problem.vars.len()))
                .collect::<alcom::Result<Vec<_>>>()
                .map_err(|e| RunError::math("input", e, &problem.vars))?;
            let basis = c_buchberger(&polys, &order, true);
            if settings.verify {
                let ok = basis.iter().enumerate().all(|(i, f)| {
                    basis[i + 1..]
                        .iter()
                        .all(|g| c_normal_form(&s_polynomial(f, g, &order), &basis, &order).is_zero())
                });
                let inputs = polys.iter().all(|p| c_normal_form(p, &basis, &order).is_zero());
                verification.insert("verified".into(), json!(true));
                verification.insert("s_polynomials_reduce".into(), json!(ok));
                verification.insert("generators_reduce".into(), json!(inputs));
                lines.push(format!("S-polynomials reduce to zero: {}", yes(ok)));
                lines.push(format!("generators reduce to zero: {}", yes(inputs)));
            } else {
                verification.insert("verified".into(), json!(false));
                lines.push("unverified".into());
            }
            vec![names.exp_stage("groebner", &basis)]
        }
        Task::Envgb => {
            let lie = lie_of::<F>(problem, task)?;
            let alg = EnvelopingAlgebra::new(lie);
            let gens = pbw_generators(problem, &alg)?;
            let basis = two_sided_groebner(&alg, &gens, &order, TwoSidedLimits::default())
                .map_err(|e| RunError::math("twostd", e, &problem.vars))?;
            if settings.verify {
                let ok = is_two_sided_groebner(&alg, &basis, &order);
                verification.insert("verified".into(), json!(true));
                verification.insert("two_sided_groebner".into(), json!(ok));
                lines.push(format!("two-sided Groebner basis: {}", yes(ok)));
            } else {
                verification.insert("verified".into(), json!(false));
                lines.push("unverified".into());
            }
            vec![names.exp_stage("twostd", &basis)]
        }
        Task::Freegb => {
            let d = settings
                .max_degree
                .ok_or_else(|| RunError::Usage("freegb needs --max-deg or `option max_degree`".into()))?;
            let rel = relations::<F>(problem)?;
            let c = nc_complete_bounded(&rel, &order, d, settings.term_cap)
                .map_err(|e| RunError::math("completion", e, &problem.vars))?;
            verification.insert("complete".into(), json!(c.complete));
            verification.insert("max_degree".into(), json!(d));
            lines.push(if c.complete {
                "complete: every ambiguity resolves".into()
            } else {
                format!("incomplete: ambiguities above degree {d} remain unresolved")
            });
            vec![names.word_stage("completion", &c.basis)]
        }
        Task::Check => {
            let rel = relations::<F>(problem)?;
            let cert = nc_is_groebner(&rel, &order);
            let heads = rel
                .iter()
                .filter(|g| !g.is_zero())
                .map(lh)
                .collect::<alcom::Result<Vec<_>>>()
                .map_err(|e| RunError::math("check", e, &problem.vars))?;
            let commutative = graded_quotient_is_commutative(&heads, &order);
            verification.insert("groebner".into(), json!(cert.is_groebner()));
            verification.insert("ambiguities_checked".into(), json!(cert.ambiguities_checked));
            verification.insert("graded_commutative".into(), json!(commutative));
            lines.push(format!(
                "verdict: {} ({} ambiguities checked)",
                if cert.is_groebner() {
                    "Groebner basis"
                } else {
                    "not a Groebner basis"
                },
                cert.ambiguities_checked
            ));
            if let Some(w) = &cert.failure {
                let (value, wl) = names.witness(w);
                verification.insert("witness".into(), value);
                lines.extend(wl);
            }
            lines.push(format!("graded quotient is commutative: {}", yes(commutative)));
            vec![names.word_stage("relations", &rel)]
        }
    };
    Ok(Report {
        stages,
        verification,
        lines,
    })
}
