//! Problem files.
//!
//! ```text
//! # sl2 with a finite-dimensional quotient
//! field QQ
//! vars e f h
//! bracket [e,f] = h
//! bracket [h,e] = 2e
//! bracket [h,f] = -2f
//! order grevlex
//! ideal
//! e^3
//! f^3
//! h^3 - 4h
//! ```
//!
//! Variables are listed smallest first. `mode lie|free` overrides the mode
//! inferred from the presence of `bracket` lines. `order` takes a
//! commutative ordering (`lex`, `grlex`, `grevlex`) optionally followed by a
//! word ordering (`et`, `deglex`); `order deglex` alone means `grlex deglex`.
//! `option <name> <value>` sets `max_degree`, `term_cap`, `seed`, `verify`
//! or `random_basis_change`. Every line after `ideal` that does not start
//! with a keyword holds polynomials.

use std::fmt::Write as _;

use alcom::envalg::LieStructure;
use alcom::{CommOrder, Field, NcPoly, OrderSpec, Rational, Word, WordOrder};
use thiserror::Error;

use crate::expr::{render_word, Cursor};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

/// Primes accepted after `GF`.
pub const SUPPORTED_PRIMES: &[u64] = &[
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 1009, 10007,
    32003, 65521, 2147483647,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Lie,
    Free,
}

/// `[left, right] = sum form[k] * vars[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub left: usize,
    pub right: usize,
    pub form: Vec<Rational>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProblemOptions {
    pub max_degree: Option<u32>,
    pub term_cap: Option<usize>,
    pub seed: Option<u64>,
    pub verify: Option<bool>,
    pub random_basis_change: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub mode: Mode,
    pub brackets: Vec<Bracket>,
    pub comm_order: CommOrder,
    pub word_order: WordOrder,
    pub ideal: Vec<NcPoly<Rational>>,
    pub options: ProblemOptions,
}

const KEYWORDS: &[&str] = &["field", "vars", "mode", "bracket", "order", "option", "ideal"];

impl Problem {
    pub fn order(&self) -> OrderSpec {
        OrderSpec::new(self.comm_order, self.word_order, (0..self.vars.len()).collect())
            .expect("validated while parsing")
    }

    pub fn lie<F: Field>(&self) -> alcom::Result<LieStructure<F>> {
        let mut lie = LieStructure::abelian(self.vars.len());
        for b in &self.brackets {
            let form = b.form.iter().map(F::from_rational).collect::<alcom::Result<Vec<F>>>()?;
            lie.set_bracket(b.left, b.right, form)?;
        }
        Ok(lie)
    }

    pub fn ideal_over<F: Field>(&self) -> alcom::Result<Vec<NcPoly<F>>> {
        self.ideal
            .iter()
            .map(|p| {
                p.terms()
                    .map(|(w, c)| Ok((w.clone(), F::from_rational(c)?)))
                    .collect::<alcom::Result<Vec<_>>>()
                    .map(NcPoly::from_terms)
            })
            .collect()
    }

    /// Problem text that parses back to `self`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        match self.field {
            FieldSpec::Rationals => out.push_str("field QQ\n"),
            FieldSpec::Prime(p) => writeln!(out, "field GF {p}").expect("string"),
        }
        writeln!(out, "vars {}", self.vars.join(" ")).expect("string");
        out.push_str(match self.mode {
            Mode::Lie => "mode lie\n",
            Mode::Free => "mode free\n",
        });
        writeln!(out, "order {} {}", self.comm_order.name(), self.word_order.name()).expect("string");
        for b in &self.brackets {
            let form = NcPoly::from_terms(
                b.form
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (Word::letter(k as u32), c.clone())),
            );
            writeln!(
                out,
                "bracket [{},{}] = {}",
                self.vars[b.left],
                self.vars[b.right],
                self.render_poly(&form)
            )
            .expect("string");
        }
        let o = &self.options;
        if let Some(d) = o.max_degree {
            writeln!(out, "option max_degree {d}").expect("string");
        }
        if let Some(c) = o.term_cap {
            writeln!(out, "option term_cap {c}").expect("string");
        }
        if let Some(s) = o.seed {
            writeln!(out, "option seed {s}").expect("string");
        }
        if let Some(v) = o.verify {
            writeln!(out, "option verify {v}").expect("string");
        }
        if let Some(r) = o.random_basis_change {
            writeln!(out, "option random_basis_change {r}").expect("string");
        }
        out.push_str("ideal\n");
        for p in &self.ideal {
            out.push_str(&self.render_poly(p));
            out.push('\n');
        }
        out
    }

    pub fn render_poly<F: Field>(&self, p: &NcPoly<F>) -> String {
        p.render_with(&self.order(), |w| render_word(w, &self.vars))
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" | "yes" | "on" => Some(true),
        "false" | "no" | "off" => Some(false),
        _ => None,
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, ParseError> {
    let mut field = None;
    let mut vars: Option<Vec<String>> = None;
    let mut mode = None;
    let mut mode_line = 0;
    let mut brackets: Vec<Bracket> = Vec::new();
    let mut first_bracket_line = 0;
    let mut order = None;
    let mut ideal = Vec::new();
    let mut in_ideal = false;
    let mut options = ProblemOptions::default();

    for (idx, raw) in text.lines().enumerate() {
        let ln = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let keyword = trimmed.split_whitespace().next().unwrap_or("");
        let rest_start = indent + keyword.len();
        let rest = &line[rest_start..];
        let rest_col = rest_start + 1;
        let words: Vec<&str> = rest.split_whitespace().collect();
        let need_vars = |what: &str| err(ln, indent + 1, format!("`{what}` before the `vars` line"));

        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(err(ln, indent + 1, "duplicate `field` line"));
                }
                field = Some(match words.as_slice() {
                    ["QQ"] => FieldSpec::Rationals,
                    ["GF", p] => {
                        let p: u64 = p.parse().map_err(|_| err(ln, rest_col, format!("bad prime `{p}`")))?;
                        if !SUPPORTED_PRIMES.contains(&p) {
                            return Err(err(ln, rest_col, format!("unsupported characteristic {p}")));
                        }
                        FieldSpec::Prime(p)
                    }
                    _ => return Err(err(ln, rest_col, "expected `QQ` or `GF p`")),
                });
            }
            "vars" => {
                if vars.is_some() {
                    return Err(err(ln, indent + 1, "duplicate `vars` line"));
                }
                if words.is_empty() {
                    return Err(err(ln, rest_col, "no variables declared"));
                }
                let mut names: Vec<String> = Vec::new();
                for w in &words {
                    let col = rest_col + rest.find(w).unwrap_or(0);
                    let valid = w.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && w.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !valid || KEYWORDS.contains(w) {
                        return Err(err(ln, col, format!("invalid variable name `{w}`")));
                    }
                    if names.iter().any(|n| n == w) {
                        return Err(err(ln, col, format!("variable `{w}` declared twice")));
                    }
                    names.push(w.to_string());
                }
                vars = Some(names);
            }
            "mode" => {
                mode = Some(match words.as_slice() {
                    ["lie"] => Mode::Lie,
                    ["free"] => Mode::Free,
                    _ => return Err(err(ln, rest_col, "expected `lie` or `free`")),
                });
                mode_line = ln;
            }
            "order" => {
                let parsed = match words.as_slice() {
                    ["deglex"] => (CommOrder::Grlex, WordOrder::Deglex),
                    [c] | [c, _] => {
                        let comm = match *c {
                            "lex" => CommOrder::Lex,
                            "grlex" => CommOrder::Grlex,
                            "grevlex" => CommOrder::Grevlex,
                            _ => return Err(err(ln, rest_col, format!("unknown ordering `{c}`"))),
                        };
                        let word = match words.get(1) {
                            None if comm.is_graded() => WordOrder::Et,
                            None => WordOrder::Deglex,
                            Some(&"et") if comm.is_graded() => WordOrder::Et,
                            Some(&"et") => return Err(err(ln, rest_col, "`et` needs a graded ordering")),
                            Some(&"deglex") => WordOrder::Deglex,
                            Some(w) => return Err(err(ln, rest_col, format!("unknown word ordering `{w}`"))),
                        };
                        (comm, word)
                    }
                    _ => return Err(err(ln, rest_col, "expected `order <lex|grlex|grevlex> [et|deglex]`")),
                };
                order = Some(parsed);
            }
            "option" => {
                let [name, value] = words.as_slice() else {
                    return Err(err(ln, rest_col, "expected `option <name> <value>`"));
                };
                let bad = || err(ln, rest_col, format!("bad value `{value}` for option `{name}`"));
                match *name {
                    "max_degree" => options.max_degree = Some(value.parse().map_err(|_| bad())?),
                    "term_cap" => options.term_cap = Some(value.parse().map_err(|_| bad())?),
                    "seed" => options.seed = Some(value.parse().map_err(|_| bad())?),
                    "verify" => options.verify = Some(parse_bool(value).ok_or_else(bad)?),
                    "random_basis_change" => options.random_basis_change = Some(parse_bool(value).ok_or_else(bad)?),
                    _ => return Err(err(ln, rest_col, format!("unknown option `{name}`"))),
                }
            }
            "bracket" => {
                let names = vars.as_deref().ok_or_else(|| need_vars("bracket"))?;
                let mut cur = Cursor::new(rest, ln, rest_col, names);
                cur.expect('[')?;
                let a = cur.variable()?;
                cur.expect(',')?;
                let b = cur.variable()?;
                cur.expect(']')?;
                cur.expect('=')?;
                cur.skip_ws();
                let form_col = cur.column();
                let poly = cur.polynomial()?;
                cur.skip_ws();
                if !cur.at_end() {
                    return Err(cur.error("unexpected text after the bracket"));
                }
                if a == b {
                    return Err(err(
                        ln,
                        rest_col,
                        format!("bracket [{0},{0}] is zero by antisymmetry", names[a]),
                    ));
                }
                if brackets
                    .iter()
                    .any(|x| (x.left, x.right) == (a, b) || (x.left, x.right) == (b, a))
                {
                    return Err(err(
                        ln,
                        rest_col,
                        format!("duplicate bracket of {} and {}", names[a], names[b]),
                    ));
                }
                let mut form = vec![Rational::from_integer(0.into()); names.len()];
                for (w, c) in poly.terms() {
                    if w.len() != 1 {
                        return Err(err(ln, form_col, "a bracket must be a linear form in the variables"));
                    }
                    form[w.letters()[0] as usize] = c.clone();
                }
                if brackets.is_empty() {
                    first_bracket_line = ln;
                }
                brackets.push(Bracket {
                    left: a,
                    right: b,
                    form,
                });
            }
            "ideal" => {
                let names = vars.as_deref().ok_or_else(|| need_vars("ideal"))?;
                in_ideal = true;
                ideal.extend(Cursor::new(rest, ln, rest_col, names).polynomial_list()?);
            }
            _ if in_ideal => {
                let names = vars.as_deref().expect("ideal follows vars");
                ideal.extend(Cursor::new(line, ln, 1, names).polynomial_list()?);
            }
            _ => return Err(err(ln, indent + 1, format!("unknown directive `{keyword}`"))),
        }
    }

    let vars = vars.ok_or_else(|| err(1, 1, "missing `vars` line"))?;
    let mode = match mode {
        Some(Mode::Free) if !brackets.is_empty() => {
            return Err(err(
                first_bracket_line.max(mode_line),
                1,
                "`bracket` lines need Lie mode",
            ));
        }
        Some(m) => m,
        None if brackets.is_empty() => Mode::Free,
        None => Mode::Lie,
    };
    let (comm_order, word_order) = order.unwrap_or((CommOrder::Grevlex, WordOrder::Et));
    Ok(Problem {
        field: field.unwrap_or(FieldSpec::Rationals),
        vars,
        mode,
        brackets,
        comm_order,
        word_order,
        ideal,
        options,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = "\
field QQ
vars e f h
bracket [e,f] = h
bracket [h,e] = 2e
bracket [h,f] = -2f
order grevlex
ideal e^3  f^3  h^3 - 4h
";

    #[test]
    fn sl2_file() {
        let p = parse_problem(SL2).unwrap();
        assert_eq!(p.mode, Mode::Lie);
        assert_eq!(p.ideal.len(), 3);
        assert_eq!(p.lie::<Rational>().unwrap(), LieStructure::sl2());
        assert_eq!(parse_problem(&p.render()).unwrap(), p);
    }

    #[test]
    fn empty_ideal_and_defaults() {
        let p = parse_problem("vars x y\nideal\n").unwrap();
        assert!(p.ideal.is_empty());
        assert_eq!(p.mode, Mode::Free);
        assert_eq!((p.comm_order, p.word_order), (CommOrder::Grevlex, WordOrder::Et));
        assert_eq!(p.field, FieldSpec::Rationals);
    }

    #[test]
    fn errors_are_located() {
        let e = parse_problem("vars e f\nideal\ne^\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_problem("vars e f\nbracket [e,f] = e\nbracket [f,e] = f\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_problem("vars e f\nbracket [e,e] = f\n").is_err());
        assert!(parse_problem("vars e f\nmode free\nbracket [e,f] = f\n").is_err());
        assert!(parse_problem("vars e e\n").is_err());
        assert!(parse_problem("vars e\nfield GF 4\n").is_err());
        assert!(parse_problem("vars e f\nbracket [e,f] = e*f\n").is_err());
        assert!(parse_problem("vars e f\nideal\ng\n").is_err());
        assert!(parse_problem("ideal\n").is_err());
        assert!(parse_problem("vars e f\norder lex et\n").is_err());
    }

    #[test]
    fn options_and_modes() {
        let p = parse_problem(
            "vars X Y\nmode lie\norder deglex\noption max_degree 5\noption verify off\nideal XY - YX, X\n",
        )
        .unwrap();
        assert_eq!(p.mode, Mode::Lie);
        assert_eq!(p.word_order, WordOrder::Deglex);
        assert_eq!(p.options.max_degree, Some(5));
        assert_eq!(p.options.verify, Some(false));
        assert_eq!(p.ideal.len(), 2);
        assert_eq!(parse_problem(&p.render()).unwrap(), p);
    }
}
