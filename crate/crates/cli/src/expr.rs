//! Polynomial expressions over declared variable names.
//!
//! A term is a product of factors, each a rational literal or a variable
//! power, joined by `*` or written side by side without spaces (`4h`,
//! `efh^2`). Terms are joined by `+` and `-`. Inside a list, whitespace
//! between two terms with no operator starts a new polynomial, as do `,` and
//! `;`.

use alcom::{NcPoly, Rational, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::problem::ParseError;

pub(crate) struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    /// Column of `chars[0]`, 1-based.
    base: usize,
    vars: &'a [String],
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &str, line: usize, base: usize, vars: &'a [String]) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            base,
            vars,
        }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.base + pos,
            message: message.into(),
        }
    }

    pub(crate) fn column(&self) -> usize {
        self.base + self.pos
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    pub(crate) fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
        self.pos > start
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn identifier(&mut self) -> Option<(usize, String)> {
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Some((start, self.chars[start..self.pos].iter().collect()))
    }

    fn unsigned(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().ok()
    }

    /// A declared variable name, spelled exactly.
    pub(crate) fn variable(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let (start, name) = self
            .identifier()
            .ok_or_else(|| self.error("expected a variable name"))?;
        self.vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| self.error_at(start, format!("unknown variable `{name}`")))
    }

    /// Splits an identifier into declared variable names.
    fn segment(&self, start: usize, name: &str) -> Result<Vec<u32>, ParseError> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Ok(vec![i as u32]);
        }
        let bytes = name.as_bytes();
        // ways[k]: number of segmentations of name[k..], capped at 2
        let mut ways = vec![0u8; bytes.len() + 1];
        let mut next = vec![None; bytes.len() + 1];
        ways[bytes.len()] = 1;
        for k in (0..bytes.len()).rev() {
            for (i, v) in self.vars.iter().enumerate() {
                if name[k..].starts_with(v.as_str()) && ways[k + v.len()] > 0 {
                    ways[k] = (ways[k] + ways[k + v.len()]).min(2);
                    next[k].get_or_insert(i);
                }
            }
        }
        match ways[0] {
            0 => Err(self.error_at(start, format!("unknown variable `{name}`"))),
            1 => {
                let mut out = Vec::new();
                let mut k = 0;
                while k < bytes.len() {
                    let i = next[k].expect("segmentation");
                    out.push(i as u32);
                    k += self.vars[i].len();
                }
                Ok(out)
            }
            _ => Err(self.error_at(start, format!("`{name}` splits into variables in more than one way"))),
        }
    }

    fn factor(&mut self, coeff: &mut Rational, word: &mut Vec<u32>) -> Result<(), ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.unsigned().expect("digits");
                let mut value = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.error("expected a denominator"));
                    }
                    let den = self.unsigned().expect("digits");
                    if den.is_zero() {
                        return Err(self.error_at(start, "zero denominator"));
                    }
                    value = Rational::new(value.to_integer(), den);
                }
                *coeff = coeff.clone() * value;
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let (start, name) = self.identifier().expect("identifier");
                let letters = self.segment(start, &name)?;
                let last = *letters.last().expect("nonempty");
                word.extend_from_slice(&letters[..letters.len() - 1]);
                let mut power = 1u32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.error("expected an exponent"));
                    }
                    let e = self.unsigned().expect("digits");
                    power = u32::try_from(e).map_err(|_| self.error_at(start, "exponent too large"))?;
                }
                word.extend(std::iter::repeat_n(last, power as usize));
                Ok(())
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of line")),
        }
    }

    fn term(&mut self) -> Result<(Rational, Word), ParseError> {
        let mut coeff = Rational::one();
        let mut word = Vec::new();
        self.factor(&mut coeff, &mut word)?;
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                self.skip_ws();
                self.factor(&mut coeff, &mut word)?;
                continue;
            }
            self.pos = save;
            if self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                self.factor(&mut coeff, &mut word)?;
                continue;
            }
            return Ok((coeff, Word::new(word)));
        }
    }

    /// One polynomial: signed terms joined by `+` and `-`.
    pub(crate) fn polynomial(&mut self) -> Result<NcPoly<Rational>, ParseError> {
        self.skip_ws();
        let mut sign = Rational::one();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                sign = -sign;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let mut out = NcPoly::zero();
        loop {
            self.skip_ws();
            let (c, w) = self.term()?;
            out.add_term(w, sign * c);
            let save = self.pos;
            self.skip_ws();
            match self.peek() {
                Some('+') => sign = Rational::one(),
                Some('-') => sign = -Rational::one(),
                _ => {
                    self.pos = save;
                    return Ok(out);
                }
            }
            self.pos += 1;
        }
    }

    /// Polynomials up to the end of the text.
    pub(crate) fn polynomial_list(&mut self) -> Result<Vec<NcPoly<Rational>>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            if self.at_end() {
                return Ok(out);
            }
            out.push(self.polynomial()?);
            self.skip_ws();
            if matches!(self.peek(), Some(',') | Some(';')) {
                self.pos += 1;
                self.skip_ws();
                if self.at_end() {
                    return Err(self.error("expected a polynomial after the separator"));
                }
            }
        }
    }
}

/// Renders a word with variable names, grouping runs into powers.
pub fn render_word(w: &Word, vars: &[String]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let letters = w.letters();
    let mut k = 0;
    while k < letters.len() {
        let mut run = 1;
        while k + run < letters.len() && letters[k + run] == letters[k] {
            run += 1;
        }
        let name = &vars[letters[k] as usize];
        parts.push(if run > 1 { format!("{name}^{run}") } else { name.clone() });
        k += run;
    }
    parts.join("*")
}

/// Renders an exponent vector with variable names.
pub fn render_exponents(a: &[u32], vars: &[String]) -> String {
    let parts: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e > 1 {
                format!("{}^{e}", vars[i])
            } else {
                vars[i].clone()
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn parse(text: &str, v: &[String]) -> Result<Vec<NcPoly<Rational>>, ParseError> {
        Cursor::new(text, 1, 1, v).polynomial_list()
    }

    #[test]
    fn juxtaposition_and_lists() {
        let v = vars(&["e", "f", "h"]);
        let ps = parse("e^3  f^3  h^3 - 4h", &v).unwrap();
        assert_eq!(ps.len(), 3);
        assert_eq!(ps[2].len(), 2);
        let ps = parse("2efh - h^2 - 2h, e * f", &v).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].coeff(&Word::new(vec![0, 1, 2])), Rational::from_integer(2.into()));
        assert_eq!(ps[1], NcPoly::monomial(Word::new(vec![0, 1]), Rational::one()));
    }

    #[test]
    fn fractions_and_powers() {
        let v = vars(&["x1", "x2"]);
        let p = &parse("-1/2*x1^2x2 + 3", &v).unwrap()[0];
        assert_eq!(p.coeff(&Word::new(vec![0, 0, 1])), Rational::new((-1).into(), 2.into()));
        assert_eq!(p.coeff(&Word::empty()), Rational::from_integer(3.into()));
    }

    #[test]
    fn errors_carry_columns() {
        let v = vars(&["e", "f"]);
        let err = parse("e^", &v).unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        let err = parse("f + g", &v).unwrap_err();
        assert_eq!(err.column, 5);
        assert!(parse("1/0", &v).is_err());
        let amb = vars(&["a", "b", "ab", "c"]);
        assert!(parse("abc", &amb).is_err());
        assert!(parse("ab", &amb).is_ok());
    }

    #[test]
    fn rendering() {
        let v = vars(&["X", "Y"]);
        assert_eq!(render_word(&Word::new(vec![0, 0, 1, 0]), &v), "X^2*Y*X");
        assert_eq!(render_word(&Word::empty(), &v), "1");
        assert_eq!(render_exponents(&[2, 1], &v), "X^2*Y");
    }
}
