use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::Coefficient;
use super::{Monomial, Polynomial, Ring};
use crate::error::ParseError;

/// Parses `x1*x2^2 - 1/2*x3 + 4` over `ring`. Multiplication must be written
/// with `*`; exponents are nonnegative integers.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, ring, 1, 1)
}

/// Same as [`parse_polynomial`], reporting positions relative to `line` and
/// starting `column` within a larger document.
pub fn parse_polynomial_at(
    text: &str,
    ring: &Ring,
    line: usize,
    column: usize,
) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        ring,
        line,
        column,
    };
    let poly = p.polynomial()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected `{c}`")));
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    ring: &'a Ring,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c == ' ' || c == '\t') {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column + self.pos, message)
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let n = self.ring.nvars();
        let mut terms = Vec::new();
        self.skip_ws();
        let mut sign = Coefficient::one();
        match self.peek() {
            Some('-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (c, m) = self.term()?;
            terms.push((m, c * &sign));
            self.skip_ws();
            match self.peek() {
                Some('+') => sign = Coefficient::one(),
                Some('-') => sign = -Coefficient::one(),
                None => break,
                Some(c) if is_ident_start(c) || c.is_ascii_digit() => {
                    return Err(self.error("expected `*` between factors"))
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(n, terms))
    }

    fn term(&mut self) -> Result<(Coefficient, Monomial), ParseError> {
        let mut coeff = Coefficient::one();
        let mut exps = vec![0u32; self.ring.nvars()];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    self.skip_ws();
                    let value = if self.peek() == Some('/') {
                        self.pos += 1;
                        self.skip_ws();
                        let den = self.integer()?;
                        if den.is_zero() {
                            return Err(self.error("zero denominator"));
                        }
                        Coefficient::new(num, den)
                    } else {
                        Coefficient::from_integer(num)
                    };
                    coeff *= value;
                }
                Some(c) if is_ident_start(c) => {
                    let start = self.pos;
                    let name = self.identifier();
                    let var = self.ring.index_of(&name).ok_or_else(|| {
                        ParseError::new(
                            self.line,
                            self.column + start,
                            format!("unknown variable `{name}`"),
                        )
                    })?;
                    self.skip_ws();
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        self.skip_ws();
                        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                            return Err(self.error("malformed exponent"));
                        }
                        let v = self.integer()?;
                        e = u32::try_from(v).map_err(|_| self.error("exponent too large"))?;
                    }
                    exps[var] += e;
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
                None => return Err(self.error("unexpected end of input")),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_exponents(exps)))
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        digits.parse().map_err(|_| self.error("malformed number"))
    }

    fn identifier(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().map(|&(_, c)| c).collect()
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}
