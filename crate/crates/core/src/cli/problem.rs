use std::fmt;

use crate::algebra::{parse_polynomial_at, OrderKind, Polynomial, Ring, TermOrder};
use crate::error::{Error, ParseError, Result};

/// A parsed problem: ring, term order, generators and optional user steps.
///
/// ```text
/// ring: x y z
/// order: grevlex x > z > y
/// ideal:
///   x*y - z^2
///   y*z
/// steps:
///   form(order: lex z > x > y): x + z
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProblemFile {
    pub ring: Ring,
    pub order: TermOrder,
    pub ideal: Vec<Polynomial>,
    pub steps: Vec<(Polynomial, TermOrder)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Ideal,
    Steps,
}

/// Parses an order specification `kind a > b > …`; unmentioned variables
/// follow in declaration order.
pub fn parse_order_spec(spec: &str, ring: &Ring) -> Result<TermOrder> {
    parse_order_at(spec, ring, 1, 1).map_err(Error::from)
}

fn parse_order_at(spec: &str, ring: &Ring, line: usize, column: usize) -> Result<TermOrder, ParseError> {
    let trimmed = spec.trim_start();
    let column = column + (spec.len() - trimmed.len());
    let (kind_str, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
    let kind: OrderKind = kind_str
        .parse()
        .map_err(|_| ParseError::new(line, column, format!("unknown order kind `{kind_str}`")))?;
    let rest_col = column + kind_str.len();
    let mut chain: Vec<&str> = Vec::new();
    if !rest.trim().is_empty() {
        let mut offset = 0;
        for piece in rest.split('>') {
            let name = piece.trim();
            let at = rest_col + offset + (piece.len() - piece.trim_start().len()) + 1;
            if name.is_empty() {
                return Err(ParseError::new(line, at, "empty variable in order chain"));
            }
            if ring.index_of(name).is_none() {
                return Err(ParseError::new(line, at, format!("unknown variable `{name}`")));
            }
            if chain.contains(&name) {
                return Err(ParseError::new(line, at, format!("duplicate priority for `{name}`")));
            }
            chain.push(name);
            offset += piece.len() + 1;
        }
    }
    TermOrder::from_chain(ring, kind, &chain).map_err(|e| ParseError::new(line, column, e.to_string()))
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let mut ring: Option<Ring> = None;
    let mut order_line: Option<(String, usize, usize)> = None;
    let mut ideal_lines: Vec<(String, usize, usize)> = Vec::new();
    let mut step_lines: Vec<(String, usize, usize)> = Vec::new();
    let mut section = Section::Header;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let code = strip_comment(raw);
        if code.trim().is_empty() {
            continue;
        }
        let indented = code.starts_with(' ') || code.starts_with('\t');
        let body = code.trim_start();
        let col = code.len() - body.len() + 1;
        if indented {
            let entry = (body.trim_end().to_string(), lineno, col);
            match section {
                Section::Ideal => ideal_lines.push(entry),
                Section::Steps => step_lines.push(entry),
                Section::Header => return Err(ParseError::new(lineno, col, "indented line outside a section").into()),
            }
            continue;
        }
        let Some((key, value)) = body.split_once(':') else {
            return Err(ParseError::new(lineno, col, "expected `key: value`").into());
        };
        let value_col = col + key.len() + 1;
        match key.trim() {
            "ring" => {
                if ring.is_some() {
                    return Err(ParseError::new(lineno, col, "duplicate `ring:` line").into());
                }
                let names: Vec<&str> = value.split_whitespace().collect();
                let mut seen = std::collections::HashSet::new();
                for name in &names {
                    if !seen.insert(*name) {
                        return Err(ParseError::new(lineno, value_col, format!("duplicate ring variable `{name}`")).into());
                    }
                }
                ring = Some(Ring::new(names).map_err(|e| ParseError::new(lineno, value_col, e.to_string()))?);
                section = Section::Header;
            }
            "order" => {
                order_line = Some((value.to_string(), lineno, value_col));
                section = Section::Header;
            }
            "ideal" => {
                if !value.trim().is_empty() {
                    return Err(ParseError::new(lineno, value_col, "generators go on indented lines after `ideal:`").into());
                }
                section = Section::Ideal;
            }
            "steps" => {
                if !value.trim().is_empty() {
                    return Err(ParseError::new(lineno, value_col, "steps go on indented lines after `steps:`").into());
                }
                section = Section::Steps;
            }
            other => return Err(ParseError::new(lineno, col, format!("unknown key `{other}`")).into()),
        }
    }

    let ring = ring.ok_or_else(|| ParseError::new(1, 1, "missing `ring:` line"))?;
    let order = match order_line {
        Some((spec, line, col)) => parse_order_at(&spec, &ring, line, col)?,
        None => TermOrder::natural(OrderKind::Grevlex, ring.nvars()),
    };
    let ideal = ideal_lines
        .iter()
        .map(|(text, line, col)| parse_polynomial_at(text, &ring, *line, *col))
        .collect::<Result<Vec<_>, _>>()?;
    let steps = step_lines
        .iter()
        .map(|(text, line, col)| parse_step(text, &ring, &order, *line, *col))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ProblemFile { ring, order, ideal, steps })
}

fn parse_step(
    text: &str,
    ring: &Ring,
    default: &TermOrder,
    line: usize,
    col: usize,
) -> Result<(Polynomial, TermOrder), ParseError> {
    let Some(rest) = text.strip_prefix("form") else {
        return Err(ParseError::new(line, col, "expected `form(order: …): …`"));
    };
    let rest_col = col + 4;
    if let Some(inner) = rest.strip_prefix('(') {
        let close = inner
            .find(')')
            .ok_or_else(|| ParseError::new(line, rest_col, "unclosed `(`"))?;
        let spec = inner[..close].trim_start();
        let spec_col = rest_col + 1 + (inner.len() - inner.trim_start().len());
        let spec = spec
            .strip_prefix("order:")
            .ok_or_else(|| ParseError::new(line, spec_col, "expected `order:`"))?;
        let order = parse_order_at(spec, ring, line, spec_col + 6)?;
        let after = &inner[close + 1..];
        let poly_text = after
            .trim_start()
            .strip_prefix(':')
            .ok_or_else(|| ParseError::new(line, rest_col + close + 2, "expected `:`"))?;
        let poly_col = col + text.len() - poly_text.len();
        Ok((parse_polynomial_at(poly_text, ring, line, poly_col)?, order))
    } else {
        let poly_text = rest
            .trim_start()
            .strip_prefix(':')
            .ok_or_else(|| ParseError::new(line, rest_col, "expected `:` or `(order: …)`"))?;
        let poly_col = col + text.len() - poly_text.len();
        Ok((parse_polynomial_at(poly_text, ring, line, poly_col)?, default.clone()))
    }
}

fn order_spec(order: &TermOrder, ring: &Ring) -> String {
    format!("{} {}", order.kind(), order.priority_names(ring).join(" > "))
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring.names().join(" "))?;
        writeln!(f, "order: {}", order_spec(&self.order, &self.ring))?;
        writeln!(f, "ideal:")?;
        for g in &self.ideal {
            writeln!(f, "  {}", g.fmt_with(&self.ring, Some(&self.order)))?;
        }
        if !self.steps.is_empty() {
            writeln!(f, "steps:")?;
            for (p, o) in &self.steps {
                writeln!(
                    f,
                    "  form(order: {}): {}",
                    order_spec(o, &self.ring),
                    p.fmt_with(&self.ring, Some(o))
                )?;
            }
        }
        Ok(())
    }
}
