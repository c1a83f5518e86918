//! Line-oriented text formats for ring elements, tower matrices, diagrams,
//! decks and diagram streams. Output is byte-for-byte deterministic and every
//! format parses back through the matching `FromStr` impl.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::coh_ring::{Monomial, RingElement, MAX_GENERATORS};
use crate::deck::Deck;
use crate::error::{Error, ParseError, Result};
use crate::forest::{BottDiagram, Label};
use crate::tower::BottMatrix;

/// A ring element printed with a chosen variable letter.
pub struct ElementDisplay<'a> {
    element: &'a RingElement,
    var: char,
}

impl RingElement {
    /// Display with `var` in place of `x`, e.g. `1 + 2*z1`.
    pub fn display_with(&self, var: char) -> ElementDisplay<'_> {
        ElementDisplay { element: self, var }
    }
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.element.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            if m.degree() > 0 {
                f.write_str("*")?;
                for j in m.indices() {
                    write!(f, "{}{}", self.var, j + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with('x').fmt(f)
    }
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// Parse a ring element written with variable letter `var`.
pub fn parse_element(s: &str, var: char) -> Result<RingElement> {
    let s = s.strip_suffix('\n').unwrap_or(s);
    if s.contains('\n') {
        return Err(perr(2, 1, "expected a single line"));
    }
    if s == "0" {
        return Ok(RingElement::zero());
    }
    let mut out = RingElement::zero();
    let mut seen = Vec::new();
    let mut column = 1;
    for term in s.split(" + ") {
        let (coef, mono) = match term.split_once('*') {
            Some((c, m)) => (c, Some(m)),
            None => (term, None),
        };
        let c: BigInt = coef.parse().map_err(|_| {
            perr(
                1,
                column,
                format!("expected integer coefficient, found `{coef}`"),
            )
        })?;
        if c == BigInt::from(0) {
            return Err(perr(1, column, "zero coefficient"));
        }
        let m = match mono {
            None => Monomial::ONE,
            Some(text) => {
                let mono_col = column + coef.len() + 1;
                parse_monomial(text, var)
                    .ok_or_else(|| perr(1, mono_col, format!("malformed monomial `{text}`")))?
            }
        };
        if seen.last().is_some_and(|prev: &Monomial| *prev >= m) {
            return Err(perr(1, column, "terms out of order or repeated"));
        }
        seen.push(m);
        out.add_term(m, c);
        column += term.len() + 3;
    }
    Ok(out)
}

fn parse_monomial(text: &str, var: char) -> Option<Monomial> {
    let mut indices = Vec::new();
    let mut rest = text;
    if rest.is_empty() {
        return None;
    }
    while !rest.is_empty() {
        rest = rest.strip_prefix(var)?;
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let digits = &rest[..end];
        if digits.is_empty() || digits.starts_with('0') {
            return None;
        }
        let i: usize = digits.parse().ok()?;
        if i == 0 || i > MAX_GENERATORS {
            return None;
        }
        if indices.last().is_some_and(|&prev| prev >= i - 1) {
            return None;
        }
        indices.push(i - 1);
        rest = &rest[end..];
    }
    Monomial::from_indices(indices)
}

impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_element(s, 'x')
    }
}

/// Splits input into lines and hands them out with 1-based numbers.
struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let body = text.strip_suffix('\n').unwrap_or(text);
        let lines = if text.is_empty() {
            Vec::new()
        } else {
            body.split('\n').collect()
        };
        Lines { lines, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.lines.get(self.pos) {
            Some(line) => {
                self.pos += 1;
                Ok((self.pos, line))
            }
            None => Err(perr(
                self.pos + 1,
                1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    fn is_done(&self) -> bool {
        self.pos >= self.lines.len()
    }

    fn finish(&self) -> Result<()> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some(_) => Err(perr(self.pos + 1, 1, "unexpected trailing content")),
        }
    }
}

/// Single-space separated integers with their 1-based columns.
fn tokens<T: FromStr>(line: &str, lineno: usize) -> Result<Vec<(T, usize)>> {
    if line.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut column = 1;
    for tok in line.split(' ') {
        let value = tok
            .parse::<T>()
            .map_err(|_| perr(lineno, column, format!("expected integer, found `{tok}`")))?;
        out.push((value, column));
        column += tok.len() + 1;
    }
    Ok(out)
}

fn single<T: FromStr>(line: &str, lineno: usize, what: &str) -> Result<T> {
    let mut toks = tokens::<T>(line, lineno)?;
    match toks.len() {
        0 => Err(perr(lineno, 1, format!("expected {what}"))),
        1 => Ok(toks.pop().expect("one token").0),
        _ => Err(perr(lineno, toks[1].1, format!("expected a single {what}"))),
    }
}

fn expect_len<T>(toks: &[(T, usize)], want: usize, lineno: usize, line: &str) -> Result<()> {
    if toks.len() == want {
        return Ok(());
    }
    let column = if toks.len() > want {
        toks[want].1
    } else {
        line.len() + 1
    };
    Err(perr(
        lineno,
        column,
        format!("expected {want} entries, found {}", toks.len()),
    ))
}

impl fmt::Display for BottMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for row in self.rows().iter().skip(1) {
            let parts: Vec<String> = row.iter().map(|a| a.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

fn parse_matrix_lines(lines: &mut Lines<'_>) -> Result<BottMatrix> {
    let (ln, line) = lines.next("dimension")?;
    let n: usize = single(line, ln, "dimension")?;
    if n > MAX_GENERATORS {
        return Err(perr(
            ln,
            1,
            format!("dimension {n} exceeds the maximum {MAX_GENERATORS}"),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    if n > 0 {
        rows.push(Vec::new());
    }
    for j in 1..n {
        let (ln, line) = lines.next(&format!("row {}", j + 1))?;
        let toks = tokens::<BigInt>(line, ln)?;
        expect_len(&toks, j, ln, line)?;
        rows.push(toks.into_iter().map(|(a, _)| a).collect());
    }
    BottMatrix::new(rows)
}

impl FromStr for BottMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let m = parse_matrix_lines(&mut lines)?;
        lines.finish()?;
        Ok(m)
    }
}

impl fmt::Display for BottDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        let parents: Vec<String> = self
            .parents()
            .iter()
            .map(|p| p.map_or(0, |p| p + 1).to_string())
            .collect();
        writeln!(f, "{}", parents.join(" "))?;
        let labels: Vec<String> = self
            .labels()
            .iter()
            .map(|l| l.unwrap_or(0).to_string())
            .collect();
        writeln!(f, "{}", labels.join(" "))
    }
}

fn parse_diagram_lines(lines: &mut Lines<'_>) -> Result<BottDiagram> {
    let (ln, line) = lines.next("vertex count")?;
    let n: usize = single(line, ln, "vertex count")?;

    let (pln, pline) = lines.next("parent list")?;
    let ptoks = tokens::<usize>(pline, pln)?;
    expect_len(&ptoks, n, pln, pline)?;
    let mut parent = Vec::with_capacity(n);
    for &(p, col) in &ptoks {
        if p > n {
            return Err(perr(pln, col, format!("parent {p} out of range")));
        }
        parent.push(p.checked_sub(1));
    }

    let (lln, lline) = lines.next("label list")?;
    let ltoks = tokens::<Label>(lline, lln)?;
    expect_len(&ltoks, n, lln, lline)?;
    let mut label = Vec::with_capacity(n);
    for (v, &(q, col)) in ltoks.iter().enumerate() {
        match (parent[v], q) {
            (None, 0) => label.push(None),
            (None, _) => return Err(perr(lln, col, "root must have label 0")),
            (Some(_), 0) => return Err(perr(lln, col, "edge label must be positive")),
            (Some(_), q) => label.push(Some(q)),
        }
    }

    BottDiagram::new(parent, label).map_err(|e| match e {
        Error::InvalidDiagram(msg) => perr(pln, 1, msg),
        other => other,
    })
}

impl FromStr for BottDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let d = parse_diagram_lines(&mut lines)?;
        lines.finish()?;
        Ok(d)
    }
}

/// Diagrams separated by blank lines.
pub fn format_diagram_stream(diagrams: &[BottDiagram]) -> String {
    diagrams
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse a blank-line separated diagram stream, optionally ending in a
/// `count=<k>` line that must match the number of records.
pub fn parse_diagram_stream(s: &str) -> Result<Vec<BottDiagram>> {
    let mut lines = Lines::new(s);
    let mut out = Vec::new();
    while !lines.is_done() {
        if let Some(rest) = lines.peek().and_then(|l| l.strip_prefix("count=")) {
            let (ln, _) = lines.next("count")?;
            let k: usize = rest
                .parse()
                .map_err(|_| perr(ln, 7, format!("expected integer, found `{rest}`")))?;
            if k != out.len() {
                return Err(perr(ln, 7, format!("count {k} but {} records", out.len())));
            }
            lines.finish()?;
            return Ok(out);
        }
        if !out.is_empty() {
            let (ln, line) = lines.next("blank separator")?;
            if !line.is_empty() {
                return Err(perr(ln, 1, "expected a blank line between records"));
            }
            if lines.peek().is_some_and(|l| l.starts_with("count=")) {
                continue;
            }
        }
        out.push(parse_diagram_lines(&mut lines)?);
    }
    Ok(out)
}

impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.cards.len())?;
        f.write_str(&format_diagram_stream(&self.cards))
    }
}

impl FromStr for Deck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let (ln, line) = lines.next("card count")?;
        let k: usize = single(line, ln, "card count")?;
        let mut cards = Vec::with_capacity(k);
        for i in 0..k {
            if i > 0 {
                let (ln, line) = lines.next("blank separator")?;
                if !line.is_empty() {
                    return Err(perr(ln, 1, "expected a blank line between cards"));
                }
            }
            cards.push(parse_diagram_lines(&mut lines)?);
        }
        lines.finish()?;
        Ok(Deck { cards })
    }
}
