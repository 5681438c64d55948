//! Line-oriented text format for bound quiver algebras.
//!
//! ```text
//! # comments run to end of line
//! field 101
//! vertices 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! rel a*b
//! rel 2*x*y - y*x
//! ```
//!
//! `field` must come first and `vertices` second; arrows precede relations.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{Algebra, AlgebraError, Arrow, Path, Quiver, Relation};
use crate::linalg::is_valid_modulus;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// A parsed algebra presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub p: u32,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
        let mut p: Option<u32> = None;
        let mut vertex_count: Option<usize> = None;
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut quiver: Option<Quiver> = None;
        let mut relations = Vec::new();
        let mut last_line = 0;

        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            last_line = lineno;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match keyword {
                "field" => {
                    if p.is_some() {
                        return Err(err(lineno, "duplicate `field` line"));
                    }
                    let v: u64 = rest
                        .parse()
                        .map_err(|_| err(lineno, format!("expected an integer modulus, got `{rest}`")))?;
                    if !is_valid_modulus(v) {
                        return Err(err(lineno, format!("{v} is not a prime in [2, 2^31)")));
                    }
                    p = Some(v as u32);
                }
                _ if p.is_none() => return Err(err(lineno, "the first line must be `field <p>`")),
                "vertices" => {
                    if vertex_count.is_some() {
                        return Err(err(lineno, "duplicate `vertices` line"));
                    }
                    let n: usize = rest
                        .parse()
                        .map_err(|_| err(lineno, format!("expected a vertex count, got `{rest}`")))?;
                    if n == 0 {
                        return Err(err(lineno, "vertex count must be positive"));
                    }
                    vertex_count = Some(n);
                }
                _ if vertex_count.is_none() => {
                    return Err(err(lineno, "`vertices <n>` must follow the field line"))
                }
                "arrow" => {
                    if quiver.is_some() {
                        return Err(err(lineno, "arrows must precede relations"));
                    }
                    let arrow = parse_arrow(rest, vertex_count.unwrap(), lineno)?;
                    if arrows.iter().any(|a| a.name == arrow.name) {
                        return Err(err(lineno, format!("duplicate arrow name `{}`", arrow.name)));
                    }
                    arrows.push(arrow);
                }
                "rel" => {
                    if quiver.is_none() {
                        quiver = Some(
                            Quiver::new(vertex_count.unwrap(), std::mem::take(&mut arrows))
                                .map_err(|e| err(lineno, e.to_string()))?,
                        );
                    }
                    let q = quiver.as_ref().unwrap();
                    let terms = parse_relation(rest, q, lineno)?;
                    let rel = Relation::new(terms, q, p.unwrap()).map_err(|e| match e {
                        AlgebraError::InvalidRelation(m) => err(lineno, m),
                        other => err(lineno, other.to_string()),
                    })?;
                    relations.push(rel);
                }
                other => return Err(err(lineno, format!("unknown directive `{other}`"))),
            }
        }
        let Some(p) = p else {
            return Err(err(last_line.max(1), "missing `field <p>` line"));
        };
        let Some(n) = vertex_count else {
            return Err(err(last_line.max(1), "missing `vertices <n>` line"));
        };
        let quiver = match quiver {
            Some(q) => q,
            None => Quiver::new(n, arrows).map_err(|e| err(last_line, e.to_string()))?,
        };
        Ok(AlgebraFile { p, quiver, relations })
    }

    pub fn build(&self, max_degree: usize) -> Result<Algebra, AlgebraError> {
        Algebra::build(self.quiver.clone(), self.relations.clone(), self.p, max_degree)
    }

    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        AlgebraFile {
            p: a.modulus(),
            quiver: a.quiver().clone(),
            relations: a.relations().to_vec(),
        }
    }
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.p)?;
        writeln!(f, "vertices {}", self.quiver.vertex_count())?;
        for a in self.quiver.arrows() {
            writeln!(f, "arrow {}: {} -> {}", a.name, a.source + 1, a.target + 1)?;
        }
        for r in &self.relations {
            let mut line = String::from("rel ");
            for (i, (c, arrows)) in r.terms.iter().enumerate() {
                if i > 0 {
                    line.push_str(" + ");
                }
                let path = Path {
                    source: self.quiver.arrow(arrows[0]).source,
                    arrows: arrows.clone(),
                };
                if *c != 1 {
                    write!(line, "{c}*")?;
                }
                write!(line, "{}", path.display(&self.quiver))?;
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_vertex(tok: &str, n: usize, lineno: usize) -> Result<usize, ParseError> {
    let v: usize = tok
        .trim()
        .parse()
        .map_err(|_| err(lineno, format!("expected a vertex number, got `{}`", tok.trim())))?;
    if v == 0 || v > n {
        return Err(err(lineno, format!("vertex {v} outside 1..{n}")));
    }
    Ok(v - 1)
}

fn parse_arrow(rest: &str, n: usize, lineno: usize) -> Result<Arrow, ParseError> {
    let (name, ends) = rest
        .split_once(':')
        .ok_or_else(|| err(lineno, "expected `arrow <name>: <src> -> <tgt>`"))?;
    let name = name.trim();
    if !is_ident(name) {
        return Err(err(lineno, format!("invalid arrow name `{name}`")));
    }
    let (s, t) = ends
        .split_once("->")
        .ok_or_else(|| err(lineno, "expected `<src> -> <tgt>`"))?;
    Ok(Arrow {
        name: name.to_string(),
        source: parse_vertex(s, n, lineno)?,
        target: parse_vertex(t, n, lineno)?,
    })
}

/// `<term> {(+|-) <term>}`, `<term> := [<int> "*"] <arrow> {"*" <arrow>}`.
fn parse_relation(rest: &str, q: &Quiver, lineno: usize) -> Result<Vec<(i64, Vec<usize>)>, ParseError> {
    let bytes = rest.as_bytes();
    let mut pos = 0;
    let mut terms = Vec::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut sign = 1i64;
    skip_ws(&mut pos);
    if pos < bytes.len() && bytes[pos] == b'-' {
        sign = -1;
        pos += 1;
    }
    loop {
        skip_ws(&mut pos);
        let start = pos;
        while pos < bytes.len() && !matches!(bytes[pos], b'+' | b'-') {
            pos += 1;
        }
        let term = rest[start..pos].trim();
        if term.is_empty() {
            return Err(err(lineno, "empty term in relation"));
        }
        let (coeff, arrows) = parse_term(term, q, lineno)?;
        terms.push((sign * coeff, arrows));
        if pos >= bytes.len() {
            break;
        }
        sign = if bytes[pos] == b'-' { -1 } else { 1 };
        pos += 1;
    }
    Ok(terms)
}

fn parse_term(term: &str, q: &Quiver, lineno: usize) -> Result<(i64, Vec<usize>), ParseError> {
    let factors: Vec<&str> = term.split('*').map(str::trim).collect();
    let (coeff, names) = match factors[0].parse::<i64>() {
        Ok(c) => (c, &factors[1..]),
        Err(_) => (1, &factors[..]),
    };
    if names.is_empty() {
        return Err(err(lineno, format!("term `{term}` has no path")));
    }
    let arrows = names
        .iter()
        .map(|name| {
            if !is_ident(name) {
                return Err(err(lineno, format!("invalid arrow name `{name}` in `{term}`")));
            }
            q.arrow_id(name)
                .ok_or_else(|| err(lineno, format!("unknown arrow `{name}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((coeff, arrows))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "\
# commutative square
field 7
vertices 4

arrow a: 1 -> 2
arrow b: 2 -> 4   # trailing comment
arrow c: 1 -> 3
arrow d: 3 -> 4
rel a*b - c*d
";

    #[test]
    fn parses_square() {
        let f = AlgebraFile::parse(SQUARE).unwrap();
        assert_eq!(f.p, 7);
        assert_eq!(f.quiver.vertex_count(), 4);
        assert_eq!(f.relations.len(), 1);
        assert_eq!(f.relations[0].terms, vec![(1, vec![0, 1]), (6, vec![2, 3])]);
        let a = f.build(30).unwrap();
        assert_eq!(a.dim(), 9);
    }

    #[test]
    fn roundtrip_text() {
        let f = AlgebraFile::parse(SQUARE).unwrap();
        let again = AlgebraFile::parse(&f.to_string()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn coefficients_and_leading_sign() {
        let text = "field 5\nvertices 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrel -2*x*y + 7*y*x\n";
        let f = AlgebraFile::parse(text).unwrap();
        assert_eq!(f.relations[0].terms, vec![(3, vec![0, 1]), (2, vec![1, 0])]);
    }

    fn line_of(text: &str) -> usize {
        AlgebraFile::parse(text).unwrap_err().line
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("vertices 2\n"), 1);
        assert_eq!(line_of("field 4\nvertices 2\n"), 1);
        assert_eq!(line_of("field 5\nvertices 2\narrow a: 1 -> 3\n"), 3);
        assert_eq!(line_of("field 5\nvertices 2\narrow a: 1 -> 2\narrow a: 2 -> 1\n"), 4);
        assert_eq!(line_of("field 5\nvertices 2\narrow a: 1 -> 2\n\nrel a*a\n"), 5);
        assert_eq!(line_of("field 5\nvertices 2\narrow a: 1 -> 2\nrel a*q\n"), 4);
        assert_eq!(line_of("field 5\nvertices 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\nrel a*b - c\n"), 6);
        assert_eq!(line_of("field 5\nvertices 2\nbogus\n"), 3);
        assert_eq!(line_of("field 5\nvertices 2\narrow a: 1 -> 1\nrel a*a\narrow b: 1 -> 2\n"), 5);
    }
}
