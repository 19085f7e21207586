//! The `.lpr` region format.
//!
//! ```text
//! # comment
//! region
//! poly 4 0 0 4 0 4 4 0 4
//! hole 4 1 1 1 3 3 3 3 1
//! end
//! ```
//!
//! `poly` rings are counter-clockwise filled boundaries and `hole` rings are clockwise.
//! Nesting is computed from containment. A ring record occupies one line. Coordinates are
//! integers, or `a/b` rationals where the caller allows them.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exact::{validate_region, RatPoint, Rational, Region, Ring, RingOrientation};

/// Whether rational coordinates are accepted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinates {
    Integer,
    Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in content.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &content[s..i], column: content[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &content[s..], column: content[..s].chars().count() + 1 });
    }
    out
}

fn parse_number(tok: &Token<'_>, coords: Coordinates) -> Result<Rational, String> {
    let text = tok.text;
    if let Some((num, den)) = text.split_once('/') {
        if coords == Coordinates::Integer {
            return Err(format!("rational coordinate `{text}` is not allowed in an input region"));
        }
        let num = BigInt::from_str(num).map_err(|_| format!("invalid numerator in `{text}`"))?;
        let den = BigInt::from_str(den).map_err(|_| format!("invalid denominator in `{text}`"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in `{text}`"));
        }
        Ok(Rational::new(num, den))
    } else {
        BigInt::from_str(text).map(Rational::from_integer).map_err(|_| format!("invalid coordinate `{text}`"))
    }
}

/// Parses and validates a region. Fatal validation failures are reported at the line of the
/// first offending ring.
pub fn parse_region(text: &str, coords: Coordinates) -> Result<Region, ParseError> {
    let err = |line: usize, column: usize, message: String| ParseError { line, column, message };
    let mut state = 0; // 0 before `region`, 1 inside, 2 after `end`
    let mut rings: Vec<(Ring, RingOrientation, usize)> = Vec::new();
    let mut last_line = 1;
    for (idx, line) in text.lines().enumerate() {
        let ln = idx + 1;
        last_line = ln;
        let toks = tokens(line);
        let Some(head) = toks.first() else { continue };
        match (state, head.text) {
            (0, "region") => {
                if let Some(t) = toks.get(1) {
                    return Err(err(ln, t.column, format!("unexpected `{}` after `region`", t.text)));
                }
                state = 1;
            }
            (0, other) => return Err(err(ln, head.column, format!("expected `region`, found `{other}`"))),
            (1, "end") => {
                if let Some(t) = toks.get(1) {
                    return Err(err(ln, t.column, format!("unexpected `{}` after `end`", t.text)));
                }
                state = 2;
            }
            (1, kind @ ("poly" | "hole")) => {
                let count_tok = toks
                    .get(1)
                    .ok_or_else(|| err(ln, head.column + head.text.len(), format!("`{kind}` needs a vertex count")))?;
                let n: usize = count_tok
                    .text
                    .parse()
                    .map_err(|_| err(ln, count_tok.column, format!("invalid vertex count `{}`", count_tok.text)))?;
                if n < 3 {
                    return Err(err(ln, count_tok.column, format!("a ring needs at least 3 vertices, got {n}")));
                }
                let coords_toks = &toks[2..];
                if coords_toks.len() != 2 * n {
                    let column = coords_toks.get(2 * n).map_or(line.chars().count() + 1, |t| t.column);
                    return Err(err(
                        ln,
                        column,
                        format!("`{kind} {n}` expects {} coordinates, found {}", 2 * n, coords_toks.len()),
                    ));
                }
                let mut values = Vec::with_capacity(2 * n);
                for t in coords_toks {
                    values.push(parse_number(t, coords).map_err(|m| err(ln, t.column, m))?);
                }
                let vertices: Vec<RatPoint> =
                    values.chunks(2).map(|c| RatPoint::new(c[0].clone(), c[1].clone())).collect();
                let expected = if kind == "poly" { RingOrientation::Ccw } else { RingOrientation::Cw };
                rings.push((Ring::new(vertices), expected, ln));
            }
            (1, other) => {
                return Err(err(ln, head.column, format!("expected `poly`, `hole` or `end`, found `{other}`")))
            }
            (_, other) => return Err(err(ln, head.column, format!("unexpected `{other}` after `end`"))),
        }
    }
    if state != 2 {
        let what = if state == 0 { "`region` header" } else { "`end`" };
        return Err(err(last_line, 1, format!("missing {what}")));
    }

    for (ring, expected, ln) in &rings {
        let area = ring.signed_area2();
        let wrong = match expected {
            RingOrientation::Ccw => area.is_negative(),
            _ => area.is_positive(),
        };
        if wrong {
            let (kind, dir) =
                if *expected == RingOrientation::Ccw { ("poly", "counter-clockwise") } else { ("hole", "clockwise") };
            return Err(err(*ln, 1, format!("`{kind}` ring must be {dir}")));
        }
    }
    let lines: Vec<(Ring, usize)> = rings.iter().map(|(r, _, ln)| (r.canonical(), *ln)).collect();
    let region = Region::from_rings(rings.into_iter().map(|(r, _, _)| r));
    if let Some(v) = validate_region(&region).into_iter().find(|v| v.is_fatal()) {
        // Map the violating ring back to its source line through its canonical form.
        let ring_index = match &v {
            crate::exact::Violation::Degenerate { ring }
            | crate::exact::Violation::DuplicateVertex { ring, .. }
            | crate::exact::Violation::CollinearVertex { ring, .. }
            | crate::exact::Violation::Nesting { ring } => *ring,
            crate::exact::Violation::ProperCrossing { ring_a, .. }
            | crate::exact::Violation::Overlap { ring_a, .. } => *ring_a,
        };
        let ln =
            region.rings().get(ring_index).and_then(|r| lines.iter().find(|(c, _)| c == r)).map_or(1, |(_, ln)| *ln);
        return Err(err(ln, 1, format!("invalid region: {v}")));
    }
    Ok(region)
}

/// Writes a region in canonical order: rings sorted by smallest vertex, each starting at its
/// smallest vertex.
pub fn write_region(region: &Region) -> String {
    let mut out = String::from("region\n");
    for ring in region.rings() {
        let kind = if ring.signed_area2().is_negative() { "hole" } else { "poly" };
        let _ = write!(out, "{kind} {}", ring.len());
        for v in ring.vertices() {
            let _ = write!(out, " {} {}", v.x, v.y);
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
