//! Line-oriented text format for posets.
//!
//! ```text
//! # anything after '#' is a comment; blank lines are ignored
//! poset v1 n=<count>
//! e <id> <coord>      # coord is an integer or p/q
//! r <a> <b>           # a precedes b; the full relation is the closure
//! ```
//!
//! Relation records in an input document are an arbitrary subrelation.
//! Formatted output is always canonical: elements by ascending id, then
//! the transitive reduction (cover pairs) sorted lexicographically — the
//! smallest faithful representation, and stable under diffing.

use std::fmt::Write as _;

use realposet_core::coord::Coord;
use realposet_core::poset::{BuildError, ElementId, RealisticPoset};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("element {id} never declared (ids must cover 0..n)")]
    MissingElement { id: u32 },
    #[error(transparent)]
    Build(#[from] BuildError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse_poset(text: &str) -> Result<RealisticPoset, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (lno, header) = lines.next().ok_or_else(|| syntax(0, "empty document"))?;
    let n = parse_header(header).ok_or_else(|| {
        syntax(lno, format!("expected `poset v1 n=<count>`, got {header:?}"))
    })?;

    let mut coords: Vec<Option<Coord>> = vec![None; n];
    let mut pairs: Vec<(ElementId, ElementId)> = Vec::new();

    for (lno, line) in lines {
        let mut tok = line.split_whitespace();
        let kind = tok.next().unwrap();
        let rest: Vec<&str> = tok.collect();
        match kind {
            "e" => {
                let [id, coord] = rest[..] else {
                    return Err(syntax(lno, "expected `e <id> <coord>`"));
                };
                let id = parse_id(id, n).map_err(|m| syntax(lno, m))?;
                let coord: Coord = coord
                    .parse()
                    .map_err(|e| syntax(lno, format!("bad coordinate {coord:?}: {e}")))?;
                if coords[id.index()].replace(coord).is_some() {
                    return Err(syntax(lno, format!("element {id} declared twice")));
                }
            }
            "r" => {
                let [a, b] = rest[..] else {
                    return Err(syntax(lno, "expected `r <a> <b>`"));
                };
                let a = parse_id(a, n).map_err(|m| syntax(lno, m))?;
                let b = parse_id(b, n).map_err(|m| syntax(lno, m))?;
                pairs.push((a, b));
            }
            other => return Err(syntax(lno, format!("unknown record {other:?}"))),
        }
    }

    let coords: Vec<Coord> = coords
        .into_iter()
        .enumerate()
        .map(|(id, c)| c.ok_or(ParseError::MissingElement { id: id as u32 }))
        .collect::<Result<_, _>>()?;
    Ok(RealisticPoset::build(coords, &pairs)?)
}

fn parse_header(line: &str) -> Option<usize> {
    let rest = line.strip_prefix("poset")?.trim_start();
    let rest = rest.strip_prefix("v1")?.trim_start();
    let count = rest.strip_prefix("n=")?;
    count.parse().ok().filter(|_| !count.starts_with('+'))
}

fn parse_id(tok: &str, n: usize) -> Result<ElementId, String> {
    let id: u32 = tok
        .parse()
        .map_err(|_| format!("bad element id {tok:?}"))?;
    if (id as usize) < n {
        Ok(ElementId::new(id))
    } else {
        Err(format!("element id {id} out of range (n={n})"))
    }
}

/// Canonical form: header, elements ascending, cover pairs sorted.
pub fn format_poset(p: &RealisticPoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "poset v1 n={}", p.len());
    for x in p.elements() {
        let _ = writeln!(out, "e {} {}", x, p.coord(x));
    }
    for (a, b) in p.hasse_covers() {
        let _ = writeln!(out, "r {a} {b}");
    }
    out
}
