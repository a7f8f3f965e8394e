//! Line-oriented text formats.
//!
//! `.rgf` (representation graph):
//!
//! ```text
//! vertex <id> disk|pants
//! edge <id> <vertex> <vertex>
//! ```
//!
//! `.rmd` (round map descriptor), circles in any order, radii exactly `1..l`:
//!
//! ```text
//! circles <l>
//! circle <radius> index <0|1> birth <c> | death <c> | split <p> <c1> <c2> | merge <p1> <p2> <c>
//! border <id> <radius> <component>
//! ```
//!
//! Tokens are separated by spaces or tabs, `#` starts a comment, blank lines
//! are ignored. `circles` is optional; `border` lines make the descriptor
//! bordered.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::repgraph::{RepGraph, VertexKind};
use crate::roundmap::{BorderedDescriptor, CircleRecord, Event, RoundMapDescriptor, Removal};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
        if ch == ' ' || ch == '\t' || ch == '\r' {
            if let Some(s) = start.take() {
                out.push(Token { text: &body[s..i], column: body[..s].chars().count() + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn end_column(line: &str) -> usize {
    line.split('#').next().unwrap_or("").trim_end().chars().count() + 1
}

fn expect_arity(n: usize, toks: &[Token], want: usize, what: &str, raw: &str) -> Result<()> {
    if toks.len() < want {
        return Err(err(n, end_column(raw), format!("`{what}` needs {} fields, found {}", want - 1, toks.len() - 1)));
    }
    if toks.len() > want {
        return Err(err(n, toks[want].column, format!("unexpected `{}` after `{what}` line", toks[want].text)));
    }
    Ok(())
}

pub fn parse_rgf(text: &str) -> Result<RepGraph> {
    let mut g = RepGraph::new();
    let mut declared = HashMap::new();
    let mut references = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let n = k + 1;
        let toks = tokens(raw);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "vertex" => {
                expect_arity(n, &toks, 3, "vertex", raw)?;
                let kind = match toks[2].text {
                    "disk" => VertexKind::Disk,
                    "pants" => VertexKind::Pants,
                    other => return Err(err(n, toks[2].column, format!("unknown vertex kind `{other}` (disk or pants)"))),
                };
                declared.insert(toks[1].text.to_string(), ());
                g.add_vertex(toks[1].text, kind);
            }
            "edge" => {
                expect_arity(n, &toks, 4, "edge", raw)?;
                references.push((n, toks[2].column, toks[2].text.to_string()));
                references.push((n, toks[3].column, toks[3].text.to_string()));
                g.add_edge(toks[1].text, toks[2].text, toks[3].text);
            }
            other => return Err(err(n, head.column, format!("expected `vertex` or `edge`, found `{other}`"))),
        }
    }
    for (n, c, id) in references {
        if !declared.contains_key(&id) {
            return Err(err(n, c, format!("edge refers to undeclared vertex `{id}`")));
        }
    }
    Ok(g)
}

pub fn print_rgf(g: &RepGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("vertex {} {}\n", v.id, v.kind.keyword()));
    }
    for e in g.edges() {
        out.push_str(&format!("edge {} {} {}\n", e.id, e.ends.0, e.ends.1));
    }
    out
}

fn number<T: std::str::FromStr>(n: usize, t: &Token, what: &str) -> Result<T> {
    t.text.parse().map_err(|_| err(n, t.column, format!("{what} must be a non-negative integer, found `{}`", t.text)))
}

/// Parses a descriptor that may carry `border` lines.
pub fn parse_bordered_rmd(text: &str) -> Result<BorderedDescriptor> {
    let mut header: Option<(usize, usize, u32)> = None;
    let mut circles: BTreeMap<u32, (usize, CircleRecord)> = BTreeMap::new();
    let mut removals = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let n = k + 1;
        let toks = tokens(raw);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "circles" => {
                expect_arity(n, &toks, 2, "circles", raw)?;
                if header.is_some() {
                    return Err(err(n, head.column, "second `circles` header"));
                }
                header = Some((n, toks[1].column, number(n, &toks[1], "circle count")?));
            }
            "circle" => {
                if toks.len() < 5 {
                    return Err(err(n, end_column(raw), "expected `circle <radius> index <0|1> <event>`"));
                }
                let radius: u32 = number(n, &toks[1], "radius")?;
                if radius == 0 {
                    return Err(err(n, toks[1].column, "radius must be positive"));
                }
                if toks[2].text != "index" {
                    return Err(err(n, toks[2].column, format!("expected `index`, found `{}`", toks[2].text)));
                }
                let index: u8 = match toks[3].text {
                    "0" => 0,
                    "1" => 1,
                    other => return Err(err(n, toks[3].column, format!("index must be 0 or 1, found `{other}`"))),
                };
                let ev = &toks[4..];
                let s = |i: usize| ev[i].text.to_string();
                let event = match ev[0].text {
                    "birth" | "death" => {
                        expect_arity(n, ev, 2, ev[0].text, raw)?;
                        if ev[0].text == "birth" {
                            Event::Birth(s(1))
                        } else {
                            Event::Death(s(1))
                        }
                    }
                    "split" => {
                        expect_arity(n, ev, 4, "split", raw)?;
                        Event::Split { parent: s(1), children: [s(2), s(3)] }
                    }
                    "merge" => {
                        expect_arity(n, ev, 4, "merge", raw)?;
                        Event::Merge { parents: [s(1), s(2)], child: s(3) }
                    }
                    other => {
                        return Err(err(
                            n,
                            ev[0].column,
                            format!("unknown event `{other}` (birth, death, split or merge)"),
                        ))
                    }
                };
                if let Some((first, _)) = circles.get(&radius) {
                    return Err(err(n, toks[1].column, format!("radius {radius} already used on line {first}")));
                }
                circles.insert(radius, (n, CircleRecord { radius, index, event }));
            }
            "border" => {
                expect_arity(n, &toks, 4, "border", raw)?;
                let radius = number(n, &toks[2], "radius")?;
                removals.push(Removal { border: toks[1].text.to_string(), radius, component: toks[3].text.to_string() });
            }
            other => {
                return Err(err(n, head.column, format!("expected `circles`, `circle` or `border`, found `{other}`")))
            }
        }
    }
    let l = circles.len() as u32;
    if let Some((n, c, declared)) = header {
        if declared != l {
            return Err(err(n, c, format!("header declares {declared} circles but {l} are listed")));
        }
    }
    for (expected, (&r, (n, _))) in (1..).zip(circles.iter()) {
        if r != expected {
            return Err(err(*n, 1, format!("radius gap: no circle at radius {expected} below radius {r}")));
        }
    }
    let base = RoundMapDescriptor::new(circles.into_values().rev().map(|(_, c)| c).collect());
    Ok(BorderedDescriptor { base, removals, smap: None })
}

pub fn parse_rmd(text: &str) -> Result<RoundMapDescriptor> {
    let b = parse_bordered_rmd(text)?;
    if let Some(r) = b.removals.first() {
        return Err(Error::Bordered(format!("descriptor has border `{}`; expected a closed descriptor", r.border)));
    }
    Ok(b.base)
}

pub fn print_rmd(d: &RoundMapDescriptor) -> String {
    let mut out = format!("circles {}\n", d.l());
    for c in &d.circles {
        out.push_str(&format!("circle {} index {} {}\n", c.radius, c.index, c.event));
    }
    out
}

pub fn print_bordered_rmd(d: &BorderedDescriptor) -> String {
    let mut out = print_rmd(&d.base);
    for r in &d.removals {
        out.push_str(&format!("border {} {} {}\n", r.border, r.radius, r.component));
    }
    out
}
