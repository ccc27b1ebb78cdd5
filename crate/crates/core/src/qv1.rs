//! The QV1 text format.
//!
//! ```text
//! # comment
//! quiver 3
//! arrow a 1 2
//! arrow b 2 3
//! relations
//! rel a b        # traversal order: a first, then b
//! ```
//!
//! `quiver` comes first, `arrow` lines follow, and an optional `relations`
//! section lists zero relations, one `rel` line each. Blank lines and
//! everything after `#` are ignored. Unknown directives are errors.

use std::fmt::Write as _;

use crate::algebra::{Algebra, RelationSet};
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: Quiver,
    /// Relation paths as written, not yet reduced.
    pub relations: Vec<Path>,
}

impl QuiverFile {
    pub fn new(quiver: Quiver, relations: Vec<Path>) -> Self {
        QuiverFile { quiver, relations }
    }

    pub fn relation_set(&self) -> Result<RelationSet> {
        RelationSet::reduce(&self.quiver, self.relations.iter().cloned())
    }

    pub fn algebra(&self) -> Result<Algebra> {
        Algebra::new(self.quiver.clone(), self.relation_set()?)
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| err(line, format!("expected {what}, found `{tok}`")))
}

pub fn parse(text: &str) -> Result<QuiverFile> {
    let mut n: Option<usize> = None;
    let mut arrows: Vec<(String, Vertex, Vertex)> = Vec::new();
    let mut quiver: Option<Quiver> = None;
    let mut relations = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, args)) = toks.split_first() else {
            continue;
        };
        match head {
            "quiver" => {
                if n.is_some() {
                    return Err(err(line, "duplicate `quiver` line"));
                }
                let [count] = args else {
                    return Err(err(line, "usage: quiver <vertex count>"));
                };
                n = Some(parse_number(line, count, "a vertex count")?);
            }
            "arrow" => {
                let Some(n) = n else {
                    return Err(err(line, "`arrow` before `quiver`"));
                };
                if quiver.is_some() {
                    return Err(err(line, "`arrow` after `relations`"));
                }
                let [name, s, t] = args else {
                    return Err(err(line, "usage: arrow <id> <source> <target>"));
                };
                let (s, t) = (parse_number(line, s, "a vertex")?, parse_number(line, t, "a vertex")?);
                for v in [s, t] {
                    if v == 0 || v > n {
                        return Err(err(line, format!("vertex {v} outside 1..={n}")));
                    }
                }
                if arrows.iter().any(|(a, _, _)| a == name) {
                    return Err(err(line, format!("duplicate arrow `{name}`")));
                }
                arrows.push((name.to_string(), s, t));
            }
            "relations" => {
                let Some(n) = n else {
                    return Err(err(line, "`relations` before `quiver`"));
                };
                if quiver.is_some() {
                    return Err(err(line, "duplicate `relations` line"));
                }
                if !args.is_empty() {
                    return Err(err(line, "`relations` takes no arguments"));
                }
                quiver = Some(Quiver::new(n, arrows.drain(..)).map_err(|e| err(line, e.to_string()))?);
            }
            "rel" => {
                let Some(q) = &quiver else {
                    return Err(err(line, "`rel` outside a `relations` section"));
                };
                if args.is_empty() {
                    return Err(err(line, "empty relation"));
                }
                relations.push(q.path(args).map_err(|e| err(line, e.to_string()))?);
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    let quiver = match quiver {
        Some(q) => q,
        None => {
            let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing `quiver` line"))?;
            Quiver::new(n, arrows).map_err(|e| err(0, e.to_string()))?
        }
    };
    Ok(QuiverFile { quiver, relations })
}

pub fn emit(file: &QuiverFile) -> String {
    let q = &file.quiver;
    let mut out = String::new();
    out.push_str("# QV1\n");
    out.push_str("# relation words list arrows in traversal order (first arrow walked first);\n");
    out.push_str("# the trailing comment gives the same path as a composition-order product\n");
    let _ = writeln!(out, "quiver {}", q.vertex_count());
    for (_, a) in q.arrows() {
        let _ = writeln!(out, "arrow {} {} {}", a.name, a.source, a.target);
    }
    if !file.relations.is_empty() {
        out.push_str("relations\n");
        for p in &file.relations {
            let _ = writeln!(out, "rel {}  # {}", q.word_string(p), q.composition_string(p));
        }
    }
    out
}

/// QV1 text for an algebra, relations in canonical order.
pub fn emit_algebra(alg: &Algebra) -> String {
    emit(&QuiverFile::new(
        alg.quiver().clone(),
        alg.relations().generators().to_vec(),
    ))
}
