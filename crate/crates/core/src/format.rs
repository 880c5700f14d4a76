//! The text format for structures.
//!
//! ```text
//! # comments run to end of line
//! structure f1-idem
//! constants 1 0 -1
//! generators x
//! relations
//!   x^2 = x
//! end
//! elements 1 0 −1 x −x        # optional with a presentation; checked
//! ```
//!
//! or, with an explicit table (one row per element, in `elements` order):
//!
//! ```text
//! structure three
//! constants 1 0 -1
//! elements 1 0 -1
//! table
//!   1  0  -1
//!   0  0   0
//!   -1 0   1
//! end
//! ```
//!
//! Names are normalized (`-` to `−`, `^2` to `²`), so ASCII spellings are
//! accepted anywhere.  [`write_structure`] output parses back to an equal
//! structure.

use crate::error::{Error, Result};
use crate::presentation::{Monomial, Presentation};
use crate::ts_core::{canonical_name, FiniteTs};
use std::path::Path;

/// A parsed structure file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub name: String,
    pub ts: FiniteTs,
}

struct Line<'a> {
    no: usize,
    text: &'a str,
    // byte offset of `text` within the raw line
    offset: usize,
    raw: &'a str,
}

impl Line<'_> {
    fn words(&self) -> Vec<(usize, &str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self.text.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    out.push((s, &self.text[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            out.push((s, &self.text[s..]));
        }
        out
    }

    /// 1-based character column of byte offset `i` within `text`.
    fn col(&self, i: usize) -> usize {
        self.raw[..self.offset + i].chars().count() + 1
    }

    fn err(&self, i: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.no, col: self.col(i), msg: msg.into() }
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let trimmed = body.trim_start();
            let offset = body.len() - trimmed.len();
            let t = trimmed.trim_end();
            (!t.is_empty()).then_some(Line { no: i + 1, text: t, offset, raw })
        })
        .collect()
}

fn valid_generator(g: &str) -> bool {
    let mut chars = g.chars();
    chars.next().is_some_and(|c| c.is_alphabetic()) && chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub fn parse_structure(text: &str) -> Result<StructureFile> {
    let ls = lines(text);
    let eof = || Error::Parse { line: text.lines().count().max(1), col: 1, msg: "unexpected end of input".into() };
    let mut it = ls.iter().peekable();

    let head = it.next().ok_or_else(eof)?;
    let hw = head.words();
    if hw[0].1 != "structure" || hw.len() != 2 {
        return Err(head.err(0, "expected `structure <name>`"));
    }
    let name = hw[1].1.to_string();

    let mut constants: Option<(&Line, Vec<(usize, String)>)> = None;
    let mut elements: Option<(&Line, Vec<(usize, String)>)> = None;
    let mut table: Option<Vec<&Line>> = None;
    let mut generators: Option<(&Line, Vec<String>)> = None;
    let mut relations: Option<Vec<&Line>> = None;

    while let Some(line) = it.next() {
        let w = line.words();
        let rest = || w[1..].iter().map(|&(i, s)| (i, canonical_name(s))).collect::<Vec<_>>();
        let dup = |seen: bool| if seen { Err(line.err(0, format!("duplicate `{}` section", w[0].1))) } else { Ok(()) };
        match w[0].1 {
            "constants" => {
                dup(constants.is_some())?;
                if w.len() != 4 {
                    return Err(line.err(0, "expected `constants <one> <zero> <minus-one>`"));
                }
                constants = Some((line, rest()));
            }
            "elements" => {
                dup(elements.is_some())?;
                elements = Some((line, rest()));
            }
            "generators" => {
                dup(generators.is_some())?;
                let mut gens = Vec::new();
                for &(i, g) in &w[1..] {
                    if !valid_generator(g) {
                        return Err(line.err(i, format!("bad generator name `{g}`")));
                    }
                    if gens.iter().any(|h| h == g) {
                        return Err(line.err(i, format!("generator `{g}` declared twice")));
                    }
                    gens.push(g.to_string());
                }
                generators = Some((line, gens));
            }
            "table" | "relations" => {
                if w.len() != 1 {
                    return Err(line.err(w[1].0, "unexpected text after section keyword"));
                }
                let mut body = Vec::new();
                loop {
                    let l = it.next().ok_or_else(eof)?;
                    if l.text == "end" {
                        break;
                    }
                    body.push(l);
                }
                if w[0].1 == "table" {
                    dup(table.is_some())?;
                    table = Some(body);
                } else {
                    dup(relations.is_some())?;
                    relations = Some(body);
                }
            }
            other => return Err(line.err(0, format!("unknown keyword `{other}`"))),
        }
    }

    let (cline, consts) = constants.ok_or_else(|| head.err(0, "missing `constants` line"))?;
    match (table, generators) {
        (Some(_), Some((gl, _))) => Err(gl.err(0, "a structure has either a table or generators, not both")),
        (None, None) => Err(head.err(0, "missing `table` or `generators`")),
        (Some(rows), None) => {
            if relations.is_some() {
                return Err(head.err(0, "`relations` without `generators`"));
            }
            let (eline, elems) = elements.ok_or_else(|| head.err(0, "a table needs an `elements` line"))?;
            let names: Vec<String> = elems.iter().map(|(_, n)| n.clone()).collect();
            for (k, (i, n)) in elems.iter().enumerate() {
                if names[..k].contains(n) {
                    return Err(eline.err(*i, format!("element `{n}` listed twice")));
                }
            }
            let index = |line: &Line, i: usize, n: &str| {
                names.iter().position(|m| m == n).ok_or_else(|| line.err(i, format!("unknown element `{n}`")))
            };
            let c: Vec<usize> = consts.iter().map(|(i, n)| index(cline, *i, n)).collect::<Result<_>>()?;
            if rows.len() != names.len() {
                let at = rows.get(names.len()).copied().unwrap_or(eline);
                return Err(at.err(0, format!("expected {} table rows, found {}", names.len(), rows.len())));
            }
            let mut table_rows = Vec::new();
            for row in rows {
                let w = row.words();
                if w.len() != names.len() {
                    return Err(row.err(0, format!("expected {} entries, found {}", names.len(), w.len())));
                }
                table_rows.push(w.iter().map(|&(i, s)| index(row, i, &canonical_name(s))).collect::<Result<Vec<_>>>()?);
            }
            let ts = FiniteTs::from_table(names, &table_rows, c[0], c[1], c[2])?;
            Ok(StructureFile { name, ts })
        }
        (None, Some((_, gens))) => {
            let canon: Vec<&str> = consts.iter().map(|(_, n)| n.as_str()).collect();
            if canon != ["1", "0", "\u{2212}1"] {
                return Err(cline.err(0, "a presentation has constants `1 0 -1`"));
            }
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let mut p = Presentation::new(&refs);
            for line in relations.unwrap_or_default() {
                let eq = line.text.find('=').ok_or_else(|| line.err(0, "relation has no `=`"))?;
                let side = |s: &str, off: usize| -> Result<Monomial> {
                    p.parse_monomial(s).map_err(|(col, msg)| {
                        let byte = s.char_indices().nth(col).map_or(s.len(), |(b, _)| b);
                        line.err(off + byte, msg)
                    })
                };
                let lhs = side(&line.text[..eq], 0)?;
                let rhs = side(&line.text[eq + 1..], eq + 1)?;
                p.relations.push((lhs, rhs));
            }
            let ts = p.build()?;
            if let Some((eline, elems)) = elements {
                let listed: Vec<&str> = elems.iter().map(|(_, n)| n.as_str()).collect();
                let actual: Vec<&str> = ts.names().iter().map(String::as_str).collect();
                if listed != actual {
                    return Err(eline.err(0, format!("elements do not match the presentation: {}", actual.join(" "))));
                }
            }
            Ok(StructureFile { name, ts })
        }
    }
}

/// Writes the structure; presentation-built structures keep their
/// presentation, others get an explicit table.
pub fn write_structure(name: &str, ts: &FiniteTs) -> String {
    let mut out = format!("structure {name}\n");
    let c = |e| ts.name(e).to_string();
    out.push_str(&format!("constants {} {} {}\n", c(ts.one()), c(ts.zero()), c(ts.minus_one())));
    if let Some(p) = ts.presentation() {
        out.push_str(format!("generators {}", p.generators.join(" ")).trim_end());
        out.push('\n');
        if !p.relations.is_empty() {
            out.push_str("relations\n");
            for (l, r) in &p.relations {
                out.push_str(&format!("  {} = {}\n", p.render_ascii(l), p.render_ascii(r)));
            }
            out.push_str("end\n");
        }
        out.push_str(&format!("elements {}\n", ts.names().join(" ")));
    } else {
        out.push_str(&format!("elements {}\n", ts.names().join(" ")));
        out.push_str("table\n");
        let width = ts.names().iter().map(|n| n.chars().count()).max().unwrap_or(1);
        for row in ts.rows() {
            let cells: Vec<String> = row.iter().map(|&i| format!("{:>width$}", ts.names()[i])).collect();
            out.push_str(&format!("  {}\n", cells.join(" ")));
        }
        out.push_str("end\n");
    }
    out
}

pub fn read_structure_file(path: &Path) -> Result<StructureFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_structure(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::Example;

    const THREE: &str = "structure three\nconstants 1 0 -1\nelements 1 0 -1\ntable\n 1 0 -1\n 0 0 0\n -1 0 1\nend\n";

    #[test]
    fn table_form() {
        let s = parse_structure(THREE).unwrap();
        assert_eq!(s.name, "three");
        assert_eq!(s.ts.names(), &["1", "0", "−1"]);
        let again = parse_structure(&write_structure("three", &s.ts)).unwrap();
        assert_eq!(again.ts, s.ts);
    }

    #[test]
    fn presentations_round_trip() {
        for ex in Example::ALL {
            let ts = ex.build();
            let text = write_structure(ex.name(), &ts);
            let back = parse_structure(&text).unwrap();
            assert_eq!(back.ts, ts, "{text}");
            assert_eq!(write_structure(ex.name(), &back.ts), text);
        }
    }

    #[test]
    fn errors_have_positions() {
        let bad = "structure t\nconstants 1 0 -1\nelements 1 0 -1\ntable\n 1 0 -1\n 0 0 q\n -1 0 1\nend\n";
        match parse_structure(bad) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (6, 6)),
            other => panic!("{other:?}"),
        }
        let bad = "structure t\nconstants 1 0 -1\ngenerators x\nrelations\n  x^2 = w\nend\n";
        match parse_structure(bad) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (5, 9)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_structure("structure t\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_structure("structure t\nconstants 1 0 -1\ngenerators x\nelements 1 0 -1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn non_ts_table_rejected() {
        let bad = "structure t\nconstants 1 0 -1\nelements 1 0 -1\ntable\n 1 0 -1\n 0 0 0\n -1 0 -1\nend\n";
        assert!(matches!(parse_structure(bad), Err(Error::NotTs { .. })));
    }
}
