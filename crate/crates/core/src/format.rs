//! Text and JSON formats for lattices, morphisms and corpus streams.
//!
//! Lattice text format, one lattice per block:
//!
//! ```text
//! lattice m2
//! elements 0 a b 1
//! cover 0 a
//! cover 0 b
//! cover a 1
//! cover b 1
//! ```
//!
//! `#` starts a comment; tokens are whitespace-separated. Bottom and top are
//! inferred and validated by the builder. A JSON object (or array of objects)
//! with keys `name`/`elements`/`covers` is accepted wherever the text form
//! is. Corpus streams may carry a manifest comment
//! `# corpus n=<k> modular=<bool> count=<m>`, validated on read.

use std::sync::Arc;

use serde::Deserialize;
use serde::Serialize;

use crate::elemset::Elem;
use crate::error::ParseError;
use crate::lattice::{IntervalView, Lattice};
use crate::morphism::LinearMorphism;

#[derive(Debug, Deserialize)]
struct LatticeJson {
    name: String,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

/// Corpus manifest line contents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Manifest {
    pub n: usize,
    pub modular: bool,
    pub count: usize,
}

fn build_from_parts(
    line: usize,
    name: &str,
    elements: Vec<String>,
    covers: &[(String, String)],
) -> Result<Lattice, ParseError> {
    let id = |s: &str| -> Result<Elem, ParseError> {
        elements
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| ParseError::Syntax {
                line,
                message: format!("cover references undeclared element `{s}`"),
            })
    };
    let mut pairs = Vec::with_capacity(covers.len());
    for (x, y) in covers {
        pairs.push((id(x)?, id(y)?));
    }
    Lattice::build(name, elements, &pairs).map_err(|source| ParseError::Lattice { line, source })
}

/// Parses one or more lattices from text or JSON, plus the manifest if the
/// stream carries one.
pub fn parse_lattices(input: &str) -> Result<(Vec<Lattice>, Option<Manifest>), ParseError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let parsed: Vec<LatticeJson> = if trimmed.starts_with('[') {
            serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?
        } else {
            vec![serde_json::from_str(input).map_err(|e| ParseError::Json(e.to_string()))?]
        };
        let mut out = Vec::new();
        for lj in parsed {
            out.push(build_from_parts(0, &lj.name, lj.elements, &lj.covers)?);
        }
        return Ok((out, None));
    }

    let mut out = Vec::new();
    let mut manifest = None;
    let mut cur: Option<(usize, String, Vec<String>, Vec<(String, String)>)> = None;

    let mut finish = |cur: &mut Option<(usize, String, Vec<String>, Vec<(String, String)>)>,
                      out: &mut Vec<Lattice>|
     -> Result<(), ParseError> {
        if let Some((line, name, elements, covers)) = cur.take() {
            out.push(build_from_parts(line, &name, elements, &covers)?);
        }
        Ok(())
    };

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(m) = rest.strip_prefix("corpus ") {
                let mut n = None;
                let mut modular = None;
                let mut count = None;
                for tok in m.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("n=") {
                        n = v.parse().ok();
                    } else if let Some(v) = tok.strip_prefix("modular=") {
                        modular = v.parse().ok();
                    } else if let Some(v) = tok.strip_prefix("count=") {
                        count = v.parse().ok();
                    }
                }
                if let (Some(n), Some(modular), Some(count)) = (n, modular, count) {
                    manifest = Some(Manifest { n, modular, count });
                } else {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: "malformed corpus manifest".into(),
                    });
                }
            }
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("lattice") => {
                finish(&mut cur, &mut out)?;
                let name = toks.next().ok_or_else(|| ParseError::Syntax {
                    line: line_no,
                    message: "`lattice` needs a name".into(),
                })?;
                cur = Some((line_no, name.to_string(), Vec::new(), Vec::new()));
            }
            Some("elements") => match cur.as_mut() {
                Some((_, _, elements, _)) => {
                    elements.extend(toks.map(|s| s.to_string()));
                }
                None => {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: "`elements` before `lattice`".into(),
                    })
                }
            },
            Some("cover") => {
                let (x, y) = match (toks.next(), toks.next()) {
                    (Some(x), Some(y)) => (x, y),
                    _ => {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            message: "`cover` needs two elements".into(),
                        })
                    }
                };
                match cur.as_mut() {
                    Some((_, _, _, covers)) => covers.push((x.to_string(), y.to_string())),
                    None => {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            message: "`cover` before `lattice`".into(),
                        })
                    }
                }
            }
            Some(other) => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    message: format!("unknown keyword `{other}`"),
                })
            }
            None => {}
        }
    }
    finish(&mut cur, &mut out)?;

    if let Some(m) = &manifest {
        if m.count != out.len() {
            return Err(ParseError::Syntax {
                line: 0,
                message: format!(
                    "manifest declares {} lattices but stream has {}",
                    m.count,
                    out.len()
                ),
            });
        }
    }
    Ok((out, manifest))
}

/// Parses exactly one lattice.
pub fn parse_lattice(input: &str) -> Result<Lattice, ParseError> {
    let (mut ls, _) = parse_lattices(input)?;
    match ls.len() {
        1 => Ok(ls.pop().expect("len checked")),
        n => Err(ParseError::Syntax {
            line: 0,
            message: format!("expected exactly one lattice, found {n}"),
        }),
    }
}

pub fn write_lattice(l: &Lattice) -> String {
    let mut s = String::new();
    s.push_str(&format!("lattice {}\n", l.name()));
    s.push_str("elements");
    for name in l.element_names() {
        s.push(' ');
        s.push_str(name);
    }
    s.push('\n');
    for &(x, y) in l.covers() {
        s.push_str(&format!("cover {} {}\n", l.element_name(x), l.element_name(y)));
    }
    s
}

pub fn write_corpus(lattices: &[Lattice], max_n: usize, modular: bool) -> String {
    let mut s = format!(
        "# corpus n={} modular={} count={}\n",
        max_n,
        modular,
        lattices.len()
    );
    for l in lattices {
        s.push('\n');
        s.push_str(&write_lattice(l));
    }
    s
}

/// Parses `morphism <name> : <lattice> { x->y, ... }`; the lattice name must
/// match `l` and every domain element must appear exactly once.
pub fn parse_morphism(
    input: &str,
    l: &Arc<Lattice>,
) -> Result<(String, LinearMorphism), ParseError> {
    parse_morphism_at(input, 0, l)
}

fn parse_morphism_at(
    input: &str,
    line: usize,
    l: &Arc<Lattice>,
) -> Result<(String, LinearMorphism), ParseError> {
    let syntax = |message: String| ParseError::Syntax { line, message };
    let input = input.trim();
    let rest = input
        .strip_prefix("morphism")
        .ok_or_else(|| syntax("expected `morphism`".into()))?
        .trim_start();
    let (head, body) = rest
        .split_once('{')
        .ok_or_else(|| syntax("missing `{`".into()))?;
    let body = body
        .strip_suffix('}')
        .ok_or_else(|| syntax("missing `}`".into()))?;
    let (name, lat_name) = head
        .split_once(':')
        .ok_or_else(|| syntax("expected `<name> : <lattice>`".into()))?;
    let name = name.trim();
    let lat_name = lat_name.trim();
    if lat_name != l.name() {
        return Err(syntax(format!(
            "morphism is over `{lat_name}` but the lattice is `{}`",
            l.name()
        )));
    }
    let mut values: Vec<Option<Elem>> = vec![None; l.n()];
    for entry in body.split(',') {
        let entry = entry.trim();
        if entry.is_empty() {
            continue;
        }
        let (from, to) = entry
            .split_once("->")
            .ok_or_else(|| syntax(format!("malformed map entry `{entry}`")))?;
        let from = l
            .element_by_name(from.trim())
            .ok_or_else(|| syntax(format!("unknown element `{}`", from.trim())))?;
        let to = l
            .element_by_name(to.trim())
            .ok_or_else(|| syntax(format!("unknown element `{}`", to.trim())))?;
        if values[from].is_some() {
            return Err(syntax(format!(
                "element `{}` mapped twice",
                l.element_name(from)
            )));
        }
        values[from] = Some(to);
    }
    let values: Vec<Elem> = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| syntax(format!("element `{}` has no image", l.element_name(i))))
        })
        .collect::<Result<_, _>>()?;
    let w = IntervalView::whole(l);
    let m = LinearMorphism::validate(w.clone(), w, values)
        .map_err(|source| ParseError::Morphism { line, source })?;
    Ok((name.to_string(), m))
}

/// Parses a file of morphism literals over `l`, one per line.
pub fn parse_morphisms(
    input: &str,
    l: &Arc<Lattice>,
) -> Result<Vec<(String, LinearMorphism)>, ParseError> {
    let mut out = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_morphism_at(line, idx + 1, l)?);
    }
    Ok(out)
}

/// One line-delimited machine-readable record with the stable schema tag.
pub fn record<T: Serialize>(kind: &str, data: &T) -> String {
    let mut v = serde_json::json!({
        "schema": "linlat.v1",
        "kind": kind,
    });
    v.as_object_mut()
        .expect("object literal")
        .insert("data".into(), serde_json::to_value(data).expect("serializable"));
    serde_json::to_string(&v).expect("json encodes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const M2: &str = "\
# the four-element diamond
lattice m2
elements 0 a b 1
cover 0 a
cover 0 b   # comments allowed here too
cover a 1
cover b 1
";

    #[test]
    fn parses_text() {
        let l = parse_lattice(M2).unwrap();
        assert_eq!(l.name(), "m2");
        assert_eq!(l.n(), 4);
        assert_eq!(l.covers().len(), 4);
    }

    #[test]
    fn parses_json() {
        let j = r#"{"name":"m2","elements":["0","a","b","1"],
                    "covers":[["0","a"],["0","b"],["a","1"],["b","1"]]}"#;
        let l = parse_lattice(j).unwrap();
        assert_eq!(l.n(), 4);
        assert_eq!(
            crate::corpus::canonical_form(&l),
            crate::corpus::canonical_form(&parse_lattice(M2).unwrap())
        );
    }

    #[test]
    fn reports_line_numbers() {
        let bad = "lattice x\nelements 0 1\ncover 0 2\n";
        match parse_lattices(bad) {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trips() {
        let l = parse_lattice(M2).unwrap();
        let l2 = parse_lattice(&write_lattice(&l)).unwrap();
        assert_eq!(l.element_names(), l2.element_names());
        assert_eq!(l.covers(), l2.covers());
    }

    #[test]
    fn corpus_manifest_is_checked() {
        let l = parse_lattice(M2).unwrap();
        let text = write_corpus(std::slice::from_ref(&l), 4, false);
        let (ls, m) = parse_lattices(&text).unwrap();
        assert_eq!(ls.len(), 1);
        assert_eq!(
            m,
            Some(Manifest {
                n: 4,
                modular: false,
                count: 1
            })
        );
        let lying = text.replace("count=1", "count=3");
        assert!(parse_lattices(&lying).is_err());
    }

    #[test]
    fn morphism_literals() {
        let l = Arc::new(parse_lattice(M2).unwrap());
        let (name, m) = parse_morphism("morphism phi : m2 { 0->0, a->a, b->0, 1->a }", &l).unwrap();
        assert_eq!(name, "phi");
        assert_eq!(l.element_name(m.kernel()), "b");
        assert!(parse_morphism("morphism p : m2 { 0->0 }", &l).is_err());
        assert!(parse_morphism("morphism p : other { 0->0, a->a, b->0, 1->a }", &l).is_err());
    }
}
