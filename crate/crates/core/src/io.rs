//! Text formats for graphs and colorings.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! p <vertex_count> <edge_count>
//! e <u> <v>
//! ```
//!
//! Coloring files:
//!
//! ```text
//! s <colors_used> <distinct_palettes>
//! c <edge> <color>
//! ```
//!
//! Vertices and edges are 1-indexed on disk and 0-indexed in memory.

use std::fmt::Write as _;

use crate::coloring::{Color, EdgeColoring};
use crate::error::ParseError;
use crate::graph::Graph;

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N], ParseError> {
    if fields.len() != N {
        return Err(syntax(line, format!("expected {N} numbers, found {}", fields.len())));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| syntax(line, format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

// Non-comment, non-blank lines as (1-based line number, tag, fields).
fn records(text: &str) -> impl Iterator<Item = (usize, &str, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next()?;
        Some((i + 1, tag, parts.collect()))
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, tag, fields) in records(text) {
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate `p` header"));
                }
                let [n, m] = numbers::<2>(line, &fields)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                let [u, v] = numbers::<2>(line, &fields)?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(ParseError::Range {
                            line,
                            vertex: w,
                            vertex_count: n,
                        });
                    }
                }
                if u == v {
                    return Err(syntax(line, format!("loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if m != edges.len() {
        return Err(ParseError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges).expect("endpoints were validated"))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a string");
    }
    out
}

/// A parsed coloring file: the coloring plus the counts from its header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub coloring: EdgeColoring,
    pub colors_used: usize,
    pub distinct_palettes: usize,
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut entries: Vec<(usize, usize, Color)> = Vec::new();
    for (line, tag, fields) in records(text) {
        match tag {
            "s" => {
                if header.is_some() {
                    return Err(syntax(line, "duplicate `s` header"));
                }
                let [k, p] = numbers::<2>(line, &fields)?;
                header = Some((k, p));
            }
            "c" => {
                if header.is_none() {
                    return Err(ParseError::MissingHeader);
                }
                let [e, c] = numbers::<2>(line, &fields)?;
                if e == 0 {
                    return Err(syntax(line, "edge indices start at 1"));
                }
                if c == 0 || c > Color::MAX as usize {
                    return Err(syntax(line, format!("color {c} is not a positive 32-bit value")));
                }
                entries.push((line, e - 1, c as Color));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (colors_used, distinct_palettes) = header.ok_or(ParseError::MissingHeader)?;
    let mut colors = vec![0; entries.len()];
    for &(line, e, c) in &entries {
        match colors.get_mut(e) {
            None => {
                return Err(syntax(
                    line,
                    format!("edge {} beyond the {} listed", e + 1, entries.len()),
                ))
            }
            Some(slot) if *slot != 0 => return Err(syntax(line, format!("edge {} colored twice", e + 1))),
            Some(slot) => *slot = c,
        }
    }
    Ok(ColoringFile {
        coloring: EdgeColoring::from_colors(colors),
        colors_used,
        distinct_palettes,
    })
}

/// Serialize a total coloring. `distinct_palettes` goes into the header as
/// given.
pub fn serialize_coloring(c: &EdgeColoring, distinct_palettes: usize) -> String {
    let mut out = format!("s {} {}\n", c.colors_used(), distinct_palettes);
    for (e, &color) in c.as_slice().iter().enumerate() {
        writeln!(out, "c {} {}", e + 1, color).expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_complete, gen_grid};

    #[test]
    fn triangle() {
        let g = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_ne!(g, gen_complete(3));
    }

    #[test]
    fn grid_round_trip() {
        let g = gen_grid(3, 3).unwrap();
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# two vertices\n\np 2 1\n  # edge\ne 2 1\n").unwrap();
        assert_eq!(g.edges(), &[(1, 0)]);
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(
            parse_graph("p 2 1\ne 1 3\n"),
            Err(ParseError::Range {
                line: 2,
                vertex: 3,
                vertex_count: 2
            })
        );
        assert_eq!(
            parse_graph("p 2 2\ne 1 2\n"),
            Err(ParseError::CountMismatch { declared: 2, found: 1 })
        );
        assert_eq!(parse_graph("e 1 2\n"), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_graph("p 2 1\ne 1 x\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("p 2 1\ne 1 1\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(parse_graph("p 2\n"), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn coloring_round_trip() {
        let c = EdgeColoring::from_colors(vec![2, 1, 3]);
        let text = serialize_coloring(&c, 3);
        assert_eq!(text, "s 3 3\nc 1 2\nc 2 1\nc 3 3\n");
        let parsed = parse_coloring(&text).unwrap();
        assert_eq!(parsed.coloring, c);
        assert_eq!((parsed.colors_used, parsed.distinct_palettes), (3, 3));
    }

    #[test]
    fn coloring_errors() {
        assert!(matches!(
            parse_coloring("s 1 1\nc 1 0\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_coloring("s 1 1\nc 1 1\nc 1 2\n"),
            Err(ParseError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_coloring("s 1 1\nc 3 1\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert_eq!(parse_coloring("c 1 1\n"), Err(ParseError::MissingHeader));
    }
}
