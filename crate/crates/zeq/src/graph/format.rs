//! Edge-list text format for digraphs.
//!
//! First line `n <N>`; an optional `weighted` line switches edge lines from
//! `u v` to `u v w` with a rational weight `p/q` or integer. Vertices are
//! 1-based in the text. Repeated `u v` lines raise multiplicity (unweighted
//! only). `#` starts a comment. Invader files add one `native <t> <h>` line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::digraph::{Digraph, GraphError};
use super::weighted::WeightedDigraph;
use crate::poly::Rat;

/// Parse and conversion errors, with 1-based line numbers where known.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("no `n <count>` header found")]
    Empty,
    #[error("file is weighted where an unweighted digraph was expected")]
    UnexpectedWeights,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

/// A parsed edge-list file, before graph construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub n: usize,
    pub weighted: bool,
    /// (tail, head, weight) with 0-based vertices.
    pub edges: Vec<(usize, usize, Option<Rat>)>,
    /// Native vertex pair from a `native <t> <h>` line.
    pub natives: Option<(usize, usize)>,
}

impl Document {
    pub fn to_digraph(&self) -> Result<Digraph, FormatError> {
        if self.weighted {
            return Err(FormatError::UnexpectedWeights);
        }
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v, _)| (u, v)).collect();
        Ok(Digraph::from_edges(self.n, &pairs)?)
    }

    /// Weighted digraph; unweighted documents get unit weights.
    pub fn to_weighted(&self) -> Result<WeightedDigraph, FormatError> {
        let triples: Vec<(usize, usize, Rat)> = self
            .edges
            .iter()
            .map(|(u, v, w)| (*u, *v, w.clone().unwrap_or_else(Rat::one)))
            .collect();
        Ok(WeightedDigraph::from_edges(self.n, &triples)?)
    }
}

/// Parses an edge-list file into its raw document form.
pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut doc: Option<Document> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(d) = doc.as_mut() else {
            if tokens.len() == 2 && tokens[0] == "n" {
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| line_err(line_no, format!("invalid vertex count `{}`", tokens[1])))?;
                doc = Some(Document {
                    n,
                    weighted: false,
                    edges: Vec::new(),
                    natives: None,
                });
                continue;
            }
            return Err(line_err(line_no, "expected `n <count>` header first"));
        };
        match tokens[0] {
            "n" => return Err(line_err(line_no, "duplicate `n` header")),
            "weighted" => {
                if tokens.len() != 1 {
                    return Err(line_err(line_no, "`weighted` takes no arguments"));
                }
                if d.weighted || !d.edges.is_empty() {
                    return Err(line_err(line_no, "`weighted` must appear once, before any edge"));
                }
                d.weighted = true;
            }
            "native" => {
                if tokens.len() != 3 {
                    return Err(line_err(line_no, "expected `native <t> <h>`"));
                }
                if d.natives.is_some() {
                    return Err(line_err(line_no, "duplicate `native` line"));
                }
                let t = parse_vertex(tokens[1], d.n, line_no)?;
                let h = parse_vertex(tokens[2], d.n, line_no)?;
                d.natives = Some((t, h));
            }
            tok if tok.chars().next().is_some_and(|c| c.is_ascii_digit()) => {
                let expected = if d.weighted { 3 } else { 2 };
                if tokens.len() != expected {
                    let shape = if d.weighted { "`u v w`" } else { "`u v`" };
                    return Err(line_err(line_no, format!("expected {shape} edge line")));
                }
                let u = parse_vertex(tokens[0], d.n, line_no)?;
                let v = parse_vertex(tokens[1], d.n, line_no)?;
                let w = if d.weighted {
                    Some(parse_rat(tokens[2], line_no)?)
                } else {
                    None
                };
                d.edges.push((u, v, w));
            }
            other => return Err(line_err(line_no, format!("unknown directive `{other}`"))),
        }
    }
    doc.ok_or(FormatError::Empty)
}

fn parse_vertex(token: &str, n: usize, line_no: usize) -> Result<usize, FormatError> {
    let v: usize = token
        .parse()
        .map_err(|_| line_err(line_no, format!("invalid vertex `{token}`")))?;
    if v == 0 || v > n {
        return Err(line_err(line_no, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

fn parse_rat(token: &str, line_no: usize) -> Result<Rat, FormatError> {
    let bad = || line_err(line_no, format!("invalid weight `{token}`"));
    let (num_s, den_s) = match token.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (token, None),
    };
    let numer: BigInt = num_s.parse().map_err(|_| bad())?;
    let denom: BigInt = match den_s {
        Some(s) => s.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(line_err(line_no, "weight denominator is zero"));
    }
    Ok(Rat::new(numer, denom))
}

/// Parses an unweighted digraph.
pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    parse_document(text)?.to_digraph()
}

/// Parses a weighted digraph; unweighted input gets unit weights.
pub fn parse_weighted(text: &str) -> Result<WeightedDigraph, FormatError> {
    parse_document(text)?.to_weighted()
}

/// Prints a digraph in edge-list format, one line per unit of multiplicity.
pub fn print_digraph(g: &Digraph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Prints a weighted digraph in edge-list format.
pub fn print_weighted(g: &WeightedDigraph) -> String {
    let mut s = format!("n {}\nweighted\n", g.n());
    for (u, v, w) in g.edges() {
        writeln!(s, "{} {} {}", u + 1, v + 1, format_rat(w)).unwrap();
    }
    s
}

fn format_rat(w: &Rat) -> String {
    if w.is_integer() {
        w.numer().to_string()
    } else {
        format!("{}/{}", w.numer(), w.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn digraph_round_trip() {
        let g = Digraph::from_edges(5, &[(0, 1), (2, 1), (1, 3), (3, 2), (3, 4)]).unwrap();
        let text = print_digraph(&g);
        assert_eq!(parse_digraph(&text).unwrap(), g);
    }

    #[test]
    fn multiplicity_by_repetition() {
        let g = parse_digraph("n 2\n1 2\n1 2\n2 2\n").unwrap();
        assert_eq!(g.adj(0, 1), 2);
        assert_eq!(g.adj(1, 1), 1);
        assert_eq!(parse_digraph(&print_digraph(&g)).unwrap(), g);
    }

    #[test]
    fn weighted_round_trip() {
        let g = WeightedDigraph::from_edges(
            3,
            &[(0, 1, rat(2)), (1, 0, ratio(1, 2)), (2, 2, rat(-1))],
        )
        .unwrap();
        let text = print_weighted(&g);
        assert!(text.contains("2 1 1/2"));
        assert!(text.contains("3 3 -1"));
        assert_eq!(parse_weighted(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a digraph\n\nn 2   # two vertices\n1 2 # the only edge\n";
        let g = parse_digraph(text).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.adj(0, 1), 1);
    }

    #[test]
    fn unweighted_lifts_to_unit_weights() {
        let w = parse_weighted("n 2\n1 2\n").unwrap();
        assert_eq!(w.weight(0, 1), Some(&rat(1)));
    }

    #[test]
    fn native_line() {
        let doc = parse_document("n 3\nnative 1 3\n1 2\n2 3\n").unwrap();
        assert_eq!(doc.natives, Some((0, 2)));
        assert_eq!(doc.to_digraph().unwrap().m(), 2);
    }

    #[test]
    fn header_errors() {
        assert_eq!(parse_document(""), Err(FormatError::Empty));
        assert!(matches!(
            parse_document("1 2\n"),
            Err(FormatError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_document("n 2\nn 3\n"),
            Err(FormatError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn vertex_errors() {
        assert!(matches!(
            parse_document("n 2\n0 1\n"),
            Err(FormatError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_document("n 2\n1 3\n"),
            Err(FormatError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn weight_errors() {
        assert!(matches!(
            parse_document("n 2\n1 2 5\n"),
            Err(FormatError::Line { line: 2, .. })
        ));
        assert!(matches!(
            parse_document("n 2\nweighted\n1 2\n"),
            Err(FormatError::Line { line: 3, .. })
        ));
        assert!(matches!(
            parse_document("n 2\nweighted\n1 2 1/0\n"),
            Err(FormatError::Line { line: 3, .. })
        ));
        assert!(matches!(
            parse_document("n 2\nweighted\n1 2 x\n"),
            Err(FormatError::Line { line: 3, .. })
        ));
    }

    #[test]
    fn unknown_directive() {
        assert!(matches!(
            parse_document("n 2\nfrobnicate 1\n"),
            Err(FormatError::Line { line: 2, .. })
        ));
    }

    #[test]
    fn weighted_document_rejected_as_digraph() {
        let doc = parse_document("n 2\nweighted\n1 2 3\n").unwrap();
        assert_eq!(doc.to_digraph(), Err(FormatError::UnexpectedWeights));
    }
}
