//! The `.hg` hypergraph text format.
//!
//! ```text
//! # a triangle plus a doubled 3-edge
//! n 6
//! 0 1
//! 1 2
//! 0 2
//! 3 4 5
//! 3 4 5
//! ```
//!
//! The first non-comment line is the header `n <vertex-count>`. Every later
//! line lists one edge as space-separated vertex ids; repeating a line adds
//! to the edge's multiplicity. `#` starts a comment.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, DEFAULT_MAX_RANK};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a hypergraph, rejecting edges above [`DEFAULT_MAX_RANK`].
///
/// ```
/// use unispec::io::parse_hg;
///
/// let h = parse_hg("n 3\n0 1 2\n0 1 2  # twice\n").unwrap();
/// assert_eq!(h.edges()[0].multiplicity, 2);
/// ```
pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    parse_hg_with_rank_limit(text, DEFAULT_MAX_RANK)
}

pub fn parse_hg_with_rank_limit(text: &str, max_rank: usize) -> Result<Hypergraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(count) = n else {
            let mut words = line.split_whitespace();
            let (Some("n"), Some(value), None) = (words.next(), words.next(), words.next()) else {
                return Err(parse_error(line_no, "expected header `n <vertex-count>`"));
            };
            let value = value
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad vertex count {value:?}")))?;
            n = Some(value);
            continue;
        };
        let mut edge = Vec::new();
        for word in line.split_whitespace() {
            let v: usize = word
                .parse()
                .map_err(|_| parse_error(line_no, format!("bad vertex id {word:?}")))?;
            if v >= count {
                return Err(parse_error(
                    line_no,
                    format!("vertex {v} out of range 0..{count}"),
                ));
            }
            if edge.contains(&v) {
                return Err(parse_error(
                    line_no,
                    format!("vertex {v} repeated in one edge"),
                ));
            }
            edge.push(v);
        }
        if edge.len() > max_rank {
            return Err(Error::RankLimit {
                rank: edge.len(),
                limit: max_rank,
            });
        }
        edges.push(edge);
    }
    let n = n.ok_or_else(|| {
        parse_error(
            text.lines().count().max(1),
            "missing header `n <vertex-count>`",
        )
    })?;
    Hypergraph::with_rank_limit(n, edges, max_rank)
}

/// Writes a hypergraph in canonical form: the header, then each distinct
/// edge in canonical order, repeated by multiplicity.
pub fn emit_hg(h: &Hypergraph) -> String {
    let mut out = format!("n {}\n", h.n());
    for e in h.edges() {
        let line: Vec<String> = e.part.vertices().iter().map(usize::to_string).collect();
        for _ in 0..e.multiplicity {
            out.push_str(&line.join(" "));
            out.push('\n');
        }
    }
    out
}

/// One-line form for reports: `n 4 | 0 1 | 1 2 3`.
pub fn inline_hg(h: &Hypergraph) -> String {
    emit_hg(h).trim_end().replace('\n', " | ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let h = Hypergraph::new(6, [vec![0], vec![0, 1, 2], vec![2, 1, 0], vec![3, 4, 5]]).unwrap();
        let text = emit_hg(&h);
        assert_eq!(text, "n 6\n0\n0 1 2\n0 1 2\n3 4 5\n");
        assert_eq!(parse_hg(&text).unwrap(), h);
        assert_eq!(inline_hg(&h), "n 6 | 0 | 0 1 2 | 0 1 2 | 3 4 5");
    }

    #[test]
    fn comments_and_blank_lines() {
        let h = parse_hg("# header next\n\nn 2 # two vertices\n  \n0 1\n").unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn edgeless() {
        assert_eq!(parse_hg("n 3").unwrap(), Hypergraph::edgeless(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |text: &str| match parse_hg(text).unwrap_err() {
            Error::Parse { line, .. } => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("0 1\n"), 1);
        assert_eq!(line("n 3\n0 1\n0 3\n"), 3);
        assert_eq!(line("n 3\n0 x\n"), 2);
        assert_eq!(line("n 3\n1 1\n"), 2);
        assert_eq!(line("# only a comment\n"), 1);
        assert!(matches!(
            parse_hg_with_rank_limit("n 4\n0 1 2 3\n", 3).unwrap_err(),
            Error::RankLimit { rank: 4, limit: 3 }
        ));
    }
}
