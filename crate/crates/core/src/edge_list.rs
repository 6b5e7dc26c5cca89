//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines, 0-indexed)
//! ```
//!
//! Everything after `#` on a line is ignored, as are blank lines.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut adj: Vec<std::collections::HashSet<usize>> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::parse(
                lineno,
                format!("expected two integers, found {} field(s)", fields.len()),
            ));
        }
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("'{t}' is not a nonnegative integer")))
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);

        match header {
            None => {
                header = Some((a, b));
                adj = vec![Default::default(); a];
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(Error::parse(
                        lineno,
                        format!("more than the declared {m} edges"),
                    ));
                }
                if a >= n || b >= n {
                    return Err(Error::parse(
                        lineno,
                        format!("edge ({a}, {b}) has an endpoint outside 0..{n}"),
                    ));
                }
                if a == b {
                    return Err(Error::parse(lineno, format!("self-loop at vertex {a}")));
                }
                if !adj[a].insert(b) {
                    return Err(Error::parse(lineno, format!("duplicate edge ({a}, {b})")));
                }
                adj[b].insert(a);
                edges.push((a, b));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| Error::parse(0, "missing 'n m' header line"))?;
    if edges.len() != m {
        return Err(Error::parse(
            0,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

/// Writes `g` with edges `u < v` in lexicographic order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# a path\n4 3\n0 1 # first\n\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    fn line_of(text: &str) -> usize {
        match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of("3 2\n0 1\n1 0\n"), 3);
        assert_eq!(line_of("3 1\n# c\n2 2\n"), 3);
        assert_eq!(line_of("3 1\n0 5\n"), 2);
        assert_eq!(line_of("3 1\n0 x\n"), 2);
        assert_eq!(line_of("3 1\n0 1 2\n"), 2);
        assert_eq!(line_of("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(line_of("3 2\n0 1\n"), 0);
        assert_eq!(line_of("# nothing\n"), 0);
    }

    #[test]
    fn empty_graph() {
        let g = parse_edge_list("5 0\n").unwrap();
        assert_eq!(g, Graph::empty(5));
        assert_eq!(to_edge_list_string(&g), "5 0\n");
    }
}
