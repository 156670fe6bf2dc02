//! The plain-text graph format: a header line `n m`, then exactly `m` lines
//! `u v` with 0-based endpoints. Lines starting with `#` and blank lines are
//! ignored. Simple-graph mode rejects duplicate edges; multigraph mode keeps
//! them, in input order.

use bl_invariants::graph::{Graph, MultiGraph};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

#[derive(Debug, Clone)]
pub enum ParsedGraph {
    Simple(Graph),
    Multi(MultiGraph),
}

impl ParsedGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            ParsedGraph::Simple(g) => g.vertex_count(),
            ParsedGraph::Multi(g) => g.vertex_count(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            ParsedGraph::Simple(g) => g.edge_count(),
            ParsedGraph::Multi(g) => g.edge_count(),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_counted<T: std::str::FromStr>(
    token: &str,
    line: usize,
    what: &str,
) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| err(line, format!("cannot parse {what} from {token:?}")))
}

/// Parses the graph format. `multigraph` switches duplicate-edge handling.
pub fn parse_graph_file(text: &str, multigraph: bool) -> Result<ParsedGraph, ParseError> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = significant
        .next()
        .ok_or_else(|| err(0, "empty input: expected a header line \"n m\""))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(err(
            header_line,
            format!("expected header \"n m\", got {header:?}"),
        ));
    }
    let n: usize = parse_counted(tokens[0], header_line, "vertex count")?;
    let m: usize = parse_counted(tokens[1], header_line, "edge count")?;

    let mut edges: Vec<(usize, usize, usize)> = Vec::with_capacity(m);
    for (line_no, line) in significant {
        if edges.len() == m {
            return Err(err(
                line_no,
                format!("more than the declared {m} edge lines"),
            ));
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(
                line_no,
                format!("expected an edge line \"u v\", got {line:?}"),
            ));
        }
        let u: usize = parse_counted(tokens[0], line_no, "vertex index")?;
        let v: usize = parse_counted(tokens[1], line_no, "vertex index")?;
        edges.push((u, v, line_no));
    }
    if edges.len() != m {
        return Err(err(
            0,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }

    if multigraph {
        let mut g = MultiGraph::new(n);
        for (u, v, line_no) in edges {
            g.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
        }
        Ok(ParsedGraph::Multi(g))
    } else {
        let mut g = Graph::new(n);
        for (u, v, line_no) in edges {
            g.add_edge(u, v).map_err(|e| err(line_no, e.to_string()))?;
        }
        Ok(ParsedGraph::Simple(g))
    }
}

/// Renders a graph in the same format, edges in lexicographic order.
pub fn render_graph_file(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = format!("{n} {}\n", edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
