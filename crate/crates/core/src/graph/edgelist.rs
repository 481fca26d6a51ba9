//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| bad(line_no, "expected two integers"))?;
        tok.parse()
            .map_err(|_| bad(line_no, format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(bad(line_no, "expected exactly two integers"));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == m {
            return Err(bad(line_no, format!("more than {m} edge lines")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        g.add_edge(u, v).map_err(|e| match e {
            Error::Loop(v) => bad(line_no, format!("loop at vertex {v}")),
            Error::DuplicateEdge(u, v) => bad(line_no, format!("duplicate edge {u} {v}")),
            Error::VertexOutOfRange { vertex, order } => bad(
                line_no,
                format!("vertex {vertex} out of range for order {order}"),
            ),
            other => other,
        })?;
        seen += 1;
    }
    if seen < m {
        return Err(bad(
            header_line,
            format!("header announces {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
