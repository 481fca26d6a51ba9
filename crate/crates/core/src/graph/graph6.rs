//! graph6 short form (order at most 62).
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six
//! bits per byte, most significant bit first, each byte offset by 63. The final
//! byte is zero-padded.

use super::{Graph, Vertex};
use crate::error::{Error, Result};

const MAX_SHORT_ORDER: usize = 62;
const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

fn bit_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(OPTIONAL_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(OFFSET..=126).contains(&b))
    {
        if position == 0 {
            return Err(Error::Graph6Header(byte));
        }
        return Err(Error::Graph6NonPrintable { position, byte });
    }
    let (&head, body) = bytes.split_first().ok_or(Error::Graph6Empty)?;
    if head == 126 {
        return Err(Error::Graph6LongForm);
    }
    let n = (head - OFFSET) as usize;
    let expected = bit_bytes(n);
    if body.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Error::Graph6Trailing(body.len() - expected));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.push_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    if (k..expected * 6).any(bit) {
        return Err(Error::Graph6Padding);
    }
    g.sort_adjacency();
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + bit_bytes(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen};

    #[test]
    fn fixtures_decode() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(parse_graph6("C~").unwrap(), complete(4).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::new(2));
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), complete(4).unwrap());
    }

    #[test]
    fn fixtures_encode() {
        assert_eq!(encode_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(encode_graph6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode_graph6(&Graph::new(0)).unwrap(), "?");
        // nauty: C6 labeled as the cycle 0-1-2-3-4-5-0
        assert_eq!(encode_graph6(&cycle(6).unwrap()).unwrap(), "EhEG");
        assert_eq!(encode_graph6(&complete(5).unwrap()).unwrap(), "D~{");
        assert_eq!(encode_graph6(&petersen()).unwrap(), "IheA@GUAo");
    }

    #[test]
    fn decode_errors() {
        assert_eq!(parse_graph6(""), Err(Error::Graph6Empty));
        assert_eq!(parse_graph6("~"), Err(Error::Graph6LongForm));
        assert_eq!(parse_graph6(" "), Err(Error::Graph6Header(b' ')));
        assert_eq!(
            parse_graph6("C\u{7}"),
            Err(Error::Graph6NonPrintable {
                position: 1,
                byte: 7
            })
        );
        assert_eq!(
            parse_graph6("D~"),
            Err(Error::Graph6Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(parse_graph6("C~~"), Err(Error::Graph6Trailing(1)));
        assert_eq!(parse_graph6("A`"), Err(Error::Graph6Padding));
    }

    #[test]
    fn encode_rejects_long_form() {
        assert_eq!(
            encode_graph6(&Graph::new(63)),
            Err(Error::Graph6TooLarge(63))
        );
        assert!(encode_graph6(&Graph::new(62)).is_ok());
    }
}
