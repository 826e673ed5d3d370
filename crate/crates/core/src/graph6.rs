//! graph6 encoding.
//!
//! The vertex count is written as one byte `63 + n` for `n <= 62`, or `126`
//! followed by three (resp. `126 126` and six) base-64 digits for larger
//! graphs. The upper triangle of the adjacency matrix follows column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte
//! and zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const OPTIONAL_HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. Vertices are labeled `"0".."n-1"`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(OPTIONAL_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(BIAS..=LONG).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b:#04x} outside the printable range 63..=126"
        )));
    }
    let (n, body) = parse_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "{n} vertices need {expected} adjacency bytes, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(body, k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in k..expected * 6 {
        if bit(body, pad) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_index_edges(n, &edges)
}

fn bit(body: &[u8], k: usize) -> bool {
    let byte = body[k / 6] - BIAS;
    (byte >> (5 - k % 6)) & 1 == 1
}

fn parse_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != LONG {
        return Ok(((bytes[0] - BIAS) as usize, &bytes[1..]));
    }
    let digits = |s: &[u8]| {
        s.iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize)
    };
    if bytes.len() >= 2 && bytes[1] == LONG {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte vertex count".into()));
        }
        let n = digits(&bytes[2..8]);
        if n <= 258_047 {
            return Err(Error::Graph6(format!(
                "non-minimal vertex count encoding for n = {n}"
            )));
        }
        Ok((n, &bytes[8..]))
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 4-byte vertex count".into()));
        }
        let n = digits(&bytes[1..4]);
        if n <= 62 {
            return Err(Error::Graph6(format!(
                "non-minimal vertex count encoding for n = {n}"
            )));
        }
        Ok((n, &bytes[4..]))
    }
}

/// Encodes the graph in its current vertex order.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let bits = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    write_bits(n, bits.map(|(i, j)| g.is_adjacent(i, j)))
}

/// Encodes an upper-triangle bit string (graph6 column order) directly.
pub(crate) fn write_bits(n: usize, bits: impl Iterator<Item = bool>) -> String {
    let mut out = encode_order(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for b in bits {
        acc = (acc << 1) | b as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + BIAS) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

fn encode_order(n: usize) -> String {
    let digit = |shift: usize| ((((n >> shift) & 0x3f) as u8) + BIAS) as char;
    if n <= 62 {
        ((n as u8 + BIAS) as char).to_string()
    } else if n <= 258_047 {
        let mut s = String::from(LONG as char);
        for shift in [12, 6, 0] {
            s.push(digit(shift));
        }
        s
    } else {
        let mut s = String::new();
        s.push(LONG as char);
        s.push(LONG as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            s.push(digit(shift));
        }
        s
    }
}
