//! graph6 text encoding of undirected simple graphs.
//!
//! Bit-exact per the published format: the order is encoded as `n + 63` for
//! `n <= 62` or as `'~'` followed by three 6-bit bytes for larger orders,
//! then the upper triangle is written column by column (`x_{0,1}, x_{0,2},
//! x_{1,2}, ...`), packed into 6-bit groups, zero-padded and offset by 63.
//! Decoding validates the header, the exact body length and that padding
//! bits are zero. Disconnected graphs round-trip fine; the solvers reject
//! them at their own entry points.

use std::fmt;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// A byte outside the printable graph6 range 63..=126.
    InvalidByte { pos: usize, byte: u8 },
    /// Order header malformed or incomplete.
    BadHeader,
    /// Order exceeds what this crate represents.
    OrderTooLarge { n: usize },
    /// Encoded order 0 (valid graph6, but graphs here have n >= 1).
    OrderZero,
    /// Body length does not match n(n-1)/2 bits.
    WrongLength { expected: usize, got: usize },
    /// Padding bits after the adjacency bits must be zero.
    NonZeroPadding,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::InvalidByte { pos, byte } => {
                write!(f, "invalid graph6 byte {byte:#04x} at position {pos}")
            }
            Graph6Error::BadHeader => write!(f, "malformed graph6 order header"),
            Graph6Error::OrderTooLarge { n } => {
                write!(f, "graph6 order {n} exceeds the supported maximum of {MAX_ORDER}")
            }
            Graph6Error::OrderZero => write!(f, "graph6 order 0 is not representable here"),
            Graph6Error::WrongLength { expected, got } => {
                write!(f, "graph6 body has {got} bytes, expected {expected}")
            }
            Graph6Error::NonZeroPadding => write!(f, "graph6 padding bits are not zero"),
        }
    }
}

impl std::error::Error for Graph6Error {}

impl From<GraphError> for Graph6Error {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::OrderZero => Graph6Error::OrderZero,
            GraphError::OrderTooLarge { n } => Graph6Error::OrderTooLarge { n },
            // Decoded bits can only produce loops/out-of-range through bugs.
            other => unreachable!("graph6 decode produced {other}"),
        }
    }
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }

    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 36-bit order form: far beyond MAX_ORDER by construction.
            return Err(Graph6Error::OrderTooLarge { n: usize::MAX });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { n });
    }

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::WrongLength { expected, got: body.len() });
    }

    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            let bit = (byte >> (5 - (idx % 6))) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    // Remaining bits of the last group are padding and must be zero.
    if bit_count % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - (bit_count % 6);
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }

    Ok(Graph::from_edges(n, &edges)?)
}
