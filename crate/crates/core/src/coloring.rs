//! Edge and vertex colorings plus their certificate text format.
//!
//! Colorings are total assignments over a palette `0..k`. Edge colors are
//! indexed by the host graph's lexicographic edge order. A vertex coloring
//! with an empty palette is the degenerate certificate for complete graphs
//! (no path ever needs an internal vertex); it is rejected for any other
//! host.
//!
//! Text format, consumed and produced by the CLI: a line with `k`, then one
//! `u v c` line per edge (edge colorings) or one `v c` line per vertex
//! (vertex colorings).

use std::fmt;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringError {
    /// Palette must have at least one color (edge colorings).
    EmptyPalette,
    /// Assignment length does not cover the host exactly.
    NotTotal { expected: usize, got: usize },
    /// A color is outside `0..k`.
    ColorOutOfRange { color: usize, palette: usize },
    /// Empty vertex palettes certify complete hosts only.
    EmptyPaletteNonComplete,
    /// Text mentions an edge or vertex the host does not have.
    UnknownEdge { u: usize, v: usize },
    UnknownVertex { v: usize },
    /// An edge or vertex was assigned twice in the text.
    DuplicateAssignment,
    /// Malformed certificate text.
    Syntax { line: usize, reason: &'static str },
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::EmptyPalette => write!(f, "palette must contain at least one color"),
            ColoringError::NotTotal { expected, got } => {
                write!(f, "assignment covers {got} items, host needs {expected}")
            }
            ColoringError::ColorOutOfRange { color, palette } => {
                write!(f, "color {color} outside palette 0..{palette}")
            }
            ColoringError::EmptyPaletteNonComplete => {
                write!(f, "an empty vertex palette is only valid on a complete host")
            }
            ColoringError::UnknownEdge { u, v } => write!(f, "host has no edge ({u}, {v})"),
            ColoringError::UnknownVertex { v } => write!(f, "host has no vertex {v}"),
            ColoringError::DuplicateAssignment => write!(f, "item assigned more than once"),
            ColoringError::Syntax { line, reason } => {
                write!(f, "coloring parse error on line {line}: {reason}")
            }
        }
    }
}

impl std::error::Error for ColoringError {}

/// A total edge coloring over palette `0..k`, indexed by the host's
/// lexicographic edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    palette: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn new(host: &Graph, palette: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if palette == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        if colors.len() != host.edge_count() {
            return Err(ColoringError::NotTotal {
                expected: host.edge_count(),
                got: colors.len(),
            });
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette) {
            return Err(ColoringError::ColorOutOfRange { color: c, palette });
        }
        Ok(EdgeColoring { palette, colors })
    }

    #[inline(always)]
    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Color of the `i`-th edge in the host's lexicographic edge order.
    #[inline(always)]
    pub fn color(&self, edge_index: usize) -> usize {
        self.colors[edge_index]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Same assignment viewed against a wider palette.
    pub fn widened(&self, palette: usize) -> EdgeColoring {
        assert!(palette >= self.palette);
        EdgeColoring { palette, colors: self.colors.clone() }
    }

    pub fn to_text(&self, host: &Graph) -> String {
        let mut out = format!("{}\n", self.palette);
        for ((u, v), c) in host.edges().into_iter().zip(&self.colors) {
            out.push_str(&format!("{u} {v} {c}\n"));
        }
        out
    }

    pub fn parse(text: &str, host: &Graph) -> Result<Self, ColoringError> {
        let (palette, body) = parse_header(text)?;
        if palette == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        let edges = host.edges();
        let mut colors: Vec<Option<usize>> = vec![None; edges.len()];
        for (lineno, line) in body {
            let fields = parse_fields::<3>(line, lineno)?;
            let [u, v, c] = fields;
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            let idx = edges
                .binary_search(&(a, b))
                .map_err(|_| ColoringError::UnknownEdge { u: a, v: b })?;
            if colors[idx].is_some() {
                return Err(ColoringError::DuplicateAssignment);
            }
            colors[idx] = Some(c);
        }
        let assigned = colors.iter().flatten().count();
        if assigned != edges.len() {
            return Err(ColoringError::NotTotal { expected: edges.len(), got: assigned });
        }
        EdgeColoring::new(host, palette, colors.into_iter().flatten().collect())
    }
}

/// A total vertex coloring over palette `0..k`. Palette 0 carries no
/// assignments and is valid only for complete hosts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    palette: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(host: &Graph, palette: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if palette == 0 {
            if !host.is_complete() {
                return Err(ColoringError::EmptyPaletteNonComplete);
            }
            if !colors.is_empty() {
                return Err(ColoringError::NotTotal { expected: 0, got: colors.len() });
            }
            return Ok(VertexColoring { palette: 0, colors });
        }
        if colors.len() != host.order() {
            return Err(ColoringError::NotTotal { expected: host.order(), got: colors.len() });
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= palette) {
            return Err(ColoringError::ColorOutOfRange { color: c, palette });
        }
        Ok(VertexColoring { palette, colors })
    }

    /// The degenerate certificate for a complete host.
    pub fn empty_for_complete(host: &Graph) -> Result<Self, ColoringError> {
        VertexColoring::new(host, 0, Vec::new())
    }

    #[inline(always)]
    pub fn palette(&self) -> usize {
        self.palette
    }

    #[inline(always)]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn to_text(&self, _host: &Graph) -> String {
        let mut out = format!("{}\n", self.palette);
        for (v, c) in self.colors.iter().enumerate() {
            out.push_str(&format!("{v} {c}\n"));
        }
        out
    }

    pub fn parse(text: &str, host: &Graph) -> Result<Self, ColoringError> {
        let (palette, body) = parse_header(text)?;
        if palette == 0 {
            if !body.is_empty() {
                return Err(ColoringError::NotTotal { expected: 0, got: body.len() });
            }
            return VertexColoring::new(host, 0, Vec::new());
        }
        let mut colors: Vec<Option<usize>> = vec![None; host.order()];
        for (lineno, line) in body {
            let [v, c] = parse_fields::<2>(line, lineno)?;
            if v >= host.order() {
                return Err(ColoringError::UnknownVertex { v });
            }
            if colors[v].is_some() {
                return Err(ColoringError::DuplicateAssignment);
            }
            colors[v] = Some(c);
        }
        let assigned: Vec<usize> = colors.iter().copied().flatten().collect();
        if assigned.len() != host.order() {
            return Err(ColoringError::NotTotal {
                expected: host.order(),
                got: assigned.len(),
            });
        }
        VertexColoring::new(host, palette, assigned)
    }
}

// ----------------------------------------------------------------------
// Text helpers
// ----------------------------------------------------------------------

fn parse_header(text: &str) -> Result<(usize, Vec<(usize, &str)>), ColoringError> {
    let mut lines: Vec<(usize, &str)> = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err(ColoringError::Syntax { line: 1, reason: "missing palette header" });
    }
    let (lineno, header) = lines.remove(0);
    let palette: usize = header.parse().map_err(|_| ColoringError::Syntax {
        line: lineno + 1,
        reason: "palette must be an integer",
    })?;
    Ok((palette, lines))
}

fn parse_fields<const N: usize>(line: &str, lineno: usize) -> Result<[usize; N], ColoringError> {
    let mut out = [0usize; N];
    let mut parts = line.split_whitespace();
    for slot in &mut out {
        *slot = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(ColoringError::Syntax { line: lineno + 1, reason: "expected integers" })?;
    }
    if parts.next().is_some() {
        return Err(ColoringError::Syntax { line: lineno + 1, reason: "too many fields" });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_coloring_validates_totality_and_range() {
        let g = Graph::path(3).unwrap();
        assert!(EdgeColoring::new(&g, 2, vec![0, 1]).is_ok());
        assert_eq!(
            EdgeColoring::new(&g, 2, vec![0]),
            Err(ColoringError::NotTotal { expected: 2, got: 1 })
        );
        assert_eq!(
            EdgeColoring::new(&g, 2, vec![0, 2]),
            Err(ColoringError::ColorOutOfRange { color: 2, palette: 2 })
        );
        assert_eq!(EdgeColoring::new(&g, 0, vec![]), Err(ColoringError::EmptyPalette));
    }

    #[test]
    fn empty_vertex_palette_requires_complete_host() {
        let k4 = Graph::complete(4).unwrap();
        assert!(VertexColoring::empty_for_complete(&k4).is_ok());
        let p4 = Graph::path(4).unwrap();
        assert_eq!(
            VertexColoring::empty_for_complete(&p4),
            Err(ColoringError::EmptyPaletteNonComplete)
        );
    }

    #[test]
    fn edge_coloring_text_round_trip() {
        let g = Graph::cycle(4).unwrap();
        let c = EdgeColoring::new(&g, 2, vec![0, 1, 1, 0]).unwrap();
        let text = c.to_text(&g);
        let back = EdgeColoring::parse(&text, &g).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn vertex_coloring_text_round_trip() {
        let g = Graph::path(4).unwrap();
        let c = VertexColoring::new(&g, 2, vec![0, 0, 1, 0]).unwrap();
        let back = VertexColoring::parse(&c.to_text(&g), &g).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn parse_rejects_unknown_and_duplicate_edges() {
        let g = Graph::path(3).unwrap();
        assert_eq!(
            EdgeColoring::parse("1\n0 2 0\n1 2 0\n", &g),
            Err(ColoringError::UnknownEdge { u: 0, v: 2 })
        );
        assert_eq!(
            EdgeColoring::parse("1\n0 1 0\n1 0 0\n", &g),
            Err(ColoringError::DuplicateAssignment)
        );
        assert!(matches!(
            EdgeColoring::parse("", &g),
            Err(ColoringError::Syntax { .. })
        ));
    }
}
