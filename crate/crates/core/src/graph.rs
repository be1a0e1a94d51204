//! Bit-packed simple undirected graphs on up to 64 vertices.
//!
//! Every vertex set is `0..n` and `adj[v]` is the neighbor bitset of `v`.
//! Graphs are immutable after construction, so they can be shared freely
//! across worker threads.

use std::fmt;

/// Largest representable order; one `u64` row per vertex.
pub const MAX_ORDER: usize = 64;

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    edge_count: usize,
}

/// Errors from graph construction and the edge-list text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Graphs must have at least one vertex.
    OrderZero,
    /// Order exceeds [`MAX_ORDER`].
    OrderTooLarge { n: usize },
    /// An edge endpoint is not in `0..n`.
    VertexOutOfRange { v: usize, n: usize },
    /// A loop `(v, v)` was supplied.
    LoopEdge { v: usize },
    /// Malformed edge-list text.
    EdgeListSyntax { line: usize, reason: &'static str },
    /// Edge-list header promised a different number of edges.
    EdgeCountMismatch { header: usize, got: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderZero => write!(f, "graph order must be at least 1"),
            GraphError::OrderTooLarge { n } => {
                write!(f, "order {n} exceeds the supported maximum of {MAX_ORDER}")
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for order {n}")
            }
            GraphError::LoopEdge { v } => write!(f, "loop edge at vertex {v} is not allowed"),
            GraphError::EdgeListSyntax { line, reason } => {
                write!(f, "edge-list parse error on line {line}: {reason}")
            }
            GraphError::EdgeCountMismatch { header, got } => {
                write!(f, "edge-list header declares {header} edges but {got} were listed")
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Creates the edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderZero);
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { n });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge { v });
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        g.edge_count = g.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(g)
    }

    /// Builds directly from adjacency rows. Caller guarantees symmetry and a
    /// zero diagonal; debug builds check.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        let n = rows.len();
        debug_assert!(n >= 1 && n <= MAX_ORDER);
        #[cfg(debug_assertions)]
        for u in 0..n {
            debug_assert_eq!(rows[u] & !low_bits(n), 0);
            debug_assert_eq!(rows[u] & bit(u), 0, "loop at {u}");
            for v in 0..n {
                debug_assert_eq!((rows[u] >> v) & 1, (rows[v] >> u) & 1);
            }
        }
        let edge_count = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, rows, edge_count }
    }

    /// Number of vertices.
    #[inline(always)]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    #[inline(always)]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u] & bit(v) != 0
    }

    /// Neighbor bitset of `v`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Edges in lexicographic `(u, v)` order with `u < v`. This order also
    /// indexes edge colorings.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            let mut higher = self.rows[u] & !low_bits(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Per-vertex degrees plus the maximum degree.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, max_degree }
    }

    /// Bitset of all vertices reachable from `start`.
    pub(crate) fn reachable_from(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0) == low_bits(self.n)
    }

    /// Maximum over vertex pairs of the shortest-path length, or `None` if
    /// the graph is disconnected. `K_1` has diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let full = low_bits(self.n);
        let mut diam = 0;
        for s in 0..self.n {
            let mut seen = bit(s);
            let mut frontier = seen;
            let mut dist = 0;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[v];
                }
                frontier = next & !seen;
                if frontier != 0 {
                    seen |= frontier;
                    dist += 1;
                }
            }
            if seen != full {
                return None;
            }
            diam = diam.max(dist);
        }
        Some(diam)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    /// A tree is connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.edge_count == self.n - 1 && self.is_connected()
    }

    /// Vertices of degree exactly 1.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Deletes every degree-1 vertex once and relabels the rest densely.
    /// Returns `None` when nothing survives (e.g. `K_2`).
    pub fn delete_leaves(&self) -> Option<Graph> {
        let mut keep = 0u64;
        for v in 0..self.n {
            if self.degree(v) != 1 {
                keep |= bit(v);
            }
        }
        if keep == 0 {
            return None;
        }
        Some(self.induced(keep))
    }

    /// Induced subgraph on the vertices of `keep_mask`, relabeled densely in
    /// ascending original-label order.
    pub fn induced(&self, keep_mask: u64) -> Graph {
        debug_assert!(keep_mask != 0 && keep_mask & !low_bits(self.n) == 0);
        let mut old_labels = Vec::new();
        let mut m = keep_mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            old_labels.push(v);
        }
        let k = old_labels.len();
        let mut rows = vec![0u64; k];
        for (i, &u) in old_labels.iter().enumerate() {
            for (j, &v) in old_labels.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    rows[perm[u]] |= bit(perm[v]);
                    rows[perm[v]] |= bit(perm[u]);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Extends the graph with one new vertex (label `n`) adjacent to the
    /// vertices in `neighborhood`.
    pub(crate) fn with_appended_vertex(&self, neighborhood: u64) -> Graph {
        debug_assert!(self.n < MAX_ORDER);
        debug_assert_eq!(neighborhood & !low_bits(self.n), 0);
        let mut rows = self.rows.clone();
        rows.push(neighborhood);
        let mut m = neighborhood;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            rows[v] |= bit(self.n);
        }
        Graph::from_rows(rows)
    }

    // ------------------------------------------------------------------
    // Named families
    // ------------------------------------------------------------------

    /// Path `P_n` along labels `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexOutOfRange { v: n, n: 3 });
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Complete bipartite `K_{s,t}` with part `X = 0..s` and part
    /// `Y = s..s+t`. The fixed label ranges keep coloring constructions
    /// deterministic.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, GraphError> {
        if s == 0 || t == 0 {
            return Err(GraphError::OrderZero);
        }
        let mut edges = Vec::with_capacity(s * t);
        for i in 0..s {
            for j in 0..t {
                edges.push((i, s + j));
            }
        }
        Graph::from_edges(s + t, &edges)
    }

    /// Star `K_{1,t}` with hub 0.
    pub fn star(t: usize) -> Result<Graph, GraphError> {
        Graph::complete_bipartite(1, t)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count, self.edges())
    }
}

/// Per-vertex degrees and the maximum degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
}

// ----------------------------------------------------------------------
// Edge-list text format: "n m" header, then one "u v" line per edge.
// ----------------------------------------------------------------------

/// Parses the `"n m"` + `"u v"` lines text format.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines.next().ok_or(GraphError::EdgeListSyntax {
        line: 1,
        reason: "missing header",
    })?;
    let mut parts = header.split_whitespace();
    let parse_int = |s: Option<&str>, line: usize| -> Result<usize, GraphError> {
        s.and_then(|x| x.parse().ok())
            .ok_or(GraphError::EdgeListSyntax { line, reason: "expected an integer" })
    };
    let n = parse_int(parts.next(), lineno + 1)?;
    let m = parse_int(parts.next(), lineno + 1)?;
    if parts.next().is_some() {
        return Err(GraphError::EdgeListSyntax {
            line: lineno + 1,
            reason: "header must be exactly \"n m\"",
        });
    }
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let u = parse_int(parts.next(), lineno + 1)?;
        let v = parse_int(parts.next(), lineno + 1)?;
        if parts.next().is_some() {
            return Err(GraphError::EdgeListSyntax {
                line: lineno + 1,
                reason: "edge lines must be exactly \"u v\"",
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch { header: m, got: edges.len() });
    }
    Graph::from_edges(n, &edges)
}

/// Emits the `"n m"` + `"u v"` lines text format.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_p3_with_two_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn k1_has_no_edges() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::LoopEdge { v: 1 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(GraphError::OrderZero));
        assert!(matches!(
            Graph::empty(65),
            Err(GraphError::OrderTooLarge { n: 65 })
        ));
    }

    #[test]
    fn diameter_values() {
        assert_eq!(Graph::complete(4).unwrap().diameter(), Some(1));
        assert_eq!(Graph::path(4).unwrap().diameter(), Some(3));
        // Two disjoint edges on 4 vertices are disconnected.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.diameter(), None);
        assert_eq!(Graph::empty(1).unwrap().diameter(), Some(0));
    }

    #[test]
    fn complete_bipartite_diameter_is_two_except_k2() {
        for s in 1..=4usize {
            for t in 1..=5usize {
                let g = Graph::complete_bipartite(s, t).unwrap();
                let expected = if s == 1 && t == 1 { 1 } else { 2 };
                assert_eq!(g.diameter(), Some(expected), "K_{{{s},{t}}}");
            }
        }
    }

    #[test]
    fn degree_profiles() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.degrees, vec![3, 3, 2, 2, 2]);
        assert_eq!(p.max_degree, 3);
        assert_eq!(g.edge_count(), 6);

        let c5 = Graph::cycle(5).unwrap();
        let p = c5.degree_profile();
        assert!(p.degrees.iter().all(|&d| d == 2));
        assert_eq!(p.max_degree, 2);

        let k1 = Graph::empty(1).unwrap();
        let p = k1.degree_profile();
        assert_eq!(p.degrees, vec![0]);
        assert_eq!(p.max_degree, 0);
    }

    #[test]
    fn bipartite_edge_counts() {
        assert_eq!(Graph::complete_bipartite(3, 5).unwrap().edge_count(), 15);
        let k2 = Graph::complete_bipartite(1, 1).unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
    }

    #[test]
    fn handshake_identity() {
        let g = Graph::complete_bipartite(3, 4).unwrap();
        let sum: usize = g.degree_profile().degrees.iter().sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn leaf_deletion_of_paths_and_stars() {
        let p5 = Graph::path(5).unwrap();
        let inner = p5.delete_leaves().unwrap();
        assert_eq!(inner.order(), 3);
        assert!(inner.is_tree());

        let star = Graph::star(4).unwrap();
        let inner = star.delete_leaves().unwrap();
        assert_eq!(inner.order(), 1);

        let k2 = Graph::path(2).unwrap();
        assert!(k2.delete_leaves().is_none());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::complete_bipartite(2, 3).unwrap();
        let text = format_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn edge_list_rejects_bad_header() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3\n0 1\n").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
    }
}
