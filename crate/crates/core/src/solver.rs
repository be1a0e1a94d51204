//! Exact rainbow-connection solvers and certificate verifiers.
//!
//! The verifiers decide rainbow connectivity of a *given* coloring by
//! breadth-first search over `(vertex, used-color-set)` states. A walk whose
//! colored items are pairwise distinct can always be shortened to a simple
//! path with the same property, so subset-state reachability is exact even
//! for colorings where greedy path search fails. Cost grows with `2^k`;
//! [`PALETTE_CAP`] bounds the palette.
//!
//! The searches (`rc_leq`, `rvc_leq` and the ascending `*_exact` wrappers)
//! backtrack over assignments in a fixed order with an optimistic
//! reachability prune: uncolored items are treated as wildcards, and a
//! partial assignment dies as soon as some vertex pair cannot be rainbow
//! connected under any completion. Deciding `rc(G) = 2` is NP-complete, so
//! exponential worst cases are inherent; the prunes keep desk-scale inputs
//! fast. All iteration is in label order, so identical inputs produce
//! identical witnesses.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use crate::coloring::{ColoringError, EdgeColoring, VertexColoring};
use crate::graph::Graph;

/// Hard palette bound for verification and search; subset-state tables grow
/// as `2^k`.
pub const PALETTE_CAP: usize = 20;

/// Above this palette size the optimistic prune switches from a dense state
/// table to a hash map.
const DENSE_PRUNE_CAP: usize = 12;

const UNCOLORED: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    /// Rainbow connection is defined on connected graphs only.
    Disconnected,
    /// `rc` is undefined on a single vertex (no vertex pair exists).
    SingleVertex,
    /// Requested palette exceeds [`PALETTE_CAP`].
    PaletteCap { requested: usize, cap: usize },
    /// Coloring does not fit the host graph.
    ColoringMismatch(ColoringError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::Disconnected => write!(f, "input graph must be connected"),
            SolverError::SingleVertex => {
                write!(f, "rainbow connection is undefined on a single vertex")
            }
            SolverError::PaletteCap { requested, cap } => {
                write!(f, "palette {requested} exceeds the solver cap {cap}")
            }
            SolverError::ColoringMismatch(e) => write!(f, "coloring does not fit host: {e}"),
        }
    }
}

impl std::error::Error for SolverError {}

impl From<ColoringError> for SolverError {
    fn from(e: ColoringError) -> Self {
        SolverError::ColoringMismatch(e)
    }
}

/// A computed `rc` value together with its certifying coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcWitness {
    pub value: usize,
    pub coloring: EdgeColoring,
}

/// A computed `rvc` value together with its certifying coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RvcWitness {
    pub value: usize,
    pub coloring: VertexColoring,
}

fn require_connected(g: &Graph) -> Result<(), SolverError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(SolverError::Disconnected)
    }
}

fn require_palette(k: usize) -> Result<(), SolverError> {
    if k > PALETTE_CAP {
        Err(SolverError::PaletteCap { requested: k, cap: PALETTE_CAP })
    } else {
        Ok(())
    }
}

/// Flattened `n x n` color matrix of an edge coloring, `UNCOLORED` off-edges.
fn edge_color_matrix(g: &Graph, c: &EdgeColoring) -> Vec<u8> {
    let n = g.order();
    let mut col = vec![UNCOLORED; n * n];
    for ((u, v), &cc) in g.edges().into_iter().zip(c.colors()) {
        col[u * n + v] = cc as u8;
        col[v * n + u] = cc as u8;
    }
    col
}

// ----------------------------------------------------------------------
// Verifiers
// ----------------------------------------------------------------------

/// True iff under `c` every vertex pair of `g` is joined by a path whose
/// edges have pairwise-distinct colors.
pub fn verify_rc_coloring(g: &Graph, c: &EdgeColoring) -> Result<bool, SolverError> {
    require_connected(g)?;
    require_palette(c.palette())?;
    if c.colors().len() != g.edge_count() {
        return Err(SolverError::ColoringMismatch(ColoringError::NotTotal {
            expected: g.edge_count(),
            got: c.colors().len(),
        }));
    }
    let n = g.order();
    let k = c.palette();
    let col = edge_color_matrix(g, c);
    let full = crate::graph::low_bits(n);

    let mut visited = vec![0u64; (n << k).div_ceil(64)];
    let mut queue: VecDeque<(usize, u32)> = VecDeque::new();
    for s in 0..n {
        for w in visited.iter_mut() {
            *w = 0;
        }
        queue.clear();
        let mut reached = 1u64 << s;
        mark(&mut visited, (s << k) as usize);
        queue.push_back((s, 0));
        while let Some((v, mask)) = queue.pop_front() {
            let mut nb = g.neighbors(v);
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                let color = col[v * n + u] as u32;
                if mask & (1 << color) != 0 {
                    continue;
                }
                reached |= 1u64 << u;
                let next = mask | (1 << color);
                let state = (u << k) | next as usize;
                if !test(&visited, state) {
                    mark(&mut visited, state);
                    queue.push_back((u, next));
                }
            }
            if reached == full {
                break;
            }
        }
        if reached != full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff under `c` every vertex pair of `g` is joined by a path whose
/// internal vertices have pairwise-distinct colors. An empty palette is the
/// complete-graph certificate: adjacent pairs need no internal vertices.
pub fn verify_rvc_coloring(g: &Graph, c: &VertexColoring) -> Result<bool, SolverError> {
    require_connected(g)?;
    require_palette(c.palette())?;
    if c.palette() == 0 {
        return Ok(g.is_complete());
    }
    if c.colors().len() != g.order() {
        return Err(SolverError::ColoringMismatch(ColoringError::NotTotal {
            expected: g.order(),
            got: c.colors().len(),
        }));
    }
    let n = g.order();
    let k = c.palette();
    let full = crate::graph::low_bits(n);

    let mut visited = vec![0u64; (n << k).div_ceil(64)];
    let mut queue: VecDeque<(usize, u32)> = VecDeque::new();
    for s in 0..n {
        for w in visited.iter_mut() {
            *w = 0;
        }
        queue.clear();
        let mut reached = 1u64 << s;
        mark(&mut visited, (s << k) as usize);
        queue.push_back((s, 0));
        while let Some((v, mask)) = queue.pop_front() {
            // Leaving v makes it internal (unless v is the source), so its
            // color joins the used set on departure.
            let next_mask = if v == s {
                Some(0u32)
            } else {
                let cv = c.color(v) as u32;
                if mask & (1 << cv) != 0 {
                    None
                } else {
                    Some(mask | (1 << cv))
                }
            };
            let Some(next_mask) = next_mask else { continue };
            let mut nb = g.neighbors(v);
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                reached |= 1u64 << u;
                let state = (u << k) | next_mask as usize;
                if !test(&visited, state) {
                    mark(&mut visited, state);
                    queue.push_back((u, next_mask));
                }
            }
            if reached == full {
                break;
            }
        }
        if reached != full {
            return Ok(false);
        }
    }
    Ok(true)
}

#[inline(always)]
fn mark(bits: &mut [u64], i: usize) {
    bits[i >> 6] |= 1 << (i & 63);
}

#[inline(always)]
fn test(bits: &[u64], i: usize) -> bool {
    bits[i >> 6] & (1 << (i & 63)) != 0
}

// ----------------------------------------------------------------------
// rc search
// ----------------------------------------------------------------------

/// Searches for an edge coloring with at most `k` colors under which `g` is
/// rainbow connected. Returns `None` after a complete (pruned) search.
pub fn rc_leq(g: &Graph, k: usize) -> Result<Option<RcWitness>, SolverError> {
    require_connected(g)?;
    assert!(k >= 1, "palette must be positive");
    require_palette(k)?;

    let mut search = RcSearch::new(g, k);
    let found = search.run();
    Ok(found.map(|colors| {
        let coloring = EdgeColoring::new(g, k, colors).expect("search yields a total coloring");
        debug_assert_eq!(verify_rc_coloring(g, &coloring), Ok(true));
        RcWitness { value: k, coloring }
    }))
}

/// Computes `rc(g)` exactly by ascending the palette from `diam(g)`.
pub fn rc_exact(g: &Graph) -> Result<RcWitness, SolverError> {
    if g.order() == 1 {
        return Err(SolverError::SingleVertex);
    }
    require_connected(g)?;
    let diam = g.diameter().expect("connected graph has a diameter");
    // rc(G) <= e(G): with all edges distinct every path is rainbow.
    let upper = g.edge_count();
    for k in diam.max(1)..=upper {
        require_palette(k)?;
        if let Some(w) = rc_leq(g, k)? {
            return Ok(w);
        }
    }
    unreachable!("the all-distinct coloring always verifies at k = e(G)")
}

struct RcSearch<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    /// Lexicographic edge list; assignment vector is indexed the same way.
    edges: Vec<(usize, usize)>,
    /// DFS order: descending min endpoint degree, then edge label. Hub-heavy
    /// graphs fail early this way.
    order: Vec<usize>,
    assigned: Vec<u8>,
    /// Per-color neighbor masks, used by the 2-color prune.
    color_masks: Vec<Vec<u64>>,
    col: Vec<u8>,
    prune: PruneTable,
}

impl<'a> RcSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        let edges = g.edges();
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by_key(|&i| {
            let (u, v) = edges[i];
            (std::cmp::Reverse(g.degree(u).min(g.degree(v))), edges[i])
        });
        let color_masks = if k == 2 { vec![vec![0u64; n]; 2] } else { Vec::new() };
        RcSearch {
            g,
            n,
            k,
            edges,
            order,
            assigned: vec![UNCOLORED; g.edge_count()],
            color_masks,
            col: vec![UNCOLORED; n * n],
            prune: PruneTable::new(n, k),
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        if !self.alive() {
            return None;
        }
        if self.dfs(0, 0) {
            Some(self.assigned.iter().map(|&c| c as usize).collect())
        } else {
            None
        }
    }

    fn dfs(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.edges.len() {
            return true;
        }
        let edge = self.order[pos];
        let (u, v) = self.edges[edge];
        // Colors are interchangeable: introduce them in increasing order.
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            self.set(edge, u, v, c as u8);
            if self.alive() && self.dfs(pos + 1, used.max(c + 1)) {
                return true;
            }
            self.unset(edge, u, v, c as u8);
        }
        false
    }

    fn set(&mut self, edge: usize, u: usize, v: usize, c: u8) {
        self.assigned[edge] = c;
        self.col[u * self.n + v] = c;
        self.col[v * self.n + u] = c;
        if self.k == 2 {
            self.color_masks[c as usize][u] |= 1 << v;
            self.color_masks[c as usize][v] |= 1 << u;
        }
    }

    fn unset(&mut self, edge: usize, u: usize, v: usize, c: u8) {
        self.assigned[edge] = UNCOLORED;
        self.col[u * self.n + v] = UNCOLORED;
        self.col[v * self.n + u] = UNCOLORED;
        if self.k == 2 {
            self.color_masks[c as usize][u] &= !(1 << v);
            self.color_masks[c as usize][v] &= !(1 << u);
        }
    }

    /// Optimistic feasibility: every pair must still admit a potentially
    /// rainbow path when uncolored edges may take any color. Exact once the
    /// assignment is total.
    fn alive(&mut self) -> bool {
        if self.k == 2 {
            return self.alive_two_colors();
        }
        for s in 0..self.n {
            let reached = wildcard_rc_reach(
                self.g,
                &self.col,
                self.k,
                s,
                &mut self.prune,
            );
            if reached != crate::graph::low_bits(self.n) {
                return false;
            }
        }
        true
    }

    /// With two colors a rainbow path has at most two edges, so a
    /// non-adjacent pair lives iff some common neighbor's two edges are not
    /// yet both colored with equal colors.
    fn alive_two_colors(&self) -> bool {
        let (c0, c1) = (&self.color_masks[0], &self.color_masks[1]);
        for u in 0..self.n {
            let mut others = crate::graph::low_bits(self.n) & !crate::graph::low_bits(u + 1);
            others &= !self.g.neighbors(u);
            while others != 0 {
                let v = others.trailing_zeros() as usize;
                others &= others - 1;
                let dead_witnesses = (c0[u] & c0[v]) | (c1[u] & c1[v]);
                if self.g.neighbors(u) & self.g.neighbors(v) & !dead_witnesses == 0 {
                    return false;
                }
            }
        }
        true
    }
}

// ----------------------------------------------------------------------
// Optimistic reachability (shared by rc and rvc searches)
// ----------------------------------------------------------------------

/// Visited table for `(vertex, color-set)` states storing the minimal number
/// of wildcard steps; dense for small palettes, hashed above
/// [`DENSE_PRUNE_CAP`].
enum PruneTable {
    Dense { wilds: Vec<u8>, stamp: Vec<u32>, generation: u32, k: usize },
    Sparse(HashMap<(usize, u32), u8>),
}

impl PruneTable {
    fn new(n: usize, k: usize) -> Self {
        if k <= DENSE_PRUNE_CAP {
            PruneTable::Dense {
                wilds: vec![0; n << k],
                stamp: vec![0; n << k],
                generation: 0,
                k,
            }
        } else {
            PruneTable::Sparse(HashMap::new())
        }
    }

    fn begin(&mut self) {
        match self {
            PruneTable::Dense { generation, .. } => *generation += 1,
            PruneTable::Sparse(map) => map.clear(),
        }
    }

    /// Records `w` for the state if it improves the stored value.
    fn improves(&mut self, v: usize, mask: u32, w: u8) -> bool {
        match self {
            PruneTable::Dense { wilds, stamp, generation, k } => {
                let idx = (v << *k) | mask as usize;
                if stamp[idx] == *generation && wilds[idx] <= w {
                    return false;
                }
                stamp[idx] = *generation;
                wilds[idx] = w;
                true
            }
            PruneTable::Sparse(map) => match map.get_mut(&(v, mask)) {
                Some(old) if *old <= w => false,
                Some(old) => {
                    *old = w;
                    true
                }
                None => {
                    map.insert((v, mask), w);
                    true
                }
            },
        }
    }
}

/// 0-1 BFS from `s` over `(vertex, used-color-set)` with wildcard edges;
/// returns the set of vertices reachable by a potentially rainbow walk of at
/// most `k` total colors.
fn wildcard_rc_reach(g: &Graph, col: &[u8], k: usize, s: usize, table: &mut PruneTable) -> u64 {
    let n = g.order();
    table.begin();
    let mut deque: VecDeque<(usize, u32, u8)> = VecDeque::new();
    table.improves(s, 0, 0);
    deque.push_back((s, 0, 0));
    let mut reached = 1u64 << s;
    while let Some((v, mask, w)) = deque.pop_front() {
        let mut nb = g.neighbors(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let color = col[v * n + u];
            if color == UNCOLORED {
                let nw = w + 1;
                if mask.count_ones() as usize + nw as usize <= k && table.improves(u, mask, nw) {
                    reached |= 1u64 << u;
                    deque.push_back((u, mask, nw));
                }
            } else {
                let cm = 1u32 << color;
                if mask & cm == 0 {
                    let next = mask | cm;
                    if next.count_ones() as usize + w as usize <= k && table.improves(u, next, w) {
                        reached |= 1u64 << u;
                        deque.push_front((u, next, w));
                    }
                }
            }
        }
    }
    reached
}

// ----------------------------------------------------------------------
// rc(G) = 2 decision procedure
// ----------------------------------------------------------------------

/// Decides whether `g` admits a 2-coloring under which every non-adjacent
/// pair has a common neighbor with differently colored connecting edges
/// (exactly `rc(g) <= 2`). Unit propagation fires on pairs whose only
/// remaining connector has one edge colored. Returns the coloring or `None`
/// after exhaustive search.
pub fn rc2_decide(g: &Graph) -> Result<Option<EdgeColoring>, SolverError> {
    require_connected(g)?;
    let n = g.order();
    let edges = g.edges();
    let m = edges.len();

    // Edge index lookup.
    let mut index = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        index[u * n + v] = i;
        index[v * n + u] = i;
    }

    // One constraint per non-adjacent pair; a pair without common neighbors
    // means diameter > 2, hence rc > 2.
    let mut constraints: Vec<(usize, usize, u64)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if g.has_edge(u, v) {
                continue;
            }
            let common = g.neighbors(u) & g.neighbors(v);
            if common == 0 {
                return Ok(None);
            }
            constraints.push((u, v, common));
        }
    }

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| {
        let (u, v) = edges[i];
        (std::cmp::Reverse(g.degree(u).min(g.degree(v))), edges[i])
    });

    let mut solver = Rc2Solver { n, index, constraints, order };
    let mut colors = vec![UNCOLORED; m];
    if !solver.propagate(&mut colors) {
        return Ok(None);
    }
    let found = solver.dfs(&mut colors, true);
    if !found {
        return Ok(None);
    }
    let coloring = EdgeColoring::new(g, 2, colors.iter().map(|&c| c as usize).collect())
        .expect("solver yields a total 2-coloring");
    debug_assert_eq!(verify_rc_coloring(g, &coloring), Ok(true));
    Ok(Some(coloring))
}

struct Rc2Solver {
    n: usize,
    index: Vec<usize>,
    constraints: Vec<(usize, usize, u64)>,
    order: Vec<usize>,
}

impl Rc2Solver {
    /// Runs unit propagation to fixpoint. False on conflict.
    fn propagate(&self, colors: &mut [u8]) -> bool {
        loop {
            let mut forced_any = false;
            for &(u, v, common) in &self.constraints {
                let mut alive = 0u64;
                let mut satisfied = false;
                let mut rest = common;
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let a = colors[self.index[u * self.n + w]];
                    let b = colors[self.index[w * self.n + v]];
                    if a != UNCOLORED && b != UNCOLORED {
                        if a != b {
                            satisfied = true;
                            break;
                        }
                    } else {
                        alive |= 1u64 << w;
                    }
                }
                if satisfied {
                    continue;
                }
                match alive.count_ones() {
                    0 => return false,
                    1 => {
                        let w = alive.trailing_zeros() as usize;
                        let e1 = self.index[u * self.n + w];
                        let e2 = self.index[w * self.n + v];
                        let (a, b) = (colors[e1], colors[e2]);
                        if a != UNCOLORED && b == UNCOLORED {
                            colors[e2] = 1 - a;
                            forced_any = true;
                        } else if b != UNCOLORED && a == UNCOLORED {
                            colors[e1] = 1 - b;
                            forced_any = true;
                        }
                    }
                    _ => {}
                }
            }
            if !forced_any {
                return true;
            }
        }
    }

    fn dfs(&mut self, colors: &mut Vec<u8>, root: bool) -> bool {
        let Some(&edge) = self.order.iter().find(|&&e| colors[e] == UNCOLORED) else {
            return true;
        };
        // Swapping the two colors globally preserves solutions, so the first
        // branching edge only tries color 0.
        let choices: &[u8] = if root { &[0] } else { &[0, 1] };
        for &c in choices {
            let mut trail = colors.clone();
            trail[edge] = c;
            if self.propagate(&mut trail) && self.dfs(&mut trail, false) {
                *colors = trail;
                return true;
            }
        }
        false
    }
}

// ----------------------------------------------------------------------
// rvc search
// ----------------------------------------------------------------------

/// Searches for a vertex coloring with at most `k` colors under which `g` is
/// rainbow vertex connected.
pub fn rvc_leq(g: &Graph, k: usize) -> Result<Option<RvcWitness>, SolverError> {
    require_connected(g)?;
    require_palette(k)?;
    if k == 0 {
        return Ok(if g.is_complete() {
            let coloring = VertexColoring::empty_for_complete(g).expect("host is complete");
            Some(RvcWitness { value: 0, coloring })
        } else {
            None
        });
    }

    let mut search = RvcSearch::new(g, k);
    let found = search.run();
    Ok(found.map(|colors| {
        let coloring = VertexColoring::new(g, k, colors).expect("search yields a total coloring");
        debug_assert_eq!(verify_rvc_coloring(g, &coloring), Ok(true));
        RvcWitness { value: k, coloring }
    }))
}

/// Computes `rvc(g)` exactly, ascending from `diam(g) - 1`.
///
/// Complete graphs (including the degenerate one- and two-vertex graphs,
/// where no path ever has internal vertices) get the empty palette.
pub fn rvc_exact(g: &Graph) -> Result<RvcWitness, SolverError> {
    require_connected(g)?;
    if g.is_complete() {
        let coloring = VertexColoring::empty_for_complete(g).expect("host is complete");
        return Ok(RvcWitness { value: 0, coloring });
    }
    let diam = g.diameter().expect("connected graph has a diameter");
    for k in (diam - 1).max(1)..=g.order() {
        require_palette(k)?;
        if let Some(w) = rvc_leq(g, k)? {
            return Ok(w);
        }
    }
    unreachable!("distinct colors on all vertices always verify")
}

struct RvcSearch<'a> {
    g: &'a Graph,
    n: usize,
    k: usize,
    /// Vertices in descending degree order; leaf colors never matter, so
    /// they come last and the prune settles everything before them.
    order: Vec<usize>,
    colors: Vec<u8>,
    prune: PruneTable,
}

impl<'a> RvcSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        RvcSearch { g, n, k, order, colors: vec![UNCOLORED; n], prune: PruneTable::new(n, k) }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        if !self.alive() {
            return None;
        }
        if self.dfs(0, 0) {
            Some(self.colors.iter().map(|&c| c as usize).collect())
        } else {
            None
        }
    }

    fn dfs(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.n {
            return true;
        }
        let v = self.order[pos];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            self.colors[v] = c as u8;
            if self.alive() && self.dfs(pos + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[v] = UNCOLORED;
        false
    }

    fn alive(&mut self) -> bool {
        for s in 0..self.n {
            if wildcard_rvc_reach(self.g, &self.colors, self.k, s, &mut self.prune)
                != crate::graph::low_bits(self.n)
            {
                return false;
            }
        }
        true
    }
}

/// Analogue of [`wildcard_rc_reach`] for vertex colorings: a vertex's color
/// joins the used set when the walk departs it (making it internal).
fn wildcard_rvc_reach(g: &Graph, colors: &[u8], k: usize, s: usize, table: &mut PruneTable) -> u64 {
    table.begin();
    let mut deque: VecDeque<(usize, u32, u8)> = VecDeque::new();
    table.improves(s, 0, 0);
    deque.push_back((s, 0, 0));
    let mut reached = 1u64 << s;
    while let Some((v, mask, w)) = deque.pop_front() {
        let (next_mask, next_w, front) = if v == s {
            (mask, w, true)
        } else {
            let cv = colors[v];
            if cv == UNCOLORED {
                if mask.count_ones() as usize + w as usize + 1 > k {
                    continue;
                }
                (mask, w + 1, false)
            } else {
                let cm = 1u32 << cv;
                if mask & cm != 0 {
                    continue;
                }
                let next = mask | cm;
                if next.count_ones() as usize + w as usize > k {
                    continue;
                }
                (next, w, true)
            }
        };
        let mut nb = g.neighbors(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            reached |= 1u64 << u;
            if table.improves(u, next_mask, next_w) {
                if front {
                    deque.push_front((u, next_mask, next_w));
                } else {
                    deque.push_back((u, next_mask, next_w));
                }
            }
        }
    }
    reached
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_coloring(g: &Graph, k: usize, colors: &[usize]) -> EdgeColoring {
        EdgeColoring::new(g, k, colors.to_vec()).unwrap()
    }

    #[test]
    fn verify_accepts_alternating_c4() {
        // C4 edges in lex order: (0,1), (0,3), (1,2), (2,3); opposite edges
        // share a color.
        let c4 = Graph::cycle(4).unwrap();
        let c = edge_coloring(&c4, 2, &[0, 1, 1, 0]);
        assert_eq!(verify_rc_coloring(&c4, &c), Ok(true));
    }

    #[test]
    fn verify_rejects_monochromatic_p3() {
        let p3 = Graph::path(3).unwrap();
        let c = edge_coloring(&p3, 1, &[0, 0]);
        assert_eq!(verify_rc_coloring(&p3, &c), Ok(false));
    }

    #[test]
    fn verify_accepts_monochromatic_k5() {
        let k5 = Graph::complete(5).unwrap();
        let c = edge_coloring(&k5, 1, &vec![0; 10]);
        assert_eq!(verify_rc_coloring(&k5, &c), Ok(true));
    }

    #[test]
    fn verify_rejects_disconnected_input() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let c = edge_coloring(&g, 1, &[0, 0]);
        assert_eq!(verify_rc_coloring(&g, &c), Err(SolverError::Disconnected));
    }

    #[test]
    fn rvc_verify_examples() {
        let k4 = Graph::complete(4).unwrap();
        let empty = VertexColoring::empty_for_complete(&k4).unwrap();
        assert_eq!(verify_rvc_coloring(&k4, &empty), Ok(true));

        let p4 = Graph::path(4).unwrap();
        let bad = VertexColoring::new(&p4, 2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(verify_rvc_coloring(&p4, &bad), Ok(false));

        // Distinct internal colors, leaves reuse a used color.
        let good = VertexColoring::new(&p4, 2, vec![0, 0, 1, 0]).unwrap();
        assert_eq!(verify_rvc_coloring(&p4, &good), Ok(true));
    }

    #[test]
    fn rc_leq_examples() {
        let k4 = Graph::complete(4).unwrap();
        let w = rc_leq(&k4, 1).unwrap().expect("complete graphs are 1-rainbow");
        assert_eq!(w.value, 1);

        let p4 = Graph::path(4).unwrap();
        assert!(rc_leq(&p4, 2).unwrap().is_none(), "rc(P4) = 3 > 2");

        let c4 = Graph::cycle(4).unwrap();
        assert!(rc_leq(&c4, 2).unwrap().is_some());
    }

    #[test]
    fn rc_exact_small_cases() {
        assert_eq!(rc_exact(&Graph::complete_bipartite(2, 3).unwrap()).unwrap().value, 2);
        assert_eq!(rc_exact(&Graph::complete_bipartite(2, 7).unwrap()).unwrap().value, 3);
        assert_eq!(rc_exact(&Graph::path(3).unwrap()).unwrap().value, 2);
        assert_eq!(rc_exact(&Graph::path(4).unwrap()).unwrap().value, 3);
        assert_eq!(rc_exact(&Graph::cycle(5).unwrap()).unwrap().value, 3);
    }

    #[test]
    fn rc_exact_rejects_single_vertex() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(rc_exact(&k1), Err(SolverError::SingleVertex));
    }

    #[test]
    fn rc2_decide_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let c = rc2_decide(&c4).unwrap().expect("rc(C4) = 2");
        assert_eq!(verify_rc_coloring(&c4, &c), Ok(true));

        // K4 plus a pendant vertex still admits rc = 2.
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)],
        )
        .unwrap();
        let c = rc2_decide(&g).unwrap().expect("K4 + pendant has rc 2");
        assert_eq!(verify_rc_coloring(&g, &c), Ok(true));

        // Star: three leaf pairs force three distinct colors through the hub.
        let star = Graph::star(3).unwrap();
        assert!(rc2_decide(&star).unwrap().is_none());
    }

    #[test]
    fn rvc_small_cases() {
        assert_eq!(rvc_exact(&Graph::complete(6).unwrap()).unwrap().value, 0);
        assert_eq!(rvc_exact(&Graph::star(4).unwrap()).unwrap().value, 1);
        assert_eq!(rvc_exact(&Graph::path(5).unwrap()).unwrap().value, 3);
        // Degenerate orders resolve to the empty palette.
        assert_eq!(rvc_exact(&Graph::empty(1).unwrap()).unwrap().value, 0);
        assert_eq!(rvc_exact(&Graph::path(2).unwrap()).unwrap().value, 0);
    }

    #[test]
    fn palette_cap_is_enforced() {
        let p3 = Graph::path(3).unwrap();
        assert!(matches!(
            rc_leq(&p3, PALETTE_CAP + 1),
            Err(SolverError::PaletteCap { .. })
        ));
    }

    #[test]
    fn witness_colorings_verify() {
        for g in [
            Graph::cycle(5).unwrap(),
            Graph::complete_bipartite(2, 4).unwrap(),
            Graph::path(6).unwrap(),
        ] {
            let w = rc_exact(&g).unwrap();
            assert_eq!(w.coloring.palette(), w.value);
            assert_eq!(verify_rc_coloring(&g, &w.coloring), Ok(true));

            let w = rvc_exact(&g).unwrap();
            assert_eq!(w.coloring.palette(), w.value);
            assert_eq!(verify_rvc_coloring(&g, &w.coloring), Ok(true));
        }
    }
}
