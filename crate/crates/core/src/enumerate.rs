//! Isomorphism-free generation of connected graphs and free trees.
//!
//! Generation is by vertex augmentation with canonical dedup at every level:
//! all connected graphs of order `m + 1` arise from a connected graph of
//! order `m` by appending one vertex with a nonempty neighborhood (order the
//! vertices of any connected graph by a BFS of a spanning tree and peel the
//! last one), so carrying one canonical representative per class at each
//! level is complete and duplicate-free. Emission order is the canonical-key
//! order, hence deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::canon::{canonical_graph, CanonicalForm};
use crate::graph::Graph;

/// Connected-graph enumeration is exhaustive up to this order. Beyond it the
/// class counts (and the per-class exponential work downstream) leave desk
/// scale.
pub const CONNECTED_ENUMERATION_CAP: usize = 8;

/// Free-tree enumeration cap; tree levels grow only linearly in branching,
/// so this can sit higher.
pub const TREE_ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    OrderZero,
    AboveCap { n: usize, cap: usize },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::OrderZero => write!(f, "enumeration needs order >= 1"),
            EnumerateError::AboveCap { n, cap } => {
                write!(f, "order {n} is above the enumeration cap {cap}")
            }
        }
    }
}

impl std::error::Error for EnumerateError {}

/// Enumerates one canonical representative per connected-graph isomorphism
/// class of order `n`, optionally restricted to an exact edge count.
pub fn enumerate_connected_graphs(
    n: usize,
    edge_count: Option<usize>,
) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::OrderZero);
    }
    if n > CONNECTED_ENUMERATION_CAP {
        return Err(EnumerateError::AboveCap { n, cap: CONNECTED_ENUMERATION_CAP });
    }
    if let Some(m) = edge_count {
        let max_edges = n * (n - 1) / 2;
        if m < n - 1 || m > max_edges {
            return Ok(Vec::new());
        }
    }

    let mut level: Vec<Graph> = vec![Graph::empty(1).unwrap()];
    for order in 1..n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        let remaining_after = n - (order + 1);
        for g in &level {
            for neighborhood in 1u64..(1 << order) {
                if let Some(target) = edge_count {
                    // Every future vertex adds at least one edge, so bail out
                    // of extensions that already overshoot.
                    let new_edges = g.edge_count() + neighborhood.count_ones() as usize;
                    if new_edges + remaining_after > target {
                        continue;
                    }
                    if order + 1 == n && new_edges != target {
                        continue;
                    }
                }
                let extended = g.with_appended_vertex(neighborhood);
                let canonical = canonical_graph(&extended);
                let key = CanonicalForm::from_canonical_graph(&canonical);
                next.entry(key).or_insert(canonical);
            }
        }
        level = next.into_values().collect();
    }

    if n == 1 {
        if edge_count.is_some_and(|m| m != 0) {
            return Ok(Vec::new());
        }
        return Ok(level);
    }
    Ok(level)
}

/// Enumerates one representative per free-tree isomorphism class of order
/// `n`. Every tree of order `m + 1` is a tree of order `m` plus a pendant
/// vertex, so augmentation attaches single leaves only.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 {
        return Err(EnumerateError::OrderZero);
    }
    if n > TREE_ENUMERATION_CAP {
        return Err(EnumerateError::AboveCap { n, cap: TREE_ENUMERATION_CAP });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1).unwrap()];
    for order in 1..n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for attach in 0..order {
                let extended = g.with_appended_vertex(1u64 << attach);
                let canonical = canonical_graph(&extended);
                let key = CanonicalForm::from_canonical_graph(&canonical);
                next.entry(key).or_insert(canonical);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    // Class counts for connected graphs of order 1..=6 and free trees of
    // order 1..=9, frozen from the brute-force labeled-graph oracle in the
    // integration tests (and matching the standard counting sequences).
    const CONNECTED_COUNTS: [usize; 6] = [1, 1, 2, 6, 21, 112];
    const TREE_COUNTS: [usize; 9] = [1, 1, 1, 2, 3, 6, 11, 23, 47];

    #[test]
    fn connected_counts_small_orders() {
        for (i, &want) in CONNECTED_COUNTS.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_connected_graphs(n, None).unwrap().len();
            assert_eq!(got, want, "connected classes of order {n}");
        }
    }

    #[test]
    fn order_three_classes_are_p3_and_k3() {
        let classes = enumerate_connected_graphs(3, None).unwrap();
        let forms: Vec<_> = classes.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&Graph::path(3).unwrap())));
        assert!(forms.contains(&canonical_form(&Graph::complete(3).unwrap())));
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn emitted_graphs_are_connected_distinct_and_canonical() {
        for n in 1..=6 {
            let classes = enumerate_connected_graphs(n, None).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for g in &classes {
                assert!(g.is_connected());
                assert_eq!(g.order(), n);
                assert!(seen.insert(canonical_form(g)), "duplicate class at n={n}");
                assert_eq!(&canonical_graph(g), g, "emission must be canonical");
            }
        }
    }

    #[test]
    fn edge_count_filter_matches_post_filtering() {
        for n in 2..=6 {
            let all = enumerate_connected_graphs(n, None).unwrap();
            for m in (n - 1)..=(n * (n - 1) / 2) {
                let filtered = enumerate_connected_graphs(n, Some(m)).unwrap();
                let expected: Vec<_> =
                    all.iter().filter(|g| g.edge_count() == m).cloned().collect();
                assert_eq!(filtered.len(), expected.len(), "n={n} m={m}");
                for g in &filtered {
                    assert_eq!(g.edge_count(), m);
                }
            }
        }
    }

    #[test]
    fn tree_counts_small_orders() {
        for (i, &want) in TREE_COUNTS.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_trees(n).unwrap().len();
            assert_eq!(got, want, "free trees of order {n}");
        }
    }

    #[test]
    fn order_four_trees_are_path_and_star() {
        let trees = enumerate_trees(4).unwrap();
        let forms: Vec<_> = trees.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&Graph::path(4).unwrap())));
        assert!(forms.contains(&canonical_form(&Graph::star(3).unwrap())));
        assert_eq!(trees.len(), 2);
    }

    #[test]
    fn trees_agree_with_filtered_connected_enumeration() {
        for n in 2..=7 {
            let trees = enumerate_trees(n).unwrap();
            let via_filter = enumerate_connected_graphs(n, Some(n - 1)).unwrap();
            let a: Vec<_> = trees.iter().map(canonical_form).collect();
            let b: Vec<_> = via_filter.iter().map(canonical_form).collect();
            assert_eq!(a, b, "order {n}");
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            enumerate_connected_graphs(CONNECTED_ENUMERATION_CAP + 1, None),
            Err(EnumerateError::AboveCap { .. })
        ));
        assert!(matches!(
            enumerate_trees(TREE_ENUMERATION_CAP + 1),
            Err(EnumerateError::AboveCap { .. })
        ));
        assert!(matches!(enumerate_connected_graphs(0, None), Err(EnumerateError::OrderZero)));
    }
}
