//! Simple undirected graphs on dense vertex sets `0..n`.
//!
//! [`Graph`] stores adjacency as one `u64` bitmask per vertex, so the order is
//! limited to [`MAX_ORDER`]. Everything in this crate works at desk scale
//! (a few dozen vertices at most), which keeps the representation flat and
//! cheap to clone.

pub(crate) mod canon;
pub(crate) mod enumerate;
mod graph6;
mod induced;
mod tree;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{are_isomorphic, canonical_form, canonical_form_capped, canonical_labeling,
    equitable_refinement, CANON_MAX_ORDER};
pub use enumerate::{enumerate_connected_graphs, enumerate_trees, CONNECTED_MAX_ORDER,
    TREE_MAX_ORDER};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines, GRAPH6_MAX_ORDER};
pub use induced::contains_induced;
pub use tree::{
    is_bisymmetric_tree, is_symmetric_tree, is_tree, rooted_tree_code, tree_center,
    tree_canonical_code,
};

/// Largest order representable by [`Graph`].
pub const MAX_ORDER: usize = 64;

/// A simple, loopless, undirected graph on vertices `0..order`.
///
/// Edges are kept as a sorted list of pairs `(u, v)` with `u < v`; this is
/// the edge numbering used by every edge labeling in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::UnsupportedSize {
                what: "graph order",
                actual: order,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![0; order],
            edges: Vec::new(),
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse to one edge;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = Graph::empty(order)?.adj;
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::arg(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(Error::arg(format!("self-loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Builds a graph from symmetric, loop-free adjacency masks.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & (1 << u), 0);
            let mut higher = row & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                debug_assert_ne!(adj[v] & (1 << u), 0);
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph { adj, edges }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list; index `i` of this slice is edge number `i`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// True iff every pair of vertices is joined by a path. K0 and K1 are connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        self.component_mask(0) == low_mask(n)
    }

    /// Vertices reachable from `start`, as a bitmask.
    pub fn component_mask(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in increasing vertex order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&bad) = vs.iter().find(|&&v| v >= self.order()) {
            return Err(Error::arg(format!(
                "vertex {bad} outside 0..{}",
                self.order()
            )));
        }
        Ok(self.induced_by_sorted(&vs))
    }

    fn induced_by_sorted(&self, vs: &[usize]) -> Graph {
        let adj = vs
            .iter()
            .map(|&u| {
                vs.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.adj[u] & (1 << v) != 0)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::arg(format!(
                "permutation has length {}, graph has order {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen & (1 << p) != 0 {
                return Err(Error::arg("not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &self.edges {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Graphviz rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.order() {
            out.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges)
    }
}

/// Iterator over set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Mask with the lowest `k` bits set.
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// A vertex labeling with labels in `1..=label_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    labels: Vec<usize>,
    label_count: usize,
}

/// An edge labeling over a graph's sorted edge list, labels in `1..=label_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<usize>,
    label_count: usize,
}

macro_rules! labeling_impl {
    ($ty:ident, $what:literal) => {
        impl $ty {
            /// Checks that every label lies in `1..=label_count`.
            pub fn new(labels: Vec<usize>, label_count: usize) -> Result<Self> {
                if let Some(bad) = labels.iter().find(|&&l| l == 0 || l > label_count) {
                    return Err(Error::arg(format!(
                        concat!($what, " label {} outside 1..={}"),
                        bad, label_count
                    )));
                }
                Ok($ty {
                    labels,
                    label_count,
                })
            }

            /// Uses the largest label as the label count.
            pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
                let r = labels.iter().copied().max().unwrap_or(1);
                $ty::new(labels, r)
            }

            pub fn labels(&self) -> &[usize] {
                &self.labels
            }

            pub fn label_count(&self) -> usize {
                self.label_count
            }

            /// Number of distinct labels actually used.
            pub fn distinct_labels(&self) -> usize {
                let mut ls = self.labels.clone();
                ls.sort_unstable();
                ls.dedup();
                ls.len()
            }

            pub fn len(&self) -> usize {
                self.labels.len()
            }

            pub fn is_empty(&self) -> bool {
                self.labels.is_empty()
            }
        }
    };
}

labeling_impl!(VertexLabeling, "vertex");
labeling_impl!(EdgeLabeling, "edge");
