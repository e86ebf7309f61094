//! Graphoidal covers and their intersection graphs.
//!
//! A cover is a list of paths, possibly closed, such that
//! (i) every path has at least two vertices,
//! (ii) every vertex is internal to at most one path, and
//! (iii) every edge lies on exactly one path.
//! The terminals of an open path `v0 .. vk` are `v0` and `vk`; a closed path
//! repeats `v0` at the end and `v0` is its only terminal.

pub(crate) mod construct;
mod enumerate;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, MAX_ORDER};

pub use construct::{
    construct_gap_instance, construct_spider_instance, constructive_edge_labeling,
    verify_graphoidal_bounds, GraphoidalBoundsReport,
};
pub use enumerate::{
    enumerate_covers, for_each_cover, DEFAULT_COVER_CAP, MAX_COVER_EDGES,
};

/// A walk `v0 .. vk` used as a cover element.
///
/// Open paths are stored with the smaller endpoint first. Closed paths keep
/// the given sequence, so the designated terminal and traversal direction
/// are preserved.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphoidalPath {
    vertices: Vec<usize>,
    closed: bool,
}

impl GraphoidalPath {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        let closed = vertices.len() >= 4 && vertices.first() == vertices.last();
        if !closed && vertices.len() >= 2 && vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        GraphoidalPath { vertices, closed }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The same closed path traversed the other way from the same terminal.
    /// Open paths are returned unchanged.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        if self.closed {
            vertices.reverse();
        }
        GraphoidalPath {
            vertices,
            closed: self.closed,
        }
    }

    /// The vertex sequence reversed, without restoring the canonical
    /// orientation of open paths.
    pub(crate) fn flipped(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        GraphoidalPath {
            vertices,
            closed: self.closed,
        }
    }

    pub fn internal_vertices(&self) -> &[usize] {
        match self.vertices.len() {
            0..=2 => &[],
            k => &self.vertices[1..k - 1],
        }
    }

    /// Consecutive vertex pairs, each as `(min, max)`, in traversal order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphoidalCover {
    paths: Vec<GraphoidalPath>,
}

impl GraphoidalCover {
    pub fn new(paths: Vec<GraphoidalPath>) -> Self {
        GraphoidalCover { paths }
    }

    /// Every edge as its own path.
    pub fn single_edges(g: &Graph) -> Self {
        GraphoidalCover::new(
            g.edges()
                .iter()
                .map(|&(u, v)| GraphoidalPath::new(vec![u, v]))
                .collect(),
        )
    }

    pub fn paths(&self) -> &[GraphoidalPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn has_closed_path(&self) -> bool {
        self.paths.iter().any(GraphoidalPath::is_closed)
    }

    /// Closed paths traversed in the opposite direction.
    pub fn with_closed_paths_reversed(&self) -> Self {
        GraphoidalCover::new(self.paths.iter().map(GraphoidalPath::reversed).collect())
    }
}

/// A failed cover condition, with the offending vertex or edge and the paths
/// (by index) involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum CoverViolation {
    /// Condition (i).
    TooFewVertices { path: usize },
    /// Condition (ii).
    InternalToSeveralPaths { vertex: usize, paths: Vec<usize> },
    /// Condition (iii), edge on no path.
    EdgeUncovered { edge: (usize, usize) },
    /// Condition (iii), edge on more than one path.
    EdgeCoveredTwice { edge: (usize, usize), paths: Vec<usize> },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::TooFewVertices { path } => {
                write!(f, "condition (i): path {path} has fewer than two vertices")
            }
            CoverViolation::InternalToSeveralPaths { vertex, paths } => write!(
                f,
                "condition (ii): vertex {vertex} is internal to paths {paths:?}"
            ),
            CoverViolation::EdgeUncovered { edge } => {
                write!(f, "condition (iii): edge {edge:?} lies on no path")
            }
            CoverViolation::EdgeCoveredTwice { edge, paths } => write!(
                f,
                "condition (iii): edge {edge:?} lies on paths {paths:?}"
            ),
        }
    }
}

fn check_walkable(g: &Graph, index: usize, path: &GraphoidalPath) -> Result<()> {
    let malformed = |message: String| Error::MalformedPath { index, message };
    let vs = path.vertices();
    if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
        return Err(malformed(format!("vertex {v} is not in the graph")));
    }
    for w in vs.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(malformed(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    let body = if path.is_closed() { &vs[..vs.len() - 1] } else { vs };
    let mut seen = 0u64;
    for &v in body {
        if seen >> v & 1 == 1 {
            return Err(malformed(format!("vertex {v} repeats")));
        }
        seen |= 1 << v;
    }
    Ok(())
}

/// Every violated cover condition, in a fixed order. Fails only when a path
/// cannot be walked in `g`.
pub fn cover_violations(g: &Graph, cover: &GraphoidalCover) -> Result<Vec<CoverViolation>> {
    let mut out = Vec::new();
    for (i, p) in cover.paths().iter().enumerate() {
        check_walkable(g, i, p)?;
        if p.vertices().len() < 2 {
            out.push(CoverViolation::TooFewVertices { path: i });
        }
    }
    let mut internal_to = vec![Vec::new(); g.order()];
    for (i, p) in cover.paths().iter().enumerate() {
        for &v in p.internal_vertices() {
            internal_to[v].push(i);
        }
    }
    for (vertex, paths) in internal_to.into_iter().enumerate() {
        if paths.len() > 1 {
            out.push(CoverViolation::InternalToSeveralPaths { vertex, paths });
        }
    }
    let mut on = vec![Vec::new(); g.size()];
    for (i, p) in cover.paths().iter().enumerate() {
        for (u, v) in p.edges() {
            let e = g.edge_index(u, v).expect("walkable path");
            on[e].push(i);
        }
    }
    for (e, paths) in on.into_iter().enumerate() {
        let edge = g.edges()[e];
        match paths.len() {
            0 => out.push(CoverViolation::EdgeUncovered { edge }),
            1 => {}
            _ => out.push(CoverViolation::EdgeCoveredTwice { edge, paths }),
        }
    }
    Ok(out)
}

/// `Ok` iff all three cover conditions hold; otherwise the first violation.
pub fn validate_cover(g: &Graph, cover: &GraphoidalCover) -> Result<()> {
    match cover_violations(g, cover)?.into_iter().next() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidCover(v)),
    }
}

/// Vertices internal to some path of the cover, sorted.
pub fn interior_vertices(cover: &GraphoidalCover) -> Vec<usize> {
    let mut vs: Vec<usize> = cover
        .paths()
        .iter()
        .flat_map(|p| p.internal_vertices().iter().copied())
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// The intersection graph `Ω(G, ψ)`: vertex `i` is path `i`, and two paths
/// are adjacent iff they share a vertex.
pub fn omega(g: &Graph, cover: &GraphoidalCover) -> Result<Graph> {
    validate_cover(g, cover)?;
    if cover.len() > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "cover length",
            actual: cover.len(),
            limit: MAX_ORDER,
        });
    }
    let masks: Vec<u64> = cover.paths().iter().map(GraphoidalPath::vertex_mask).collect();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] == masks[j] {
                log::warn!(
                    "paths {i} and {j} have the same vertex set {:?}; kept as separate vertices",
                    BitIter(masks[i]).collect::<Vec<_>>()
                );
            }
        }
    }
    Ok(omega_unchecked(cover.paths()))
}

pub(crate) fn omega_unchecked(paths: &[GraphoidalPath]) -> Graph {
    let masks: Vec<u64> = paths.iter().map(GraphoidalPath::vertex_mask).collect();
    let mut adj = vec![0u64; masks.len()];
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// One path per line, vertices separated by commas.
pub fn format_cover(cover: &GraphoidalCover) -> String {
    let mut out = String::new();
    for p in cover.paths() {
        let line: Vec<String> = p.vertices().iter().map(usize::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Parses the format written by [`format_cover`]. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_cover(text: &str) -> Result<GraphoidalCover> {
    let mut paths = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let vertices = line
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| Error::CoverFormat {
                    line: i + 1,
                    message: format!("`{}` is not a vertex index", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        paths.push(GraphoidalPath::new(vertices));
    }
    Ok(GraphoidalCover::new(paths))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::linegraph::line_graph;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn cover(paths: &[&[usize]]) -> GraphoidalCover {
        GraphoidalCover::new(paths.iter().map(|p| GraphoidalPath::new(p.to_vec())).collect())
    }

    fn c3() -> Graph {
        g(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn path_shapes() {
        let p = GraphoidalPath::new(vec![3, 2, 1, 0]);
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);
        assert!(!p.is_closed());
        assert_eq!(p.internal_vertices(), &[1, 2]);
        let c = GraphoidalPath::new(vec![2, 0, 1, 2]);
        assert!(c.is_closed());
        assert_eq!(c.internal_vertices(), &[0, 1]);
        assert_eq!(c.reversed().vertices(), &[2, 1, 0, 2]);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn single_edges_cover_is_valid_and_gives_line_graph() {
        let h = g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (3, 4)]);
        let psi = GraphoidalCover::single_edges(&h);
        validate_cover(&h, &psi).unwrap();
        assert!(interior_vertices(&psi).is_empty());
        assert!(are_isomorphic(&omega(&h, &psi).unwrap(), &line_graph(&h).unwrap().line));
    }

    #[test]
    fn closed_triangle() {
        let psi = cover(&[&[0, 1, 2, 0]]);
        validate_cover(&c3(), &psi).unwrap();
        assert_eq!(interior_vertices(&psi), vec![1, 2]);
        assert_eq!(omega(&c3(), &psi).unwrap().order(), 1);
    }

    #[test]
    fn violations_are_named() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let k14 = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let shared = cover(&[&[1, 0, 2], &[3, 0, 4]]);
        assert_eq!(
            cover_violations(&k14, &shared).unwrap(),
            vec![CoverViolation::InternalToSeveralPaths {
                vertex: 0,
                paths: vec![0, 1]
            }]
        );
        let overlap = cover(&[&[0, 1, 2], &[1, 2, 3]]);
        assert!(cover_violations(&p4, &overlap)
            .unwrap()
            .contains(&CoverViolation::EdgeCoveredTwice {
                edge: (1, 2),
                paths: vec![0, 1]
            }));
        let missing = cover(&[&[0, 1]]);
        assert!(matches!(
            validate_cover(&p4, &missing),
            Err(Error::InvalidCover(CoverViolation::EdgeUncovered { edge: (1, 2) }))
        ));
        let short = cover(&[&[0]]);
        assert!(cover_violations(&p4, &short)
            .unwrap()
            .contains(&CoverViolation::TooFewVertices { path: 0 }));
        assert!(matches!(
            validate_cover(&p4, &cover(&[&[0, 2]])),
            Err(Error::MalformedPath { index: 0, .. })
        ));
        assert!(matches!(
            validate_cover(&c3(), &cover(&[&[0, 1, 0]])),
            Err(Error::MalformedPath { .. })
        ));
    }

    #[test]
    fn omega_examples() {
        assert!(are_isomorphic(
            &omega(&c3(), &GraphoidalCover::single_edges(&c3())).unwrap(),
            &c3()
        ));
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        assert_eq!(omega(&c5, &cover(&[&[0, 1, 2, 3, 4, 0]])).unwrap().order(), 1);
        assert!(omega(&c3(), &cover(&[&[0, 1]])).is_err());
    }

    #[test]
    fn text_format_round_trip() {
        let psi = cover(&[&[0, 1, 2, 0], &[2, 3]]);
        let text = format_cover(&psi);
        assert_eq!(text, "0,1,2,0\n2,3\n");
        assert_eq!(parse_cover(&text).unwrap(), psi);
        assert_eq!(parse_cover("# c\n\n 1 , 0 \n").unwrap(), cover(&[&[0, 1]]));
        assert!(matches!(
            parse_cover("0,1\n0,x\n"),
            Err(Error::CoverFormat { line: 2, .. })
        ));
    }
}
