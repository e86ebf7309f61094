//! Exhaustive cover enumeration.
//!
//! The path through the lowest uncovered edge is chosen first, so each edge
//! partition is generated once. Closed paths are generated once per
//! admissible terminal.

use super::{GraphoidalCover, GraphoidalPath};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_COVER_EDGES: usize = 10;
pub const DEFAULT_COVER_CAP: usize = 1_000_000;

struct Candidate {
    path: GraphoidalPath,
    edges: u64,
    internal: u64,
}

struct CoverSearch<'a> {
    edges: &'a [(usize, usize)],
    /// `(neighbor, edge index)` per vertex.
    incident: Vec<Vec<(usize, usize)>>,
    all: u64,
    cap: usize,
    count: usize,
}

fn interior_mask(vs: &[usize]) -> u64 {
    match vs.len() {
        0..=2 => 0,
        k => vs[1..k - 1].iter().fold(0, |m, &v| m | 1 << v),
    }
}

impl CoverSearch<'_> {
    /// Simple paths leaving `from` over free edges and avoiding `blocked`
    /// vertices, including the empty extension.
    fn extensions(&self, from: usize, blocked: u64, free: u64) -> Vec<(Vec<usize>, u64, u64)> {
        let mut out = Vec::new();
        let mut tail = Vec::new();
        self.extend(from, blocked, free, 0, &mut tail, &mut out);
        out
    }

    fn extend(
        &self,
        at: usize,
        blocked: u64,
        free: u64,
        used: u64,
        tail: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, u64, u64)>,
    ) {
        let vertex_mask = tail.iter().fold(0, |m, &v| m | 1u64 << v);
        out.push((tail.clone(), used, vertex_mask));
        for &(y, e) in &self.incident[at] {
            if free >> e & 1 == 1 && blocked >> y & 1 == 0 {
                tail.push(y);
                self.extend(y, blocked | 1 << y, free & !(1 << e), used | 1 << e, tail, out);
                tail.pop();
            }
        }
    }

    fn candidates(&self, e: usize, free: u64, internal: u64) -> Vec<Candidate> {
        let (u, v) = self.edges[e];
        let free = free & !(1u64 << e);
        let mut out = Vec::new();

        for (right, right_edges, right_vs) in self.extensions(v, 1 << u | 1 << v, free) {
            let blocked = 1 << u | 1 << v | right_vs;
            for (left, left_edges, _) in self.extensions(u, blocked, free & !right_edges) {
                let mut vertices: Vec<usize> = left.iter().rev().copied().collect();
                vertices.push(u);
                vertices.push(v);
                vertices.extend_from_slice(&right);
                let inner = interior_mask(&vertices);
                if inner & internal == 0 {
                    out.push(Candidate {
                        path: GraphoidalPath::new(vertices),
                        edges: 1 << e | right_edges | left_edges,
                        internal: inner,
                    });
                }
            }
        }

        // Cycles u, v, ..., u: extensions from v that end next to u.
        for (tail, tail_edges, _) in self.extensions(v, 1 << u | 1 << v, free) {
            let Some(&last) = tail.last() else { continue };
            let Some(&(_, closing)) = self.incident[last]
                .iter()
                .find(|&&(y, f)| y == u && (free & !tail_edges) >> f & 1 == 1)
            else {
                continue;
            };
            let mut cycle = vec![u, v];
            cycle.extend_from_slice(&tail);
            let mask = cycle.iter().fold(0u64, |m, &x| m | 1 << x);
            let k = cycle.len();
            for start in 0..k {
                let inner = mask & !(1 << cycle[start]);
                if inner & internal != 0 {
                    continue;
                }
                let mut seq: Vec<usize> = (0..=k).map(|i| cycle[(start + i) % k]).collect();
                if seq[1] > seq[k - 1] {
                    seq.reverse();
                }
                out.push(Candidate {
                    path: GraphoidalPath::new(seq),
                    edges: 1 << e | tail_edges | 1 << closing,
                    internal: inner,
                });
            }
        }
        out
    }

    fn run<F>(&mut self, covered: u64, internal: u64, stack: &mut Vec<GraphoidalPath>, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[GraphoidalPath]),
    {
        if covered == self.all {
            if self.count == self.cap {
                return Err(Error::Capacity {
                    what: "graphoidal covers",
                    cap: self.cap,
                    partial: self.count,
                });
            }
            self.count += 1;
            visit(stack);
            return Ok(());
        }
        let e = (!covered & self.all).trailing_zeros() as usize;
        for c in self.candidates(e, self.all & !covered, internal) {
            stack.push(c.path);
            let r = self.run(covered | c.edges, internal | c.internal, stack, visit);
            stack.pop();
            r?;
        }
        Ok(())
    }
}

/// Calls `visit` on every graphoidal cover of `g` in a fixed order and
/// returns the number of covers. Paths are listed in the order chosen, so
/// path `0` contains edge `0`.
pub fn for_each_cover<F>(g: &Graph, cap: usize, mut visit: F) -> Result<usize>
where
    F: FnMut(&[GraphoidalPath]),
{
    if g.size() > MAX_COVER_EDGES {
        return Err(Error::UnsupportedSize {
            what: "edge count for cover enumeration",
            actual: g.size(),
            limit: MAX_COVER_EDGES,
        });
    }
    let mut incident = vec![Vec::new(); g.order()];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        incident[a].push((b, i));
        incident[b].push((a, i));
    }
    let mut search = CoverSearch {
        edges: g.edges(),
        incident,
        all: (1u64 << g.size()) - 1,
        cap,
        count: 0,
    };
    search.run(0, 0, &mut Vec::new(), &mut visit)?;
    Ok(search.count)
}

pub fn enumerate_covers(g: &Graph, cap: usize) -> Result<Vec<GraphoidalCover>> {
    let mut out = Vec::new();
    for_each_cover(g, cap, |paths| out.push(GraphoidalCover::new(paths.to_vec())))?;
    Ok(out)
}
