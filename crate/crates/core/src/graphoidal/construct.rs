//! Parametric cover constructions, the tuple edge labelings built from a
//! distinguishing labeling of `Ω`, and the bound checks relating `G`, `ψ`
//! and `Ω(G, ψ)`.

use serde::Serialize;

use super::{omega, validate_cover, GraphoidalCover, GraphoidalPath};
use crate::automorphism::automorphisms;
use crate::corpus;
use crate::distinguishing::{distinguishing_index, distinguishing_number, is_distinguishing_vertex};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, EdgeLabeling, Graph, VertexLabeling};

/// Caterpillar with spine `v1 .. v_{n+2}` (vertices `0..n+2`) and a pendant
/// `w_i` at each `v_i`, `2 <= i <= n+1` (vertex `n + i`). The cover is the
/// spine plus each pendant edge, so `Ω = K_{1,n}`.
pub fn construct_gap_instance(n: usize) -> Result<(Graph, GraphoidalCover)> {
    if n < 2 {
        return Err(Error::arg("the gap construction needs n >= 2"));
    }
    let mut edges: Vec<(usize, usize)> = (1..n + 2).map(|i| (i - 1, i)).collect();
    let mut paths = vec![GraphoidalPath::new((0..n + 2).collect())];
    for i in 2..=n + 1 {
        edges.push((i - 1, n + i));
        paths.push(GraphoidalPath::new(vec![i - 1, n + i]));
    }
    Ok((Graph::from_edges(2 * n + 2, &edges)?, GraphoidalCover::new(paths)))
}

/// Spine `v_1 .. v_{t1}, w_1 .. w_x, z_1 .. z_{t2}` (vertices in that order)
/// with a pendant path of `p` edges at every `w_i`; pendant vertices follow
/// the spine, leg by leg. The cover is the spine plus every pendant edge,
/// so `|ψ| = 1 + xp` and `Ω` is a spider with `x` legs of `p` vertices.
pub fn construct_spider_instance(
    x: usize,
    p: usize,
    t1: usize,
    t2: usize,
) -> Result<(Graph, GraphoidalCover)> {
    if x == 0 || p == 0 || (x, p) == (1, 1) {
        return Err(Error::arg("need x, p >= 1 and (x, p) != (1, 1)"));
    }
    if t1 == 0 || t2 == 0 || t1 == t2 {
        return Err(Error::arg("need t1, t2 >= 1 and t1 != t2"));
    }
    let spine = t1 + x + t2;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut paths = vec![GraphoidalPath::new((0..spine).collect())];
    let mut next = spine;
    for i in 0..x {
        let mut prev = t1 + i;
        for _ in 0..p {
            edges.push((prev, next));
            paths.push(GraphoidalPath::new(vec![prev, next]));
            prev = next;
            next += 1;
        }
    }
    Ok((Graph::from_edges(next, &edges)?, GraphoidalCover::new(paths)))
}

/// Edge labeling of `g` from a distinguishing labeling of `Ω(g, ψ)` with
/// `t` labels. A path whose `Ω`-label is `i` gets, along its stored vertex
/// sequence, labels `i, t+1, t+2, ..., t+2`, or `i, t+1, ..., t+1` when
/// `open_only` is set.
pub fn constructive_edge_labeling(
    g: &Graph,
    cover: &GraphoidalCover,
    omega_labeling: &VertexLabeling,
    open_only: bool,
) -> Result<EdgeLabeling> {
    let om = omega(g, cover)?;
    if omega_labeling.len() != om.order() {
        return Err(Error::arg("labeling length differs from the number of paths"));
    }
    if !is_distinguishing_vertex(&om, omega_labeling, &automorphisms(&om)?) {
        return Err(Error::arg("labeling is not distinguishing for the intersection graph"));
    }
    if open_only && cover.has_closed_path() {
        return Err(Error::arg("the open scheme needs a cover without closed paths"));
    }
    Ok(tuple_labeling(g, cover, omega_labeling, open_only))
}

pub(crate) fn tuple_labeling(
    g: &Graph,
    cover: &GraphoidalCover,
    omega_labeling: &VertexLabeling,
    open_only: bool,
) -> EdgeLabeling {
    let t = omega_labeling.label_count();
    let mut labels = vec![0; g.size()];
    for (path, &i) in cover.paths().iter().zip(omega_labeling.labels()) {
        for (j, (u, v)) in path.edges().enumerate() {
            let e = g.edge_index(u, v).expect("valid cover");
            labels[e] = match j {
                0 => i,
                1 => t + 1,
                _ if open_only => t + 1,
                _ => t + 2,
            };
        }
    }
    let count = if open_only { t + 1 } else { t + 2 };
    EdgeLabeling::new(labels, count).expect("labels within range")
}

/// Invariants of `Ω` needed by the bound checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OmegaValues {
    pub distinguishing_number: usize,
    pub distinguishing_index: Option<usize>,
    /// `Ω` is `C3` or `C5`.
    pub excluded_shape: bool,
    /// `Ω` is `C4`, `K4` or `K_{1, |ψ|-1}`.
    pub extremal_shape: bool,
}

pub(crate) fn omega_values(om: &Graph) -> Result<OmegaValues> {
    let n = om.order();
    let is = |h: Result<Graph>| h.map(|h| are_isomorphic(om, &h)).unwrap_or(false);
    Ok(OmegaValues {
        distinguishing_number: distinguishing_number(om)?,
        distinguishing_index: defined(distinguishing_index(om))?,
        excluded_shape: is(corpus::cycle(3)) || is(corpus::cycle(5)),
        extremal_shape: is(corpus::cycle(4))
            || is(corpus::complete(4))
            || (n >= 1 && is(corpus::star(n - 1))),
    })
}

pub(crate) fn defined(r: Result<usize>) -> Result<Option<usize>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::UndefinedIndex) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Values and bound checks for one `(G, ψ)`. A check is `None` when its
/// hypotheses do not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphoidalBoundsReport {
    pub cover_size: usize,
    pub has_closed_path: bool,
    pub distinguishing_index: Option<usize>,
    pub omega_distinguishing_number: usize,
    pub omega_distinguishing_index: Option<usize>,
    /// `1 <= D'(Ω) <= |ψ| - 1` for connected `G`, `|Ω| >= 3`, `Ω ∉ {C3, C5}`.
    pub omega_index_bound: Option<bool>,
    /// `D'(Ω) = |ψ| - 1` exactly when `Ω` is `C4`, `K4` or `K_{1,|ψ|-1}`.
    pub omega_index_equality: Option<bool>,
    /// `D'(G) - 2 <= D(Ω) <= |ψ|` for connected `G` of order at least 3.
    pub omega_number_bounds: Option<bool>,
    /// `D'(G) <= D(Ω) + 1` when every path is open.
    pub open_cover_bound: Option<bool>,
}

impl GraphoidalBoundsReport {
    /// No applicable check failed.
    pub fn holds(&self) -> bool {
        [
            self.omega_index_bound,
            self.omega_index_equality,
            self.omega_number_bounds,
            self.open_cover_bound,
        ]
        .iter()
        .all(|c| c.unwrap_or(true))
    }
}

pub(crate) fn assemble_report(
    g: &Graph,
    g_index: Option<usize>,
    cover: &GraphoidalCover,
    om: &OmegaValues,
) -> GraphoidalBoundsReport {
    let k = cover.len();
    let connected = g.is_connected();
    let index_hyp = connected && k >= 3 && !om.excluded_shape;
    let omega_index_bound = index_hyp
        .then(|| om.distinguishing_index.map(|d| 1 <= d && d < k))
        .flatten();
    let omega_index_equality = index_hyp
        .then(|| {
            om.distinguishing_index
                .map(|d| (d == k - 1) == om.extremal_shape)
        })
        .flatten();
    let number_hyp = connected && g.order() >= 3;
    let d = om.distinguishing_number;
    let omega_number_bounds = number_hyp
        .then(|| g_index.map(|di| di <= d + 2 && d <= k))
        .flatten();
    let open_cover_bound = (number_hyp && !cover.has_closed_path())
        .then(|| g_index.map(|di| di <= d + 1))
        .flatten();
    GraphoidalBoundsReport {
        cover_size: k,
        has_closed_path: cover.has_closed_path(),
        distinguishing_index: g_index,
        omega_distinguishing_number: d,
        omega_distinguishing_index: om.distinguishing_index,
        omega_index_bound,
        omega_index_equality,
        omega_number_bounds,
        open_cover_bound,
    }
}

pub fn verify_graphoidal_bounds(g: &Graph, cover: &GraphoidalCover) -> Result<GraphoidalBoundsReport> {
    validate_cover(g, cover)?;
    let om = omega(g, cover)?;
    let values = omega_values(&om)?;
    let g_index = defined(distinguishing_index(g))?;
    Ok(assemble_report(g, g_index, cover, &values))
}
