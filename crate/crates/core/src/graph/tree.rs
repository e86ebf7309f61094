//! Tree structure: centers, AHU codes, symmetric and bisymmetric trees.

use super::{BitIter, Graph};
use crate::error::{Error, Result};

pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.size() == g.order() - 1 && g.is_connected()
}

fn require_tree(t: &Graph) -> Result<()> {
    if is_tree(t) {
        Ok(())
    } else {
        Err(Error::arg("graph is not a tree"))
    }
}

/// Center by iterated leaf removal: one vertex, or two adjacent vertices.
pub fn tree_center(t: &Graph) -> Result<Vec<usize>> {
    require_tree(t)?;
    let n = t.order();
    let mut degree = t.degrees();
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut removed = vec![false; n];
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in t.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut center: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    center.sort_unstable();
    Ok(center)
}

/// Distances from the vertex set `sources`.
pub(crate) fn bfs_distances(g: &Graph, sources: &[usize]) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        dist[s] = 0;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

fn leaves_equidistant_and_regular(t: &Graph, sources: &[usize]) -> bool {
    let dist = bfs_distances(t, sources);
    let leaf_depths: Vec<usize> = (0..t.order())
        .filter(|&v| t.degree(v) == 1)
        .map(|v| dist[v])
        .collect();
    let inner_degrees: Vec<usize> = (0..t.order())
        .filter(|&v| t.degree(v) > 1)
        .map(|v| t.degree(v))
        .collect();
    leaf_depths.windows(2).all(|w| w[0] == w[1]) && inner_degrees.windows(2).all(|w| w[0] == w[1])
}

/// Central tree whose leaves all lie at one distance from the center and
/// whose non-leaf vertices share one degree.
pub fn is_symmetric_tree(t: &Graph) -> Result<bool> {
    let center = tree_center(t)?;
    Ok(center.len() == 1 && leaves_equidistant_and_regular(t, &center))
}

/// Bicentric tree whose leaves all lie at one distance from the central edge
/// and whose non-leaf vertices share one degree.
pub fn is_bisymmetric_tree(t: &Graph) -> Result<bool> {
    let center = tree_center(t)?;
    Ok(center.len() == 2 && leaves_equidistant_and_regular(t, &center))
}

/// AHU parenthesis code of the subtree hanging from `root`, ignoring the
/// branch through `exclude` when given. Equal codes iff rooted-isomorphic.
pub fn rooted_tree_code(t: &Graph, root: usize, exclude: Option<usize>) -> String {
    fn code(t: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut children: Vec<String> = BitIter(t.neighbor_mask(v))
            .filter(|&u| Some(u) != parent)
            .map(|u| code(t, u, Some(v)))
            .collect();
        children.sort_unstable();
        let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
        s.push('(');
        for c in children {
            s.push_str(&c);
        }
        s.push(')');
        s
    }
    code(t, root, exclude)
}

/// Unrooted canonical code: rooted at the center, or at the central edge.
pub fn tree_canonical_code(t: &Graph) -> Result<String> {
    let center = tree_center(t)?;
    Ok(match center.as_slice() {
        [c] => format!("V{}", rooted_tree_code(t, *c, None)),
        [a, b] => {
            let ca = rooted_tree_code(t, *a, Some(*b));
            let cb = rooted_tree_code(t, *b, Some(*a));
            let (lo, hi) = if ca <= cb { (ca, cb) } else { (cb, ca) };
            format!("E{lo}{hi}")
        }
        _ => unreachable!("tree center has one or two vertices"),
    })
}
