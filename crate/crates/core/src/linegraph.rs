//! Line graphs, the edge lift of vertex automorphisms, and line-graph
//! recognition.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::automorphism::{automorphisms, induced_edge_permutation, is_automorphism,
    AutomorphismGroup, Permutation};
use crate::corpus::beineke_graphs;
use crate::error::{Error, Result};
use crate::graph::canon::canonical_labeling_uncapped;
use crate::graph::enumerate::{connected_graphs, trees};
use crate::graph::{contains_induced, Graph, MAX_ORDER};

/// Largest order accepted by [`root_graph_oracle`].
pub const ROOT_ORACLE_MAX_ORDER: usize = 7;

/// `L(G)` with the correspondence between edges of `G` and its vertices:
/// vertex `i` of `line` is edge `i` of `G`'s sorted edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphResult {
    pub line: Graph,
    pub edge_index: Vec<(usize, usize)>,
}

impl LineGraphResult {
    pub fn vertex_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edge_index.binary_search(&key).ok()
    }
}

pub fn line_graph(g: &Graph) -> Result<LineGraphResult> {
    let edges = g.edges();
    if edges.len() > MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "line graph order",
            actual: edges.len(),
            limit: MAX_ORDER,
        });
    }
    let mut adj = vec![0u64; edges.len()];
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for j in i + 1..edges.len() {
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Ok(LineGraphResult {
        line: Graph::from_adjacency(adj),
        edge_index: edges.to_vec(),
    })
}

/// Each automorphism of `g` paired with the permutation it induces on the
/// vertices of `L(g)`. Every image is checked to be an automorphism of `L(g)`.
pub fn gamma_lift(g: &Graph, aut: &AutomorphismGroup) -> Result<Vec<(Permutation, Permutation)>> {
    let line = line_graph(g)?.line;
    aut.elements()
        .iter()
        .map(|sigma| {
            let lifted = induced_edge_permutation(sigma, g)?;
            if !is_automorphism(&line, &lifted) {
                return Err(Error::arg("lifted permutation is not an automorphism of L(G)"));
            }
            Ok((sigma.clone(), lifted))
        })
        .collect()
}

/// True iff the lift is injective and `|Aut(G)| = |Aut(L(G))|`.
pub fn gamma_is_isomorphism(g: &Graph) -> Result<bool> {
    let aut = automorphisms(g)?;
    let lifted = gamma_lift(g, &aut)?;
    let mut images: Vec<&Permutation> = lifted.iter().map(|(_, l)| l).collect();
    images.sort_unstable();
    images.dedup();
    let injective = images.len() == aut.order();
    let line_aut = automorphisms(&line_graph(g)?.line)?;
    Ok(injective && aut.order() == line_aut.order())
}

pub fn is_claw_free(g: &Graph) -> bool {
    static CLAW: OnceLock<Graph> = OnceLock::new();
    let claw = CLAW.get_or_init(|| Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap());
    !contains_induced(g, claw)
}

/// Forbidden-subgraph test: no Beineke graph is an induced subgraph.
pub fn is_line_graph(g: &Graph) -> bool {
    beineke_graphs().iter().all(|b| !contains_induced(g, b))
}

/// Canonical form of `L(H)` for every connected `H` with `m` edges, mapped
/// to the first such `H` (by order, then enumeration order).
fn roots_with_size(m: usize) -> &'static HashMap<Vec<u8>, Graph> {
    static INDEX: [OnceLock<HashMap<Vec<u8>, Graph>>; ROOT_ORACLE_MAX_ORDER + 1] =
        [const { OnceLock::new() }; ROOT_ORACLE_MAX_ORDER + 1];
    INDEX[m].get_or_init(|| {
        let mut index = HashMap::new();
        let smallest = (0..).find(|&n: &usize| n * n.saturating_sub(1) / 2 >= m).unwrap();
        for n in smallest.max(1)..=m + 1 {
            let pool = if n == m + 1 {
                trees(n).expect("tree order within cap")
            } else {
                connected_graphs(n).expect("order within cap")
            };
            for h in pool.iter().filter(|h| h.size() == m) {
                let line = line_graph(h).expect("small line graph").line;
                index
                    .entry(canonical_labeling_uncapped(&line).0)
                    .or_insert_with(|| h.clone());
            }
        }
        index
    })
}

/// A connected graph `H` with `L(H) ≅ g`, if one exists. Brute force over
/// connected graphs with `order(g)` edges.
pub fn root_graph_oracle(g: &Graph) -> Result<Option<Graph>> {
    if g.order() > ROOT_ORACLE_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "root graph oracle order",
            actual: g.order(),
            limit: ROOT_ORACLE_MAX_ORDER,
        });
    }
    let form = canonical_labeling_uncapped(g).0;
    Ok(roots_with_size(g.order()).get(&form).cloned())
}
