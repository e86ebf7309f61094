//! Distinguishing numbers and indices.
//!
//! `D(G)` is the least number of vertex labels such that only the identity
//! automorphism preserves the labeling; `D'(G)` is the same for edge labels.
//! Both reduce to one search over a permutation group acting on points,
//! see [`engine`].

mod engine;
mod trees;

use serde::Serialize;

use crate::automorphism::{
    automorphisms, induced_edge_permutation, preserves_vertex_labeling, AutomorphismGroup,
    Permutation,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeLabeling, Graph, VertexLabeling};

pub(crate) use engine::LabelSearch;
pub use trees::{
    count_v_distinguishing_edge_labelings, family_t_analysis, is_in_family_t,
    is_in_family_t_under, verify_tree_bounds, FamilyTAnalysis, FamilyTConvention,
    HalfLabelingCounts, TreeBoundsReport,
};

/// An optimal label count together with the first witness labeling found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinguishing {
    pub value: usize,
    pub witness: Vec<usize>,
}

pub fn is_distinguishing_vertex(g: &Graph, c: &VertexLabeling, aut: &AutomorphismGroup) -> bool {
    debug_assert_eq!(aut.degree(), g.order());
    aut.non_identity()
        .all(|sigma| !preserves_vertex_labeling(sigma, c).unwrap_or(true))
}

/// True iff no non-identity automorphism maps the edge labeling to itself.
pub fn is_distinguishing_edge(
    g: &Graph,
    c: &EdgeLabeling,
    aut: &AutomorphismGroup,
) -> Result<bool> {
    if c.len() != g.size() {
        return Err(Error::arg("edge labeling does not match the edge count"));
    }
    let labels = c.labels();
    for sigma in aut.non_identity() {
        let on_edges = induced_edge_permutation(sigma, g)?;
        if (0..labels.len()).all(|e| labels[on_edges.image(e)] == labels[e]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-identity elements of `aut` as permutations of `g`'s edges. Fails with
/// [`Error::UndefinedIndex`] if one of them fixes every edge.
pub(crate) fn edge_action(g: &Graph, aut: &AutomorphismGroup) -> Result<Vec<Permutation>> {
    aut.non_identity()
        .map(|sigma| {
            let p = induced_edge_permutation(sigma, g)?;
            if p.is_identity() {
                Err(Error::UndefinedIndex)
            } else {
                Ok(p)
            }
        })
        .collect()
}

pub fn distinguishing_number(g: &Graph) -> Result<usize> {
    Ok(distinguishing_vertex_labeling(g)?.value)
}

/// `D(G)` with a witness labeling.
pub fn distinguishing_vertex_labeling(g: &Graph) -> Result<Distinguishing> {
    let aut = automorphisms(g)?;
    distinguishing_vertex_labeling_with(g, &aut)
}

pub fn distinguishing_vertex_labeling_with(
    g: &Graph,
    aut: &AutomorphismGroup,
) -> Result<Distinguishing> {
    let elements: Vec<Permutation> = aut.non_identity().cloned().collect();
    let search = LabelSearch::new(g.order(), &elements);
    let (value, witness) = search
        .minimum()
        .expect("all-distinct labels always distinguish");
    Ok(Distinguishing {
        value: value.max(1),
        witness,
    })
}

pub fn distinguishing_index(g: &Graph) -> Result<usize> {
    Ok(distinguishing_edge_labeling(g)?.value)
}

/// `D'(G)` with a witness labeling over the sorted edge list.
pub fn distinguishing_edge_labeling(g: &Graph) -> Result<Distinguishing> {
    let aut = automorphisms(g)?;
    distinguishing_edge_labeling_with(g, &aut)
}

pub fn distinguishing_edge_labeling_with(
    g: &Graph,
    aut: &AutomorphismGroup,
) -> Result<Distinguishing> {
    let elements = edge_action(g, aut)?;
    let search = LabelSearch::new(g.size(), &elements);
    let (value, witness) = search.minimum().ok_or(Error::UndefinedIndex)?;
    Ok(Distinguishing { value, witness })
}
