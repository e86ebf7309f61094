//! Tree-specific quantities: rooted edge-labeling counts, the bicentric
//! family whose distinguishing index exceeds the distinguishing number, and
//! the tree bound report.
//!
//! Membership in the family needs a uniqueness count of root-distinguishing
//! edge labelings of one half of the tree. Which labelings count as "the
//! same" is ambiguous, so three conventions are computed side by side:
//! raw labelings, labelings up to renaming the labels, and labelings up to
//! automorphisms fixing the root.

use std::collections::HashSet;

use serde::Serialize;

use super::{distinguishing_edge_labeling_with, distinguishing_vertex_labeling_with, LabelSearch};
use crate::automorphism::{automorphisms, induced_edge_permutation, Permutation};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, is_bisymmetric_tree, is_symmetric_tree, is_tree,
    rooted_tree_code, tree_center, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTConvention {
    /// Exactly one labeling, no identification.
    Raw,
    /// Exactly one labeling up to a bijection of the label set.
    ModuloLabelPermutations,
    /// Exactly one labeling up to automorphisms of the half fixing its root.
    ModuloRootStabilizer,
}

impl FamilyTConvention {
    pub const ALL: [FamilyTConvention; 3] = [
        FamilyTConvention::Raw,
        FamilyTConvention::ModuloLabelPermutations,
        FamilyTConvention::ModuloRootStabilizer,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTConvention::Raw => "raw",
            FamilyTConvention::ModuloLabelPermutations => "modulo-label-permutations",
            FamilyTConvention::ModuloRootStabilizer => "modulo-root-stabilizer",
        }
    }
}

/// Root-distinguishing edge labelings of a rooted half, counted three ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HalfLabelingCounts {
    pub labels: usize,
    pub raw: u64,
    pub modulo_label_permutations: u64,
    pub modulo_root_stabilizer: u64,
}

impl HalfLabelingCounts {
    pub fn get(&self, convention: FamilyTConvention) -> u64 {
        match convention {
            FamilyTConvention::Raw => self.raw,
            FamilyTConvention::ModuloLabelPermutations => self.modulo_label_permutations,
            FamilyTConvention::ModuloRootStabilizer => self.modulo_root_stabilizer,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyTAnalysis {
    pub bicentric: bool,
    /// Halves of `T - vw` isomorphic as unrooted trees.
    pub halves_isomorphic: bool,
    /// Halves isomorphic as trees rooted at `v` and `w`.
    pub halves_rooted_isomorphic: bool,
    pub distinguishing_number: usize,
    /// Present only for bicentric trees.
    pub half_counts: Option<HalfLabelingCounts>,
}

impl FamilyTAnalysis {
    pub fn is_member(&self, convention: FamilyTConvention) -> bool {
        self.bicentric
            && self.halves_isomorphic
            && self.half_counts.is_some_and(|c| c.get(convention) == 1)
    }
}

fn stabilizer_edge_action(t: &Graph, v: usize) -> Result<Vec<Permutation>> {
    let aut = automorphisms(t)?;
    aut.stabilizer(v)
        .non_identity()
        .map(|sigma| induced_edge_permutation(sigma, t))
        .collect()
}

/// Edge labelings of `t` with labels in `1..=k` that no non-identity
/// automorphism fixing `v` preserves.
pub fn count_v_distinguishing_edge_labelings(t: &Graph, v: usize, k: usize) -> Result<u64> {
    if v >= t.order() {
        return Err(Error::arg(format!("vertex {v} outside 0..{}", t.order())));
    }
    if k == 0 {
        return Err(Error::arg("label count must be at least 1"));
    }
    let elements = stabilizer_edge_action(t, v)?;
    Ok(LabelSearch::new(t.size(), &elements).count(k, false))
}

fn half_counts(half: &Graph, root: usize, k: usize) -> Result<HalfLabelingCounts> {
    let elements = stabilizer_edge_action(half, root)?;
    let search = LabelSearch::new(half.size(), &elements);
    let raw = search.count(k, false);
    let modulo_label_permutations = search.count(k, true);
    let mut orbit_reps: HashSet<Vec<u8>> = HashSet::new();
    search.for_each(k, false, |labels| {
        let rep = elements
            .iter()
            .map(|sigma| {
                let mut moved = vec![0u8; labels.len()];
                for (e, &l) in labels.iter().enumerate() {
                    moved[sigma.image(e)] = l;
                }
                moved
            })
            .chain(std::iter::once(labels.to_vec()))
            .min()
            .unwrap();
        orbit_reps.insert(rep);
        true
    });
    Ok(HalfLabelingCounts {
        labels: k,
        raw,
        modulo_label_permutations,
        modulo_root_stabilizer: orbit_reps.len() as u64,
    })
}

/// Vertices on `v`'s side of the edge `vw`.
fn side_of(t: &Graph, v: usize, w: usize) -> Vec<usize> {
    let mut seen = vec![false; t.order()];
    seen[v] = true;
    seen[w] = true;
    let mut stack = vec![v];
    let mut side = vec![v];
    while let Some(x) = stack.pop() {
        for y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                side.push(y);
                stack.push(y);
            }
        }
    }
    side.sort_unstable();
    side
}

fn require_tree_of_order_three(t: &Graph) -> Result<()> {
    if !is_tree(t) {
        return Err(Error::arg("graph is not a tree"));
    }
    if t.order() < 3 {
        return Err(Error::arg("tree must have at least 3 vertices"));
    }
    Ok(())
}

pub fn family_t_analysis(t: &Graph) -> Result<FamilyTAnalysis> {
    require_tree_of_order_three(t)?;
    let aut = automorphisms(t)?;
    let d = distinguishing_vertex_labeling_with(t, &aut)?.value;
    let center = tree_center(t)?;
    let &[v, w] = center.as_slice() else {
        return Ok(FamilyTAnalysis {
            bicentric: false,
            halves_isomorphic: false,
            halves_rooted_isomorphic: false,
            distinguishing_number: d,
            half_counts: None,
        });
    };
    let side_v = side_of(t, v, w);
    let side_w = side_of(t, w, v);
    let half_v = t.induced_subgraph(&side_v)?;
    let half_w = t.induced_subgraph(&side_w)?;
    let root_v = side_v.binary_search(&v).unwrap();
    let rooted = rooted_tree_code(t, v, Some(w)) == rooted_tree_code(t, w, Some(v));
    Ok(FamilyTAnalysis {
        bicentric: true,
        halves_isomorphic: are_isomorphic(&half_v, &half_w),
        halves_rooted_isomorphic: rooted,
        distinguishing_number: d,
        half_counts: Some(half_counts(&half_v, root_v, d)?),
    })
}

/// Family membership under the root-stabiliser convention, the one that
/// agrees with `D'(T) = D(T) + 1` on every tree the harness scans.
pub fn is_in_family_t(t: &Graph) -> Result<bool> {
    is_in_family_t_under(t, FamilyTConvention::ModuloRootStabilizer)
}

pub fn is_in_family_t_under(t: &Graph, convention: FamilyTConvention) -> Result<bool> {
    Ok(family_t_analysis(t)?.is_member(convention))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeBoundsReport {
    pub order: usize,
    pub max_degree: usize,
    pub distinguishing_number: usize,
    pub distinguishing_index: usize,
    pub symmetric: bool,
    pub bisymmetric: bool,
    pub odd_length_path: bool,
    /// `D(T) <= Δ(T)`.
    pub bound_holds: bool,
    pub equality_predicted: bool,
    pub equality_observed: bool,
    pub family: FamilyTAnalysis,
}

impl TreeBoundsReport {
    /// `D <= Δ`, with equality exactly on symmetric trees and odd-length paths.
    pub fn number_bound_passes(&self) -> bool {
        self.bound_holds && self.equality_predicted == self.equality_observed
    }

    /// `D' - D` is 1 on family members and 0 elsewhere.
    pub fn index_passes(&self, convention: FamilyTConvention) -> bool {
        let expected = usize::from(self.family.is_member(convention));
        self.distinguishing_index == self.distinguishing_number + expected
    }
}

pub fn verify_tree_bounds(t: &Graph) -> Result<TreeBoundsReport> {
    require_tree_of_order_three(t)?;
    let aut = automorphisms(t)?;
    let d = distinguishing_vertex_labeling_with(t, &aut)?.value;
    let d_index = distinguishing_edge_labeling_with(t, &aut)?.value;
    let max_degree = t.max_degree();
    let symmetric = is_symmetric_tree(t)?;
    let bisymmetric = is_bisymmetric_tree(t)?;
    let odd_length_path = max_degree <= 2 && (t.order() - 1) % 2 == 1;
    Ok(TreeBoundsReport {
        order: t.order(),
        max_degree,
        distinguishing_number: d,
        distinguishing_index: d_index,
        symmetric,
        bisymmetric,
        odd_length_path,
        bound_holds: d <= max_degree,
        equality_predicted: symmetric || odd_length_path,
        equality_observed: d == max_degree,
        family: family_t_analysis(t)?,
    })
}
