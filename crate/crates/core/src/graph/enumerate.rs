//! Exhaustive generation of connected graphs and trees up to isomorphism.
//!
//! Connected graphs on `n` vertices are grown from those on `n - 1` by adding
//! a vertex joined to a non-empty subset; every connected graph has a
//! non-cut vertex, so this reaches all classes. Duplicates are removed by
//! canonical form and each class is returned as its canonical representative.
//! Trees are grown by attaching leaves and deduplicated by AHU code.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::canon::canonical_labeling;
use super::tree::tree_canonical_code;
use super::Graph;
use crate::error::{Error, Result};

pub const CONNECTED_MAX_ORDER: usize = 8;
pub const TREE_MAX_ORDER: usize = 12;

static CONNECTED: [OnceLock<Vec<Graph>>; CONNECTED_MAX_ORDER + 1] =
    [const { OnceLock::new() }; CONNECTED_MAX_ORDER + 1];
static TREES: [OnceLock<Vec<Graph>>; TREE_MAX_ORDER + 1] =
    [const { OnceLock::new() }; TREE_MAX_ORDER + 1];

fn canonical_rep(g: &Graph) -> (Vec<u8>, Graph) {
    let (form, pos) = canonical_labeling(g).expect("order within canonical cap");
    let rep = g.permuted(&pos).expect("canonical labeling is a permutation");
    (form, rep)
}

pub(crate) fn connected_graphs(n: usize) -> Result<&'static [Graph]> {
    if n > CONNECTED_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "connected enumeration order",
            actual: n,
            limit: CONNECTED_MAX_ORDER,
        });
    }
    if let Some(done) = CONNECTED[n].get() {
        return Ok(done);
    }
    let generated = if n <= 1 {
        vec![Graph::empty(n)?]
    } else {
        let smaller = connected_graphs(n - 1)?;
        let found: BTreeMap<(usize, Vec<u8>), Graph> = smaller
            .par_iter()
            .flat_map_iter(|base| {
                (1u64..1 << (n - 1)).map(move |subset| {
                    let mut adj: Vec<u64> = (0..n - 1).map(|v| base.neighbor_mask(v)).collect();
                    for (v, row) in adj.iter_mut().enumerate() {
                        if subset >> v & 1 == 1 {
                            *row |= 1 << (n - 1);
                        }
                    }
                    adj.push(subset);
                    let g = Graph::from_adjacency(adj);
                    let (form, rep) = canonical_rep(&g);
                    ((rep.size(), form), rep)
                })
            })
            .collect();
        found.into_values().collect()
    };
    Ok(CONNECTED[n].get_or_init(|| generated))
}

/// One representative per isomorphism class of connected graphs of order `n`,
/// ordered by edge count and then canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    connected_graphs(n).map(<[Graph]>::to_vec)
}

pub(crate) fn trees(n: usize) -> Result<&'static [Graph]> {
    if n > TREE_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "tree enumeration order",
            actual: n,
            limit: TREE_MAX_ORDER,
        });
    }
    if let Some(done) = TREES[n].get() {
        return Ok(done);
    }
    let generated = if n <= 1 {
        vec![Graph::empty(n)?]
    } else {
        let smaller = trees(n - 1)?;
        let mut found: BTreeMap<String, Graph> = BTreeMap::new();
        for base in smaller {
            for v in 0..n - 1 {
                let mut edges = base.edges().to_vec();
                edges.push((v, n - 1));
                let t = Graph::from_edges(n, &edges)?;
                let code = tree_canonical_code(&t)?;
                found.entry(code).or_insert_with(|| canonical_rep(&t).1);
            }
        }
        found.into_values().collect()
    };
    Ok(TREES[n].get_or_init(|| generated))
}

/// One representative per isomorphism class of trees of order `n`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    trees(n).map(<[Graph]>::to_vec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn members_are_connected_and_distinct() {
        let gs = enumerate_connected_graphs(5).unwrap();
        assert!(gs.iter().all(Graph::is_connected));
        let mut forms: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), gs.len());
    }

    #[test]
    fn deterministic_order() {
        assert_eq!(enumerate_connected_graphs(5).unwrap(), enumerate_connected_graphs(5).unwrap());
        let first = enumerate_connected_graphs(4).unwrap();
        assert_eq!(first[0].size(), 3);
        assert_eq!(first.last().unwrap().size(), 6);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_trees(13).is_err());
        assert!(enumerate_connected_graphs(9).is_err());
    }
}
