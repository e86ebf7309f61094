//! Canonical labelling by individualisation and refinement.
//!
//! The search tree individualises one vertex of the first non-singleton cell
//! at each level and refines to the coarsest equitable partition. Every leaf
//! is a vertex ordering; the canonical form is the lexicographically least
//! adjacency certificate over all leaves. Automorphisms discovered along the
//! way (two leaves with equal certificates) prune sibling subtrees that lie in
//! one orbit of the pointwise stabiliser of the current prefix.

use super::{BitIter, Graph};
use crate::error::{Error, Result};

/// Default order cap for [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 12;

pub(crate) type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines an ordered partition until it is equitable: every vertex of a cell
/// has the same number of neighbours in every cell. Fragments of a split cell
/// are ordered by increasing neighbour count, which keeps the procedure
/// equivariant under relabelling.
pub(crate) fn refine(g: &Graph, cells: &mut Cells) {
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cell_mask(&cells[si]);
            for ci in 0..cells.len() {
                if cells[ci].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[ci]
                    .iter()
                    .map(|&v| ((g.neighbor_mask(v) & splitter).count_ones(), v))
                    .collect();
                if keyed.iter().all(|&(c, _)| c == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut fragments: Cells = Vec::new();
                let mut last = None;
                for (c, v) in keyed {
                    if last != Some(c) {
                        fragments.push(Vec::new());
                        last = Some(c);
                    }
                    fragments.last_mut().unwrap().push(v);
                }
                cells.splice(ci..=ci, fragments);
                continue 'restart;
            }
        }
        return;
    }
}

/// Coarsest equitable partition refining the unit partition.
pub fn equitable_refinement(g: &Graph) -> Vec<Vec<usize>> {
    let mut cells: Cells = if g.order() == 0 {
        Vec::new()
    } else {
        vec![(0..g.order()).collect()]
    };
    refine(g, &mut cells);
    cells
}

/// Splits `v` off the front of cell `ci` and refines.
pub(crate) fn individualize(g: &Graph, cells: &Cells, ci: usize, v: usize) -> Cells {
    let mut child = cells.clone();
    let rest: Vec<usize> = child[ci].iter().copied().filter(|&u| u != v).collect();
    child.splice(ci..=ci, [vec![v], rest]);
    refine(g, &mut child);
    child
}

pub(crate) fn first_nonsingleton(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        order
            .iter()
            .map(|&v| {
                BitIter(self.g.neighbor_mask(v)).fold(0u64, |m, u| m | 1 << pos[u])
            })
            .collect()
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = self.certificate(&order);
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best_cert, best_order)) => {
                if cert < *best_cert {
                    self.best = Some((cert, order));
                } else if cert == *best_cert {
                    let mut sigma = vec![0usize; order.len()];
                    for (i, &b) in best_order.iter().enumerate() {
                        sigma[b] = order[i];
                    }
                    if sigma.iter().enumerate().any(|(i, &s)| i != s) {
                        self.automorphisms.push(sigma);
                    }
                }
            }
        }
    }

    /// Orbit representative of `v` under known automorphisms fixing `prefix`.
    fn orbit_root(&self, v: usize, prefix: &[usize]) -> usize {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for sigma in &self.automorphisms {
            if prefix.iter().all(|&x| sigma[x] == x) {
                for (x, &y) in sigma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        find(&mut parent, v)
    }

    fn visit(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let Some(ci) = first_nonsingleton(&cells) else {
            self.leaf(cells.into_iter().flatten().collect());
            return;
        };
        let mut explored_roots: Vec<usize> = Vec::new();
        for &v in &cells[ci] {
            let root = self.orbit_root(v, prefix);
            if explored_roots.iter().any(|&r| self.orbit_root(r, prefix) == root) {
                continue;
            }
            explored_roots.push(v);
            let child = individualize(self.g, &cells, ci, v);
            prefix.push(v);
            self.visit(child, prefix);
            prefix.pop();
        }
    }
}

fn run_search(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = equitable_refinement(g);
    search.visit(root, &mut Vec::new());
    search.best.unwrap_or_default()
}

fn encode_certificate(n: usize, rows: &[u64]) -> Vec<u8> {
    let mut out = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, row) in rows.iter().enumerate().take(n) {
        for j in i + 1..n {
            acc = acc << 1 | (row >> j & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

pub(crate) fn canonical_labeling_uncapped(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let (rows, order) = run_search(g);
    let mut pos = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    (encode_certificate(g.order(), &rows), pos)
}

/// Canonical form and the relabelling achieving it: `position[v]` is the index
/// of `v` in the canonical ordering, so `g.permuted(&position)` is the
/// canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<(Vec<u8>, Vec<usize>)> {
    check_cap(g, CANON_MAX_ORDER)?;
    Ok(canonical_labeling_uncapped(g))
}

/// Byte string that is equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    canonical_form_capped(g, CANON_MAX_ORDER)
}

pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<Vec<u8>> {
    check_cap(g, cap)?;
    Ok(canonical_labeling_uncapped(g).0)
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::UnsupportedSize {
            what: "canonical form order",
            actual: g.order(),
            limit: cap,
        });
    }
    Ok(())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    canonical_labeling_uncapped(a).0 == canonical_labeling_uncapped(b).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &e)
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        g(10, &e)
    }

    fn kneser_5_2() -> Graph {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut e = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    e.push((i, j));
                }
            }
        }
        g(10, &e)
    }

    // Direct bijection search with adjacency checks, independent of refinement.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut u64) -> bool {
            let k = map.len();
            if k == a.order() {
                return true;
            }
            for t in 0..b.order() {
                if *used & 1 << t != 0 || a.degree(k) != b.degree(t) {
                    continue;
                }
                if (0..k).all(|i| a.has_edge(i, k) == b.has_edge(map[i], t)) {
                    map.push(t);
                    *used |= 1 << t;
                    if extend(a, b, map, used) {
                        return true;
                    }
                    *used &= !(1 << t);
                    map.pop();
                }
            }
            false
        }
        a.order() == b.order() && a.size() == b.size() && extend(a, b, &mut Vec::new(), &mut 0)
    }

    #[test]
    fn petersen_is_kneser() {
        assert!(brute_isomorphic(&petersen(), &kneser_5_2()));
        assert!(are_isomorphic(&petersen(), &kneser_5_2()));
    }

    #[test]
    fn cycle_not_path() {
        assert!(!are_isomorphic(&cycle(5), &path(5)));
        assert_ne!(canonical_form(&cycle(5)).unwrap(), canonical_form(&path(5)).unwrap());
    }

    #[test]
    fn k33_relabelled() {
        let k33 = g(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let other = k33.permuted(&[5, 0, 3, 1, 4, 2]).unwrap();
        assert!(are_isomorphic(&k33, &other));
    }

    #[test]
    fn relabelling_invariance_random() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let p = rng.gen_range(0.1..0.9);
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        e.push((u, v));
                    }
                }
            }
            let a = g(n, &e);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let b = a.permuted(&perm).unwrap();
            assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
            let (_, pos) = canonical_labeling(&a).unwrap();
            let (_, pos_b) = canonical_labeling(&b).unwrap();
            assert_eq!(a.permuted(&pos).unwrap(), b.permuted(&pos_b).unwrap());
        }
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut forms = std::collections::BTreeSet::new();
        let mut reps: Vec<Graph> = Vec::new();
        for bits in 0u32..64 {
            let e: Vec<_> = (0..6).filter(|i| bits >> i & 1 == 1).map(|i| pairs[i]).collect();
            let h = g(4, &e);
            forms.insert(canonical_form(&h).unwrap());
            if !reps.iter().any(|r| brute_isomorphic(r, &h)) {
                reps.push(h);
            }
        }
        assert_eq!(reps.len(), 11);
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn cap_is_enforced() {
        let big = cycle(13);
        assert!(matches!(canonical_form(&big), Err(Error::UnsupportedSize { .. })));
        assert!(canonical_form_capped(&big, 13).is_ok());
        assert!(are_isomorphic(&big, &big.permuted(&(0..13).rev().collect::<Vec<_>>()).unwrap()));
    }

    #[test]
    fn complete_graph_search_is_pruned() {
        let mut e = Vec::new();
        for u in 0..12 {
            for v in u + 1..12 {
                e.push((u, v));
            }
        }
        // 12! leaves without automorphism pruning.
        assert!(canonical_form(&g(12, &e)).is_ok());
    }

    #[test]
    fn equitable_partition_of_star() {
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(equitable_refinement(&star), vec![vec![1, 2, 3, 4], vec![0]]);
    }
}
