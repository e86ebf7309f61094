//! Automorphism groups as explicit, sorted element lists.
//!
//! Enumeration pairs a fixed individualisation path in the source partition
//! with every compatible path in a mirrored target partition. Both sides are
//! refined to equitable partitions after each individualisation, so a target
//! branch survives only while its cell shape matches the source. Each leaf is
//! checked edge by edge before being accepted.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::canon::{first_nonsingleton, individualize, Cells};
use crate::graph::{equitable_refinement, EdgeLabeling, Graph, VertexLabeling};

/// Default cap on the number of group elements materialised.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// A bijection on `0..n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(Error::UnsupportedSize {
                what: "permutation degree",
                actual: n,
                limit: u16::MAX as usize,
            });
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::arg(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.image(i) != i).collect()
    }
}

pub fn is_automorphism(g: &Graph, sigma: &Permutation) -> bool {
    sigma.degree() == g.order()
        && g
            .edges()
            .iter()
            .all(|&(u, v)| g.has_edge(sigma.image(u), sigma.image(v)))
}

/// The full automorphism group of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl AutomorphismGroup {
    /// Wraps a precomputed element list after checking that it contains the
    /// identity and is closed under inverses.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let group = AutomorphismGroup { degree, elements };
        if !group.contains(&Permutation::identity(degree)) {
            return Err(Error::arg("element list lacks the identity"));
        }
        if let Some(p) = group.elements.iter().find(|p| !group.contains(&p.inverse())) {
            return Err(Error::arg(format!("inverse of {:?} missing", p.images())));
        }
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their image arrays.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// True iff every product of two elements is an element. Quadratic in the
    /// group order.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|a| self.elements.iter().all(|b| self.contains(&a.compose(b))))
    }

    /// Elements fixing `v`.
    pub fn stabilizer(&self, v: usize) -> AutomorphismGroup {
        AutomorphismGroup {
            degree: self.degree,
            elements: self
                .elements
                .iter()
                .filter(|p| p.image(v) == v)
                .cloned()
                .collect(),
        }
    }
}

/// Complete automorphism group, capped at [`DEFAULT_GROUP_CAP`] elements.
pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup> {
    automorphisms_capped(g, DEFAULT_GROUP_CAP)
}

pub fn automorphisms_capped(g: &Graph, cap: usize) -> Result<AutomorphismGroup> {
    let n = g.order();
    if n == 0 {
        return AutomorphismGroup::from_elements(0, vec![Permutation::identity(0)]);
    }
    let root = equitable_refinement(g);
    let mut search = AutSearch {
        g,
        source_path: vec![root.clone()],
        found: Vec::new(),
        cap,
    };
    search.visit(0, root)?;
    AutomorphismGroup::from_elements(n, search.found)
}

struct AutSearch<'a> {
    g: &'a Graph,
    source_path: Vec<Cells>,
    found: Vec<Permutation>,
    cap: usize,
}

fn same_shape(a: &Cells, b: &Cells) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.len() == y.len())
}

impl AutSearch<'_> {
    fn visit(&mut self, level: usize, target: Cells) -> Result<()> {
        let source = &self.source_path[level];
        let Some(ci) = first_nonsingleton(source) else {
            let mut images = vec![0usize; self.g.order()];
            for (s, t) in source.iter().zip(&target) {
                images[s[0]] = t[0];
            }
            let sigma = Permutation::new(images)?;
            if is_automorphism(self.g, &sigma) {
                if self.found.len() >= self.cap {
                    return Err(Error::Capacity {
                        what: "automorphism group",
                        cap: self.cap,
                        partial: self.found.len(),
                    });
                }
                self.found.push(sigma);
            }
            return Ok(());
        };
        if self.source_path.len() == level + 1 {
            let u = source[ci][0];
            let next = individualize(self.g, source, ci, u);
            self.source_path.push(next);
        }
        for w in target[ci].clone() {
            let child = individualize(self.g, &target, ci, w);
            if same_shape(&child, &self.source_path[level + 1]) {
                self.visit(level + 1, child)?;
            }
        }
        Ok(())
    }
}

/// Orbit partition, each orbit sorted, orbits ordered by least element.
pub fn vertex_orbits(aut: &AutomorphismGroup) -> Vec<Vec<usize>> {
    let n = aut.degree();
    let mut root: Vec<usize> = (0..n).collect();
    for p in aut.elements() {
        for x in 0..n {
            let y = p.image(x);
            let (a, b) = (find(&mut root, x), find(&mut root, y));
            if a != b {
                root[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut root, x);
        if index[r] == usize::MAX {
            index[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[index[r]].push(x);
    }
    orbits
}

fn find(root: &mut [usize], mut x: usize) -> usize {
    while root[x] != x {
        root[x] = root[root[x]];
        x = root[x];
    }
    x
}

/// Permutation of `g`'s sorted edge list sending `{u, v}` to `{σ(u), σ(v)}`.
pub fn induced_edge_permutation(sigma: &Permutation, g: &Graph) -> Result<Permutation> {
    if sigma.degree() != g.order() {
        return Err(Error::arg("permutation degree differs from graph order"));
    }
    let images = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            g.edge_index(sigma.image(u), sigma.image(v))
                .ok_or_else(|| Error::arg("permutation is not an automorphism"))
        })
        .collect::<Result<Vec<_>>>()?;
    Permutation::new(images)
}

pub fn preserves_vertex_labeling(sigma: &Permutation, c: &VertexLabeling) -> Result<bool> {
    if sigma.degree() != c.len() {
        return Err(Error::arg(format!(
            "labeling has {} entries, permutation has degree {}",
            c.len(),
            sigma.degree()
        )));
    }
    let l = c.labels();
    Ok((0..l.len()).all(|x| l[sigma.image(x)] == l[x]))
}

pub fn preserves_edge_labeling(sigma: &Permutation, g: &Graph, c: &EdgeLabeling) -> Result<bool> {
    if c.len() != g.size() {
        return Err(Error::arg(format!(
            "labeling has {} entries, graph has {} edges",
            c.len(),
            g.size()
        )));
    }
    let on_edges = induced_edge_permutation(sigma, g)?;
    let l = c.labels();
    Ok((0..l.len()).all(|e| l[on_edges.image(e)] == l[e]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
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

    fn brute_force_order(h: &Graph) -> usize {
        fn rec(h: &Graph, map: &mut Vec<usize>, used: u64) -> usize {
            let k = map.len();
            if k == h.order() {
                return 1;
            }
            let mut total = 0;
            for t in 0..h.order() {
                if used & 1 << t == 0 && (0..k).all(|i| h.has_edge(i, k) == h.has_edge(map[i], t)) {
                    map.push(t);
                    total += rec(h, map, used | 1 << t);
                    map.pop();
                }
            }
            total
        }
        rec(h, &mut Vec::new(), 0)
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&complete(4)).unwrap().order(), 24);
        assert_eq!(automorphisms(&cycle(5)).unwrap().order(), 10);
        let p = petersen();
        assert_eq!(brute_force_order(&p), 120);
        assert_eq!(automorphisms(&p).unwrap().order(), 120);
    }

    #[test]
    fn elements_sorted_and_closed() {
        let aut = automorphisms(&cycle(6)).unwrap();
        assert!(aut.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(aut.is_closed());
        assert!(aut.elements()[0].is_identity());
    }

    #[test]
    fn capacity_error_reports_partial_count() {
        match automorphisms_capped(&complete(5), 50) {
            Err(Error::Capacity { partial, cap, .. }) => assert_eq!((partial, cap), (50, 50)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn orbits() {
        let star = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(
            vertex_orbits(&automorphisms(&star).unwrap()),
            vec![vec![0], vec![1, 2, 3, 4, 5]]
        );
        let k33 = g(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert_eq!(vertex_orbits(&automorphisms(&k33).unwrap()).len(), 1);
        // smallest asymmetric tree
        let asym = g(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]);
        assert_eq!(vertex_orbits(&automorphisms(&asym).unwrap()).len(), 7);
    }

    #[test]
    fn edge_action() {
        let c4 = cycle(4);
        let id = Permutation::identity(4);
        assert!(induced_edge_permutation(&id, &c4).unwrap().is_identity());
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let on_edges = induced_edge_permutation(&rot, &c4).unwrap();
        // edges: 01, 03, 12, 23 -> 12, 01, 23, 03
        assert_eq!(on_edges.images(), vec![2, 0, 3, 1]);
        let mut e = 0;
        for _ in 0..4 {
            e = on_edges.image(e);
        }
        assert_eq!(e, 0);
        assert!(on_edges.image(0) != 0 && on_edges.compose(&on_edges).image(0) != 0);
        let k2 = g(2, &[(0, 1)]);
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert!(induced_edge_permutation(&swap, &k2).unwrap().is_identity());
        let not_aut = Permutation::new(vec![0, 2, 1, 3]).unwrap();
        assert!(induced_edge_permutation(&not_aut, &c4).is_err());
    }

    #[test]
    fn labeling_preservation() {
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let constant = VertexLabeling::new(vec![1; 4], 1).unwrap();
        let unique = VertexLabeling::new(vec![2, 1, 1, 1], 2).unwrap();
        assert!(preserves_vertex_labeling(&Permutation::identity(4), &unique).unwrap());
        assert!(preserves_vertex_labeling(&rot, &constant).unwrap());
        assert!(!preserves_vertex_labeling(&rot, &unique).unwrap());
        assert!(preserves_vertex_labeling(&rot, &VertexLabeling::new(vec![1; 3], 1).unwrap()).is_err());
        let c4 = cycle(4);
        let edge_constant = EdgeLabeling::new(vec![1; 4], 1).unwrap();
        assert!(preserves_edge_labeling(&rot, &c4, &edge_constant).unwrap());
        let edge_unique = EdgeLabeling::new(vec![2, 1, 1, 1], 2).unwrap();
        assert!(!preserves_edge_labeling(&rot, &c4, &edge_unique).unwrap());
    }
}
