//! Backtracking search for labelings with trivial stabiliser.
//!
//! The group acts on `points` (vertices or edges). Points are labelled one
//! at a time. An element dies as soon as some pair `x, σ(x)` receives
//! different labels; an element still alive once every point it moves is
//! labelled preserves every extension, so that branch is cut.

use crate::automorphism::Permutation;

pub(crate) struct LabelSearch {
    points: usize,
    images: Vec<Vec<u16>>,
    inverses: Vec<Vec<u16>>,
    movers: Vec<Vec<u32>>,
    support: Vec<u32>,
    order: Vec<usize>,
}

/// Per-search mutable state.
struct State {
    labels: Vec<u8>,
    dead: Vec<bool>,
    remaining: Vec<u32>,
    killed: Vec<u32>,
}

impl LabelSearch {
    /// `elements` are the non-identity group elements as permutations of the points.
    pub(crate) fn new(points: usize, elements: &[Permutation]) -> Self {
        let images: Vec<Vec<u16>> = elements.iter().map(|p| p.raw().to_vec()).collect();
        let inverses: Vec<Vec<u16>> = elements.iter().map(|p| p.inverse().raw().to_vec()).collect();
        let mut movers = vec![Vec::new(); points];
        let mut support = vec![0u32; images.len()];
        for (e, img) in images.iter().enumerate() {
            for (x, &y) in img.iter().enumerate() {
                if y as usize != x {
                    movers[x].push(e as u32);
                    support[e] += 1;
                }
            }
        }
        let order = Self::greedy_order(points, &images, &inverses, &movers);
        LabelSearch {
            points,
            images,
            inverses,
            movers,
            support,
            order,
        }
    }

    /// Places next the point that closes the most pairs `x, σ(x)` with
    /// already placed points; ties go to the point moved by most elements.
    fn greedy_order(
        points: usize,
        images: &[Vec<u16>],
        inverses: &[Vec<u16>],
        movers: &[Vec<u32>],
    ) -> Vec<usize> {
        let mut score = vec![0usize; points];
        let mut placed = vec![false; points];
        let mut order = Vec::with_capacity(points);
        for _ in 0..points {
            let p = (0..points)
                .filter(|&p| !placed[p])
                .max_by_key(|&p| (score[p], movers[p].len(), std::cmp::Reverse(p)))
                .unwrap();
            placed[p] = true;
            order.push(p);
            for &e in &movers[p] {
                score[images[e as usize][p] as usize] += 1;
                score[inverses[e as usize][p] as usize] += 1;
            }
        }
        order
    }

    pub(crate) fn has_elements(&self) -> bool {
        !self.images.is_empty()
    }

    fn state(&self) -> State {
        State {
            labels: vec![0; self.points],
            dead: vec![false; self.images.len()],
            remaining: self.support.clone(),
            killed: Vec::new(),
        }
    }

    /// Assigns `label` to `p`; false if some live element is now forced.
    fn assign(&self, st: &mut State, p: usize, label: u8) -> bool {
        st.labels[p] = label;
        let mut ok = true;
        for &e in &self.movers[p] {
            let e = e as usize;
            st.remaining[e] -= 1;
            if st.dead[e] {
                continue;
            }
            let fwd = st.labels[self.images[e][p] as usize];
            let back = st.labels[self.inverses[e][p] as usize];
            if (fwd != 0 && fwd != label) || (back != 0 && back != label) {
                st.dead[e] = true;
                st.killed.push(e as u32);
            } else if st.remaining[e] == 0 {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&self, st: &mut State, p: usize, mark: usize) {
        for &e in &self.movers[p] {
            st.remaining[e as usize] += 1;
        }
        for e in st.killed.drain(mark..) {
            st.dead[e as usize] = false;
        }
        st.labels[p] = 0;
    }

    /// Visits every labeling with labels in `1..=k` whose stabiliser is
    /// trivial; with `canonical_labels` only those where labels first appear
    /// in increasing order along the search order. The visitor returns
    /// `false` to stop early.
    pub(crate) fn for_each<F>(&self, k: usize, canonical_labels: bool, mut visit: F)
    where
        F: FnMut(&[u8]) -> bool,
    {
        assert!(k < u8::MAX as usize, "label count too large");
        let mut st = self.state();
        if self.points == 0 {
            if !self.has_elements() {
                visit(&st.labels);
            }
            return;
        }
        // Elements that move no point can never be killed.
        if self.support.contains(&0) {
            return;
        }
        self.dfs(&mut st, 0, 0, k, canonical_labels, &mut visit);
    }

    fn dfs<F>(
        &self,
        st: &mut State,
        depth: usize,
        max_used: usize,
        k: usize,
        canonical_labels: bool,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[u8]) -> bool,
    {
        if depth == self.points {
            return visit(&st.labels);
        }
        let p = self.order[depth];
        let top = if canonical_labels { (max_used + 1).min(k) } else { k };
        for label in 1..=top {
            let mark = st.killed.len();
            let ok = self.assign(st, p, label as u8);
            let keep_going = !ok
                || self.dfs(st, depth + 1, max_used.max(label), k, canonical_labels, visit);
            self.unassign(st, p, mark);
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// First labeling (in search order) with at most `k` labels, if any.
    pub(crate) fn find(&self, k: usize) -> Option<Vec<usize>> {
        let mut found = None;
        self.for_each(k, true, |labels| {
            found = Some(labels.iter().map(|&l| l as usize).collect());
            false
        });
        found
    }

    /// Least label count admitting a labeling with trivial stabiliser.
    pub(crate) fn minimum(&self) -> Option<(usize, Vec<usize>)> {
        if !self.has_elements() {
            return Some((1, vec![1; self.points]));
        }
        (1..=self.points).find_map(|k| self.find(k).map(|w| (k, w)))
    }

    pub(crate) fn count(&self, k: usize, canonical_labels: bool) -> u64 {
        let mut total = 0u64;
        self.for_each(k, canonical_labels, |_| {
            total += 1;
            true
        });
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(n: usize, list: &[&[usize]]) -> Vec<Permutation> {
        list.iter()
            .map(|p| {
                assert_eq!(p.len(), n);
                Permutation::new(p.to_vec()).unwrap()
            })
            .collect()
    }

    #[test]
    fn symmetric_group_on_three_points() {
        let s3 = perms(3, &[&[0, 2, 1], &[1, 0, 2], &[1, 2, 0], &[2, 0, 1], &[2, 1, 0]]);
        let search = LabelSearch::new(3, &s3);
        assert_eq!(search.minimum().unwrap().0, 3);
        assert_eq!(search.count(3, false), 6);
        assert_eq!(search.count(3, true), 1);
        assert_eq!(search.count(2, false), 0);
    }

    #[test]
    fn trivial_group() {
        let search = LabelSearch::new(4, &[]);
        assert_eq!(search.minimum(), Some((1, vec![1; 4])));
        assert_eq!(search.count(2, false), 16);
    }

    #[test]
    fn element_without_support_blocks_everything() {
        // an automorphism acting trivially on the points, as the swap of K2 on its edge
        let search = LabelSearch::new(1, &perms(1, &[&[0]]));
        assert_eq!(search.minimum(), None);
        assert_eq!(search.count(3, false), 0);
    }
}
