//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's search code.

#![allow(dead_code)]

use symbreak::Graph;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn is_automorphism(g: &Graph, p: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v]))
}

/// `|Aut(g)|` by testing every permutation.
pub fn aut_order_by_scan(g: &Graph, perms: &[Vec<usize>]) -> usize {
    perms.iter().filter(|p| is_automorphism(g, p)).count()
}

/// Vertex pairs `(u, v)`, `u < v`, in the order used for bit encodings.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| bits >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest edge-bit encoding over all relabelings.
pub fn naive_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let pairs = pairs(g.order());
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(_, &(u, v))| g.has_edge(p[u], p[v]))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .min()
        .unwrap_or(0)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// by relabeling every labeled graph.
pub fn naive_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let m = n * n.saturating_sub(1) / 2;
    let mut seen = std::collections::BTreeSet::new();
    for bits in 0..1u64 << m {
        seen.insert(naive_canonical(&graph_from_bits(n, bits), &perms));
    }
    seen.into_iter().map(|bits| graph_from_bits(n, bits)).collect()
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Labeled connected graphs on `n` vertices, from the standard recurrence
/// over the component containing vertex 1.
pub fn labeled_connected(n: usize) -> u128 {
    let total = |k: usize| 1u128 << (k * k.saturating_sub(1) / 2);
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let mut disconnected = 0;
        for (k, &ck) in c.iter().enumerate().take(m).skip(1) {
            disconnected += binomial(m as u64 - 1, k as u64 - 1) * ck * total(m - k);
        }
        c[m] = total(m) - disconnected;
    }
    c[n]
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Graphoidal covers counted through set partitions of the edge set.
/// A block counts once if it is a path and once per vertex if it is a
/// cycle (the terminal); a choice is kept if no vertex is internal twice.
pub fn graphoidal_cover_count(g: &Graph) -> usize {
    let m = g.size();
    let mut count = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    partitions(0, m, &mut blocks, &mut |blocks| {
        let mut options: Vec<Vec<u64>> = Vec::new();
        for b in blocks {
            match block_internal_sets(g, b) {
                Some(o) => options.push(o),
                None => return,
            }
        }
        count += choices(&options, 0, 0);
    });
    count
}

fn choices(options: &[Vec<u64>], i: usize, used: u64) -> usize {
    if i == options.len() {
        return 1;
    }
    options[i]
        .iter()
        .filter(|&&inner| inner & used == 0)
        .map(|&inner| choices(options, i + 1, used | inner))
        .sum()
}

fn partitions<F: FnMut(&[Vec<usize>])>(e: usize, m: usize, blocks: &mut Vec<Vec<usize>>, f: &mut F) {
    if e == m {
        f(blocks);
        return;
    }
    for i in 0..blocks.len() {
        blocks[i].push(e);
        partitions(e + 1, m, blocks, f);
        blocks[i].pop();
    }
    blocks.push(vec![e]);
    partitions(e + 1, m, blocks, f);
    blocks.pop();
}

/// Internal-vertex masks for each way of reading the block as a cover
/// element, or `None` if it is neither a path nor a cycle.
fn block_internal_sets(g: &Graph, block: &[usize]) -> Option<Vec<u64>> {
    let n = g.order();
    let mut deg = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &e in block {
        let (u, v) = g.edges()[e];
        deg[u] += 1;
        deg[v] += 1;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let touched: Vec<usize> = (0..n).filter(|&v| deg[v] > 0).collect();
    let root = find(&mut parent, touched[0]);
    if touched.iter().any(|&v| find(&mut parent, v) != root) || deg.iter().any(|&d| d > 2) {
        return None;
    }
    let mask = touched.iter().fold(0u64, |acc, &v| acc | 1 << v);
    if block.len() == touched.len() {
        Some(touched.iter().map(|&t| mask & !(1 << t)).collect())
    } else {
        let inner = touched.iter().filter(|&&v| deg[v] == 2).fold(0u64, |acc, &v| acc | 1 << v);
        Some(vec![inner])
    }
}
