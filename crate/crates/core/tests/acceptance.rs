//! Acceptance criteria, one pass/fail line each. Runs without the test
//! harness so the lines are always printed.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};

use common::*;
use symbreak::automorphism::automorphisms;
use symbreak::corpus::{self, beineke_graphs};
use symbreak::distinguishing::{distinguishing_index, distinguishing_number};
use symbreak::graph::{enumerate_connected_graphs, enumerate_trees};
use symbreak::graphoidal::{
    construct_gap_instance, construct_spider_instance, omega, parse_cover, GraphoidalCover,
    GraphoidalPath,
};
use symbreak::harness::{
    verify_graphoidal_theorems, verify_line_graph_index_bound, verify_line_graph_number,
    verify_tree_theorems, VerificationReport,
};
use symbreak::linegraph::{is_line_graph, root_graph_oracle};
use symbreak::{encode_graph6, parse_graph6, Graph};

/// Criteria that fail on this implementation for reasons outside it; see
/// `counterexample_replays` for what is checked instead.
const KNOWN_FAILING: &[usize] = &[7];

struct Outcome {
    id: usize,
    pass: bool,
    detail: String,
    elapsed: Duration,
    limit: Duration,
}

fn run(id: usize, limit_secs: u64, check: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = check();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    Outcome {
        id,
        pass: pass && elapsed < limit,
        detail,
        elapsed,
        limit,
    }
}

fn summary(r: &VerificationReport) -> (bool, String) {
    (
        r.passed(),
        format!("{} instances, {} violations", r.instances, r.violations.len()),
    )
}

fn index(g: &Graph) -> Option<usize> {
    distinguishing_index(g).ok()
}

fn components(g: &Graph) -> Vec<Graph> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in 0..g.order() {
        if seen >> v & 1 == 0 {
            let mask = g.component_mask(v);
            seen |= mask;
            let vs: Vec<usize> = (0..g.order()).filter(|&u| mask >> u & 1 == 1).collect();
            out.push(g.induced_subgraph(&vs).unwrap());
        }
    }
    out
}

/// Line-graph test through root graphs only, one component at a time.
fn has_root(g: &Graph) -> bool {
    components(g).iter().all(|c| root_graph_oracle(c).unwrap().is_some())
}

fn criterion_1() -> (bool, String) {
    let k44 = corpus::complete_bipartite(4, 4).unwrap();
    let (d, di) = (distinguishing_number(&k44).unwrap(), index(&k44));
    (d == 5 && di == Some(2), format!("D(K44) = {d}, D'(K44) = {di:?}"))
}

fn criterion_4() -> (bool, String) {
    let mut bad = Vec::new();
    for (i, b) in beineke_graphs().iter().enumerate() {
        if root_graph_oracle(b).unwrap().is_some() {
            bad.push(format!("beineke_{} has a root", i + 1));
        }
        let n = b.order();
        for mask in 1u64..(1 << n) - 1 {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if !has_root(&b.induced_subgraph(&vs).unwrap()) {
                bad.push(format!("beineke_{} not minimal at {vs:?}", i + 1));
            }
        }
    }
    let order7 = enumerate_connected_graphs(7).unwrap();
    let disagree = order7
        .iter()
        .filter(|g| is_line_graph(g) != root_graph_oracle(g).unwrap().is_some())
        .count();
    (
        bad.is_empty() && disagree == 0 && order7.len() == 853,
        format!(
            "{} corpus problems, {disagree} disagreements over {} graphs of order 7",
            bad.len(),
            order7.len()
        ),
    )
}

fn criterion_5() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in 3..=5 {
        let (g, cover) = construct_gap_instance(n).unwrap();
        let om = omega(&g, &cover).unwrap();
        let v = (
            distinguishing_number(&g).unwrap(),
            index(&g),
            distinguishing_number(&om).unwrap(),
            index(&om),
        );
        ok &= v == (2, Some(2), n, Some(n));
        parts.push(format!("n={n}: D={} D'={:?} D(Ω)={} D'(Ω)={:?}", v.0, v.1, v.2, v.3));
    }
    (ok, parts.join("; "))
}

fn ceil_root(x: usize, p: u32) -> usize {
    (1..).find(|k: &usize| k.pow(p) >= x).unwrap()
}

fn criterion_6() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for (x, p) in [(2, 1), (3, 1), (2, 2), (4, 2), (5, 2)] {
        let (g, cover) = construct_spider_instance(x, p, 1, 2).unwrap();
        let got = index(&omega(&g, &cover).unwrap());
        let want = ceil_root(x, p as u32);
        ok &= got == Some(want);
        parts.push(format!("({x},{p}): {got:?} vs {want}"));
    }
    (ok, parts.join("; "))
}

fn criterion_7() -> (bool, String) {
    let r = verify_graphoidal_theorems(5).unwrap();
    let schemes = r.violations.iter().filter(|v| v.check.ends_with("-scheme")).count();
    let repairs = r
        .findings
        .iter()
        .find(|f| f.topic == "tuple-labeling-repairs")
        .map_or(String::new(), |f| f.observed.clone());
    (
        r.passed(),
        format!(
            "{} instances, {} violations ({schemes} from the labeling schemes, {} from bounds and \
             constructions); {repairs}",
            r.instances,
            r.violations.len(),
            r.violations.len() - schemes
        ),
    )
}

fn criterion_8() -> (bool, String) {
    let r = verify_tree_theorems(9).unwrap();
    let convention = r.findings.iter().find(|f| f.topic == "family-convention");
    let (pass, detail) = summary(&r);
    (
        pass && convention.is_some(),
        match convention {
            Some(f) => format!("{detail}; {}", f.observed),
            None => format!("{detail}; no convention report"),
        },
    )
}

fn criterion_9() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for i in 3..=5 {
        let c = corpus::cycle(i).unwrap();
        let mut walk: Vec<usize> = (0..i).collect();
        walk.push(0);
        let cover = GraphoidalCover::new(vec![GraphoidalPath::new(walk)]);
        let om = omega(&c, &cover).unwrap();
        let v = (index(&c), distinguishing_number(&om).unwrap());
        ok &= v == (Some(3), 1);
        parts.push(format!("C{i}: D'={:?} D(Ω)={}", v.0, v.1));
    }
    let c3 = corpus::cycle(3).unwrap();
    let edges = GraphoidalCover::single_edges(&c3);
    let d = distinguishing_number(&omega(&c3, &edges).unwrap()).unwrap();
    ok &= edges.len() == 3 && d == 3;
    parts.push(format!("C3 edges: |ψ|={} D(Ω)={d}", edges.len()));
    (ok, parts.join("; "))
}

fn criterion_10() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for (i, (x, p, t1, t2)) in [(2, 1, 1, 2), (2, 1, 2, 3), (3, 1, 2, 3), (4, 1, 2, 3)].into_iter().enumerate() {
        let (g, cover) = construct_spider_instance(x, p, t1, t2).unwrap();
        let di = index(&g).unwrap();
        let d = distinguishing_number(&omega(&g, &cover).unwrap()).unwrap();
        ok &= di.abs_diff(d) == i;
        parts.push(format!("i={i}: D'={di} D(Ω)={d}"));
    }
    (ok, parts.join("; "))
}

fn criterion_11() -> (bool, String) {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let mut round_trip_failures = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(0..=62);
        let p: f64 = rng.gen();
        let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if parse_graph6(&encode_graph6(&g).unwrap()).unwrap() != g {
            round_trip_failures += 1;
        }
    }
    let mut problems = Vec::new();
    for (n, want) in [(4, 6), (5, 21), (6, 112), (7, 853)] {
        let graphs = enumerate_connected_graphs(n).unwrap();
        let orbit_sum: u128 = graphs
            .iter()
            .map(|g| factorial(n) / automorphisms(g).unwrap().order() as u128)
            .sum();
        if graphs.len() != want || orbit_sum != labeled_connected(n) {
            problems.push(format!("connected order {n}: {}", graphs.len()));
        }
    }
    let trees = enumerate_trees(7).unwrap();
    let tree_sum: u128 = trees
        .iter()
        .map(|t| factorial(7) / automorphisms(t).unwrap().order() as u128)
        .sum();
    if trees.len() != 11 || tree_sum != 7u128.pow(5) {
        problems.push(format!("trees of order 7: {}", trees.len()));
    }
    let mut checked = 0;
    for n in 1..=6 {
        let perms = permutations(n);
        for g in naive_classes(n) {
            checked += 1;
            if automorphisms(&g).unwrap().order() != aut_order_by_scan(&g, &perms) {
                problems.push(format!("|Aut| of {}", encode_graph6(&g).unwrap()));
            }
        }
    }
    (
        round_trip_failures == 0 && problems.is_empty(),
        format!(
            "{round_trip_failures} graph6 failures in 10000; {} count or |Aut| problems; {checked} \
             graphs scanned for |Aut|",
            problems.len()
        ),
    )
}

/// Parses the first `[..]` list after `marker`.
fn list_after(text: &str, marker: &str) -> Vec<usize> {
    let rest = &text[text.find(marker).unwrap() + marker.len()..];
    let inner = &rest[rest.find('[').unwrap() + 1..rest.find(']').unwrap()];
    inner.split(',').map(|s| s.trim().parse().unwrap()).collect()
}

/// Recomputes each reported labeling failure from scratch: the edge labels
/// follow from the cover text and the `Ω` labeling, and the reported
/// permutation is a non-identity automorphism preserving them.
fn counterexample_replays() {
    let r = verify_graphoidal_theorems(5).unwrap();
    assert!(!r.violations.is_empty());
    for v in &r.violations {
        assert!(v.check.ends_with("-scheme"), "unexpected violation {v:?}");
        let g = parse_graph6(&v.graph6).unwrap();
        let cover = parse_cover(v.cover.as_deref().unwrap()).unwrap();
        let om = omega(&g, &cover).unwrap();
        let c = list_after(&v.observed, "Ω-labeling");
        let labels = list_after(&v.observed, "edge labels");
        let sigma = list_after(&v.observed, "preserved by");
        let t = distinguishing_number(&om).unwrap();
        assert!(c.len() == om.order() && c.iter().all(|&l| (1..=t).contains(&l)));

        let om_autos: Vec<Vec<usize>> = permutations(om.order())
            .into_iter()
            .filter(|p| is_automorphism(&om, p) && p.iter().enumerate().any(|(i, &x)| i != x))
            .collect();
        assert!(om_autos.iter().all(|p| (0..c.len()).any(|i| c[p[i]] != c[i])));

        let open_only = v.check == "open-scheme";
        let mut expect = vec![0; g.size()];
        for (path, &ci) in cover.paths().iter().zip(&c) {
            for (j, w) in path.vertices().windows(2).enumerate() {
                let e = g.edge_index(w[0], w[1]).unwrap();
                expect[e] = match j {
                    0 => ci,
                    1 => t + 1,
                    _ if open_only => t + 1,
                    _ => t + 2,
                };
            }
        }
        assert_eq!(labels, expect, "{v:?}");

        assert!(is_automorphism(&g, &sigma));
        assert!(sigma.iter().enumerate().any(|(i, &x)| i != x));
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let image = g.edge_index(sigma[a], sigma[b]).unwrap();
            assert_eq!(labels[image], labels[e]);
        }
    }
}

fn main() {
    let outcomes = vec![
        run(1, 60, criterion_1),
        run(2, 600, || summary(&verify_line_graph_number(6).unwrap())),
        run(3, 600, || summary(&verify_line_graph_index_bound(5).unwrap())),
        run(4, 900, criterion_4),
        run(5, 30, criterion_5),
        run(6, 60, criterion_6),
        run(7, 1800, criterion_7),
        run(8, 900, criterion_8),
        run(9, 10, criterion_9),
        run(10, 60, criterion_10),
        run(11, 900, criterion_11),
    ];
    for o in &outcomes {
        println!(
            "criterion {:>2}: {} ({:.2?}, limit {:?}) {}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.elapsed,
            o.limit,
            o.detail
        );
    }
    for o in &outcomes {
        if KNOWN_FAILING.contains(&o.id) {
            if !o.pass {
                counterexample_replays();
            }
        } else {
            assert!(o.pass, "criterion {} failed: {}", o.id, o.detail);
        }
    }
}
