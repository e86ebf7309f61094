//! Scans over graphoidal covers and the parametric constructions.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use super::scans::connected_up_to;
use super::{check_order, g6, Finding, TheoremId, VerificationReport, Violation};
use crate::automorphism::{automorphisms, Permutation};
use crate::corpus;
use crate::distinguishing::{
    distinguishing_edge_labeling_with, distinguishing_index, distinguishing_number,
    distinguishing_vertex_labeling, edge_action, LabelSearch,
};
use crate::error::Result;
use crate::graph::canon::canonical_labeling_uncapped;
use crate::graph::{are_isomorphic, EdgeLabeling, Graph, VertexLabeling};
use crate::graphoidal::construct::{
    assemble_report, defined, omega_values, tuple_labeling, OmegaValues,
};
use crate::graphoidal::{
    cover_violations, for_each_cover, format_cover, omega, omega_unchecked,
    construct_gap_instance, construct_spider_instance, GraphoidalCover, GraphoidalPath,
    GraphoidalBoundsReport, DEFAULT_COVER_CAP,
};

/// Spider parameters `(x, p)` whose index is checked against `⌈x^(1/p)⌉`.
pub const SPIDER_PARAMETERS: [(usize, usize); 5] = [(2, 1), (3, 1), (2, 2), (4, 2), (5, 2)];

/// Smallest `d` with `d^p >= x`.
pub fn ceil_root(x: usize, p: usize) -> usize {
    (1..).find(|&d: &usize| d.pow(p as u32) >= x).unwrap()
}

/// Index of a permutation preserving the labels, if any.
fn preserver(perms: &[Permutation], labels: &[usize]) -> Option<usize> {
    perms
        .iter()
        .position(|p| (0..labels.len()).all(|e| labels[p.image(e)] == labels[e]))
}

/// Tuple labelings tried per failing cover when looking for a repair.
const REPAIR_BUDGET: usize = 200_000;

enum Repair {
    Relabel,
    Reorient,
    Impossible,
    Undetermined,
}

fn cover_violation(check: &str, g: &Graph, cover: &GraphoidalCover, observed: String) -> Violation {
    Violation {
        check: check.to_string(),
        graph6: g6(g),
        cover: Some(format_cover(cover)),
        observed,
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    violations: Vec<Violation>,
    applications: usize,
    /// Applications where the first distinguishing labeling of `Ω` fails,
    /// split by how the failure could be repaired.
    failures: usize,
    relabel: usize,
    reorient: usize,
    impossible: usize,
    undetermined: usize,
    examples: Vec<String>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.instances += other.instances;
        self.violations.extend(other.violations);
        self.applications += other.applications;
        self.failures += other.failures;
        self.relabel += other.relabel;
        self.reorient += other.reorient;
        self.impossible += other.impossible;
        self.undetermined += other.undetermined;
        self.examples.extend(other.examples);
    }
}

struct HostContext<'a> {
    g: &'a Graph,
    g_index: Option<usize>,
    /// Non-identity automorphisms of `g`, on vertices and on edges; empty
    /// below order 3.
    vertex_perms: Vec<Permutation>,
    edge_perms: Vec<Permutation>,
    cache: HashMap<Vec<u8>, (OmegaValues, Vec<usize>)>,
}

impl HostContext<'_> {
    /// Values of `Ω` and a distinguishing labeling of it, cached by the
    /// canonical form and moved back onto this `Ω`'s vertex numbering.
    fn omega_data(&mut self, om: &Graph) -> Result<(OmegaValues, Vec<usize>)> {
        let (cert, pos) = canonical_labeling_uncapped(om);
        if !self.cache.contains_key(&cert) {
            let values = omega_values(om)?;
            let witness = distinguishing_vertex_labeling(om)?.witness;
            let mut canonical = vec![0; om.order()];
            for v in 0..om.order() {
                canonical[pos[v]] = witness[v];
            }
            self.cache.insert(cert.clone(), (values, canonical));
        }
        let (values, canonical) = &self.cache[&cert];
        let witness = (0..om.order()).map(|v| canonical[pos[v]]).collect();
        Ok((values.clone(), witness))
    }

    fn check_cover(&mut self, paths: &[GraphoidalPath], tally: &mut Tally) -> Result<()> {
        let g = self.g;
        let cover = GraphoidalCover::new(paths.to_vec());
        tally.instances += 1;
        if let Some(v) = cover_violations(g, &cover)?.first() {
            tally
                .violations
                .push(cover_violation("cover-conditions", g, &cover, v.to_string()));
            return Ok(());
        }
        let om = omega_unchecked(paths);
        let (values, witness) = self.omega_data(&om)?;
        let report = assemble_report(g, self.g_index, &cover, &values);
        for (check, outcome) in bound_checks(&report) {
            if outcome == Some(false) {
                tally
                    .violations
                    .push(cover_violation(check, g, &cover, describe(&report)));
            }
        }
        if g.order() < 3 {
            return Ok(());
        }
        let t = values.distinguishing_number;
        let mut schemes = vec![(false, cover.clone())];
        if cover.has_closed_path() {
            schemes.push((false, cover.with_closed_paths_reversed()));
        } else {
            schemes.push((true, cover.clone()));
        }
        for (open_only, oriented) in schemes {
            tally.applications += 1;
            let labeling = VertexLabeling::new(witness.clone(), t).expect("witness in range");
            let edges = tuple_labeling(g, &oriented, &labeling, open_only);
            let limit = if open_only { t + 1 } else { t + 2 };
            if edges.distinct_labels() > limit {
                tally.violations.push(cover_violation(
                    scheme_name(open_only),
                    g,
                    &oriented,
                    format!("{} labels used, limit {limit}", edges.distinct_labels()),
                ));
            }
            let Some(k) = preserver(&self.edge_perms, edges.labels()) else {
                continue;
            };
            tally.failures += 1;
            if tally.examples.len() < 5 {
                tally.examples.push(format!(
                    "{} [{}]",
                    g6(g),
                    format_cover(&oriented).trim_end().replace('\n', " | ")
                ));
            }
            tally.violations.push(cover_violation(
                scheme_name(open_only),
                g,
                &oriented,
                format!(
                    "Ω-labeling {:?} gives edge labels {:?}, preserved by {:?}",
                    witness,
                    edges.labels(),
                    self.vertex_perms[k].images()
                ),
            ));
            match self.repair(&om, &oriented, t, open_only)? {
                Repair::Relabel => tally.relabel += 1,
                Repair::Reorient => tally.reorient += 1,
                Repair::Impossible => tally.impossible += 1,
                Repair::Undetermined => tally.undetermined += 1,
            }
        }
        Ok(())
    }

    /// Tries every distinguishing `t`-labeling of `Ω`, first with the paths
    /// as stored and then with every choice of path directions.
    fn repair(&self, om: &Graph, cover: &GraphoidalCover, t: usize, open_only: bool) -> Result<Repair> {
        let elements: Vec<Permutation> = automorphisms(om)?.non_identity().cloned().collect();
        let search = LabelSearch::new(om.order(), &elements);
        let mut budget = REPAIR_BUDGET;
        let works = |oriented: &GraphoidalCover, budget: &mut usize| -> Option<bool> {
            let mut found = false;
            let mut exhausted = false;
            search.for_each(t, false, |labels| {
                if *budget == 0 {
                    exhausted = true;
                    return false;
                }
                *budget -= 1;
                let c = VertexLabeling::new(labels.iter().map(|&l| l as usize).collect(), t)
                    .expect("labels in range");
                let edges: EdgeLabeling = tuple_labeling(self.g, oriented, &c, open_only);
                found = preserver(&self.edge_perms, edges.labels()).is_none();
                !found
            });
            if found {
                Some(true)
            } else if exhausted {
                None
            } else {
                Some(false)
            }
        };
        match works(cover, &mut budget) {
            Some(true) => return Ok(Repair::Relabel),
            None => return Ok(Repair::Undetermined),
            Some(false) => {}
        }
        let flippable: Vec<usize> = (0..cover.len()).filter(|&i| cover.paths()[i].len() >= 2).collect();
        let mut complete = true;
        for mask in 1u64..1 << flippable.len() {
            let mut paths = cover.paths().to_vec();
            for (bit, &i) in flippable.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    paths[i] = paths[i].flipped();
                }
            }
            match works(&GraphoidalCover::new(paths), &mut budget) {
                Some(true) => return Ok(Repair::Reorient),
                None => {
                    complete = false;
                    break;
                }
                Some(false) => {}
            }
        }
        Ok(if complete { Repair::Impossible } else { Repair::Undetermined })
    }
}

fn scheme_name(open_only: bool) -> &'static str {
    if open_only {
        "open-scheme"
    } else {
        "general-scheme"
    }
}

fn bound_checks(r: &GraphoidalBoundsReport) -> [(&'static str, Option<bool>); 4] {
    [
        ("omega-index-bound", r.omega_index_bound),
        ("omega-index-equality", r.omega_index_equality),
        ("omega-number-bounds", r.omega_number_bounds),
        ("open-cover-bound", r.open_cover_bound),
    ]
}

fn describe(r: &GraphoidalBoundsReport) -> String {
    format!(
        "|ψ| = {}, D'(G) = {}, D(Ω) = {}, D'(Ω) = {}",
        r.cover_size,
        r.distinguishing_index.map_or("undefined".into(), |d| d.to_string()),
        r.omega_distinguishing_number,
        r.omega_distinguishing_index.map_or("undefined".into(), |d| d.to_string()),
    )
}

fn scan_host(g: &Graph) -> Result<Tally> {
    let aut = automorphisms(g)?;
    let g_index = defined(distinguishing_edge_labeling_with(g, &aut).map(|d| d.value))?;
    let (vertex_perms, edge_perms) = if g.order() >= 3 {
        (aut.non_identity().cloned().collect(), edge_action(g, &aut)?)
    } else {
        (Vec::new(), Vec::new())
    };
    let mut ctx = HostContext {
        g,
        g_index,
        vertex_perms,
        edge_perms,
        cache: HashMap::new(),
    };
    let mut tally = Tally::default();
    let mut failure = None;
    for_each_cover(g, DEFAULT_COVER_CAP, |paths| {
        if failure.is_none() {
            if let Err(e) = ctx.check_cover(paths, &mut tally) {
                failure = Some(e);
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}

fn check_eq(
    out: &mut Vec<Violation>,
    check: &str,
    g: &Graph,
    cover: Option<&GraphoidalCover>,
    observed: usize,
    expected: usize,
    what: &str,
) {
    if observed != expected {
        out.push(Violation {
            check: check.to_string(),
            graph6: g6(g),
            cover: cover.map(format_cover),
            observed: format!("{what} = {observed}, expected {expected}"),
        });
    }
}

/// Everything about the constructions that has an exact expected value.
fn check_constructions(violations: &mut Vec<Violation>, findings: &mut Vec<Finding>) -> Result<usize> {
    let mut instances = 0;

    for n in 3..=5 {
        let (g, psi) = construct_gap_instance(n)?;
        let om = omega(&g, &psi)?;
        instances += 1;
        check_eq(violations, "gap-instance", &g, Some(&psi), distinguishing_number(&g)?, 2, "D(G)");
        check_eq(violations, "gap-instance", &g, Some(&psi), distinguishing_index(&g)?, 2, "D'(G)");
        check_eq(violations, "gap-instance", &g, Some(&psi), distinguishing_number(&om)?, n, "D(Ω)");
        check_eq(violations, "gap-instance", &g, Some(&psi), distinguishing_index(&om)?, n, "D'(Ω)");
    }

    let mut order_notes = Vec::new();
    for (x, p) in SPIDER_PARAMETERS {
        let (g, psi) = construct_spider_instance(x, p, 1, 2)?;
        let om = omega(&g, &psi)?;
        instances += 1;
        check_eq(violations, "spider-instance", &g, Some(&psi), psi.len(), 1 + x * p, "|ψ|");
        let d = distinguishing_index(&om)?;
        check_eq(violations, "spider-instance", &g, Some(&psi), d, ceil_root(x, p), "D'(Ω)");
        if !are_isomorphic(&om, &corpus::spider(&vec![p; x])?) {
            violations.push(Violation {
                check: "spider-instance".into(),
                graph6: g6(&g),
                cover: Some(format_cover(&psi)),
                observed: "Ω is not the expected spider".into(),
            });
        }
        order_notes.push(format!("(x={x}, p={p}): n = {}, x(p+2) = {}", g.order(), x * (p + 2)));
    }
    findings.push(Finding {
        topic: "spider-order".into(),
        claim: "the spider construction has order n >= x(p+2)".into(),
        observed: format!("with t1 = 1, t2 = 2: {}", order_notes.join("; ")),
        graphs: Vec::new(),
    });

    for n in 3..=5 {
        let c = corpus::cycle(n)?;
        let whole = GraphoidalCover::new(vec![GraphoidalPath::new((0..n).chain([0]).collect())]);
        let om = omega(&c, &whole)?;
        instances += 1;
        check_eq(violations, "sharpness-lower", &c, Some(&whole), distinguishing_index(&c)?, 3, "D'(G)");
        check_eq(violations, "sharpness-lower", &c, Some(&whole), distinguishing_number(&om)?, 1, "D(Ω)");
    }
    let c3 = corpus::cycle(3)?;
    let edges = GraphoidalCover::single_edges(&c3);
    instances += 1;
    let d = distinguishing_number(&omega(&c3, &edges)?)?;
    check_eq(violations, "sharpness-upper", &c3, Some(&edges), d, edges.len(), "D(Ω)");

    // The sharpness example for open covers: paths v1v2, v2v3, v3v4, v4v5,
    // v5v6, v5v7v8, v8v9 (vertices 0..9).
    let host = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7), (7, 8)])?;
    let psi = GraphoidalCover::new(
        [&[0, 1][..], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[4, 6, 7], &[7, 8]]
            .iter()
            .map(|p| GraphoidalPath::new(p.to_vec()))
            .collect(),
    );
    let om = omega(&host, &psi)?;
    let (dg, dom) = (distinguishing_index(&host)?, distinguishing_number(&om)?);
    instances += 1;
    if dg > dom + 1 {
        violations.push(Violation {
            check: "open-cover-bound".into(),
            graph6: g6(&host),
            cover: Some(format_cover(&psi)),
            observed: format!("D'(G) = {dg}, D(Ω) = {dom}"),
        });
    }
    findings.push(Finding {
        topic: "open-cover-sharpness-example".into(),
        claim: "D'(G) = 2 and Ω is asymmetric with D(Ω) = 1, so D'(G) = D(Ω) + 1".into(),
        observed: format!(
            "reconstructed from the listed paths: G is the spider with legs 4, 1, 3, \
             |Aut(G)| = {}, D'(G) = {dg}, |Aut(Ω)| = {}, D(Ω) = {dom}; the bound holds{}",
            automorphisms(&host)?.order(),
            automorphisms(&om)?.order(),
            if dg == dom + 1 { " with equality" } else { " but is not attained" }
        ),
        graphs: vec![g6(&host)],
    });

    instances += check_gaps(violations, findings)?;
    Ok(instances)
}

/// Finds spider instances with `|D'(G) - D(Ω)| = i` for `i = 0..=3`.
fn check_gaps(violations: &mut Vec<Violation>, findings: &mut Vec<Finding>) -> Result<usize> {
    let mut grid = Vec::new();
    for x in 2..=5 {
        for p in 1..=2 {
            for t1 in 1..=3 {
                for t2 in 1..=3 {
                    if t1 != t2 {
                        grid.push((x, p, t1, t2));
                    }
                }
            }
        }
    }
    let values: Vec<(usize, usize)> = grid
        .par_iter()
        .map(|&(x, p, t1, t2)| -> Result<(usize, usize)> {
            let (g, psi) = construct_spider_instance(x, p, t1, t2)?;
            let om = omega(&g, &psi)?;
            Ok((distinguishing_index(&g)?, distinguishing_number(&om)?))
        })
        .collect::<Result<_>>()?;
    let mut realized = Vec::new();
    for i in 0..=3 {
        let hit = grid
            .iter()
            .zip(&values)
            .find(|(_, &(dg, dom))| dg.abs_diff(dom) == i);
        match hit {
            Some((&(x, p, t1, t2), &(dg, dom))) => realized.push(format!(
                "i={i}: spider(x={x}, p={p}, t1={t1}, t2={t2}) with D'(G) = {dg}, D(Ω) = {dom}"
            )),
            None => violations.push(Violation {
                check: "gap-realized".into(),
                graph6: String::new(),
                cover: None,
                observed: format!("no spider instance in the grid has gap {i}"),
            }),
        }
    }
    findings.push(Finding {
        topic: "gap-instances".into(),
        claim: "every gap |D'(G) - D(Ω)| = i >= 0 is realized by a spider instance".into(),
        observed: realized.join("; "),
        graphs: Vec::new(),
    });
    Ok(grid.len())
}

/// Bounds relating `D'(G)`, `D(Ω)`, `D'(Ω)` and `|ψ|` on every cover of every
/// connected graph of order at most `max_n`, the tuple labelings on the
/// same covers, and the exact values of the parametric constructions.
pub fn verify_graphoidal_theorems(max_n: usize) -> Result<VerificationReport> {
    let theorem = TheoremId::Graphoidal;
    check_order(theorem, max_n)?;
    let start = Instant::now();
    let hosts = connected_up_to(2, max_n)?;
    let tallies: Vec<Tally> = hosts.par_iter().map(|&g| scan_host(g)).collect::<Result<_>>()?;
    let mut tally = Tally::default();
    for t in tallies {
        tally.absorb(t);
    }
    let mut findings = vec![Finding {
        topic: "tuple-labeling-repairs".into(),
        claim: "the tuple labeling built from any distinguishing D(Ω)-labeling of Ω is a \
                distinguishing edge labeling of G"
            .into(),
        observed: format!(
            "{} of {} scheme applications failed with the first distinguishing labeling of Ω; \
             {} were repaired by another labeling of Ω, {} only by also reversing paths, \
             {} cannot be repaired, {} exceeded the repair budget",
            tally.failures,
            tally.applications,
            tally.relabel,
            tally.reorient,
            tally.impossible,
            tally.undetermined
        ),
        graphs: tally.examples.clone(),
    }];
    let mut violations = tally.violations;
    let instances = tally.instances + check_constructions(&mut violations, &mut findings)?;
    Ok(VerificationReport::new(
        theorem,
        max_n,
        instances,
        violations,
        findings,
        start.elapsed(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        assert_eq!(ceil_root(4, 2), 2);
        assert_eq!(ceil_root(5, 2), 3);
        assert_eq!(ceil_root(3, 1), 3);
        assert_eq!(ceil_root(1, 3), 1);
    }

    #[test]
    fn small_scan_only_fails_the_labeling_schemes() {
        let r = verify_graphoidal_theorems(4).unwrap();
        assert!(!r.passed());
        for v in &r.violations {
            assert!(v.check.ends_with("-scheme"), "{}", r.to_text());
        }
        assert!(r.violations.iter().any(|v| v.graph6 == "CN"));
        let repairs = r.findings.iter().find(|f| f.topic == "tuple-labeling-repairs").unwrap();
        assert!(repairs.observed.contains("0 cannot be repaired"), "{}", repairs.observed);
    }
}
