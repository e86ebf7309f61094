//! Named graphs.
//!
//! Vertex numbering of the families:
//! - `complete(n)`: `0..n`.
//! - `path(n)`: `0 - 1 - ... - (n-1)`.
//! - `cycle(n)`: the path plus the edge `{0, n-1}`.
//! - `star(n)`: `K_{1,n}`, hub `0`, leaves `1..=n`.
//! - `complete_bipartite(p, q)`: sides `0..p` and `p..p+q`.
//! - `spider(l1, l2, ...)`: body `0`, then each leg in turn, numbered outward.
//! - `petersen`: outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
//! - `octahedron`: `K_{2,2,2}` with antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
//! - `beineke_1` .. `beineke_9`: the minimal graphs that are not line graphs.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("catalog graphs are well formed")
}

pub fn complete(n: usize) -> Result<Graph> {
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &e)
}

pub fn path(n: usize) -> Result<Graph> {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg("a cycle needs at least 3 vertices"));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &e)
}

pub fn star(n: usize) -> Result<Graph> {
    let e: Vec<_> = (1..=n).map(|i| (0, i)).collect();
    Graph::from_edges(n + 1, &e)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    let e: Vec<_> = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect();
    Graph::from_edges(p + q, &e)
}

pub fn spider(legs: &[usize]) -> Result<Graph> {
    let mut e = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(next, &e)
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

pub fn octahedron() -> Graph {
    let e: Vec<_> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2)
        .collect();
    build(6, &e)
}

/// Description, order and edge list.
type Entry = (&'static str, usize, &'static [(usize, usize)]);

const BEINEKE: [Entry; 9] = [
    ("claw K_{1,3}", 4, &[(0, 1), (0, 2), (0, 3)]),
    (
        "K_{2,3} with an edge inside the 3-side",
        5,
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)],
    ),
    (
        "K_5 minus an edge",
        5,
        &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    ),
    (
        "two triangles on a common edge, a pendant at each far apex",
        6,
        &[(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)],
    ),
    (
        "5-cycle plus a vertex joined to three consecutive cycle vertices",
        6,
        &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)],
    ),
    (
        "K_4 plus a vertex joined to two of its vertices, with a pendant",
        6,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (1, 5), (2, 3), (2, 5), (4, 5)],
    ),
    (
        "two triangles sharing a vertex with a further triangle and chord",
        6,
        &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)],
    ),
    (
        "wheel W_5 (hub 5 on the 5-cycle 0..5)",
        6,
        &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5), (4, 5)],
    ),
    (
        "two adjacent hubs joined to a 4-path and to each other",
        6,
        &[(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4), (3, 5), (4, 5)],
    ),
];

/// The nine minimal non-line graphs, `beineke_1` first.
pub fn beineke_graphs() -> &'static [Graph] {
    static GRAPHS: OnceLock<Vec<Graph>> = OnceLock::new();
    GRAPHS.get_or_init(|| BEINEKE.iter().map(|&(_, n, e)| build(n, e)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    /// `None` for parametric families.
    pub order: Option<usize>,
    pub description: String,
}

/// Deterministic catalog listing: families first, then fixed graphs.
pub fn list() -> Vec<CatalogEntry> {
    let family = |name: &str, description: &str| CatalogEntry {
        name: name.to_string(),
        order: None,
        description: description.to_string(),
    };
    let mut out = vec![
        family("complete(n)", "complete graph K_n"),
        family("path(n)", "path on n vertices"),
        family("cycle(n)", "cycle on n >= 3 vertices"),
        family("star(n)", "star K_{1,n}"),
        family("complete_bipartite(p,q)", "complete bipartite graph K_{p,q}"),
        family("spider(l1,...,lk)", "legs of the given lengths joined at one body vertex"),
        CatalogEntry {
            name: "petersen".into(),
            order: Some(10),
            description: "Petersen graph".into(),
        },
        CatalogEntry {
            name: "octahedron".into(),
            order: Some(6),
            description: "octahedron K_{2,2,2}, the line graph of K_4".into(),
        },
    ];
    for (i, &(description, n, _)) in BEINEKE.iter().enumerate() {
        out.push(CatalogEntry {
            name: format!("beineke_{}", i + 1),
            order: Some(n),
            description: description.to_string(),
        });
    }
    out
}

fn valid_names() -> String {
    list()
        .into_iter()
        .map(|e| e.name)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Looks up a catalog graph such as `cycle(5)`, `complete_bipartite(4,4)`,
/// `petersen` or `beineke_3`.
pub fn get(name: &str) -> Result<Graph> {
    let unknown = || Error::Catalog {
        name: name.to_string(),
        valid: valid_names(),
    };
    let compact: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, args) = match compact.split_once('(') {
        Some((head, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            let args = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|a| a.parse::<usize>().map_err(|_| unknown()))
                    .collect::<Result<Vec<_>>>()?
            };
            (head.to_string(), Some(args))
        }
        None => (compact.clone(), None),
    };
    match (head.as_str(), args.as_deref()) {
        ("complete", Some(&[n])) => complete(n),
        ("path", Some(&[n])) => path(n),
        ("cycle", Some(&[n])) => cycle(n),
        ("star", Some(&[n])) => star(n),
        ("complete_bipartite", Some(&[p, q])) => complete_bipartite(p, q),
        ("spider", Some(legs)) => spider(legs),
        ("petersen", None) => Ok(petersen()),
        ("octahedron", None) => Ok(octahedron()),
        (other, None) => {
            let k: usize = other
                .strip_prefix("beineke_")
                .and_then(|k| k.parse().ok())
                .filter(|k| (1..=9).contains(k))
                .ok_or_else(unknown)?;
            Ok(beineke_graphs()[k - 1].clone())
        }
        _ => Err(unknown()),
    }
}
