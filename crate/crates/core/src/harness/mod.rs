//! Exhaustive verification scans.
//!
//! Each scan checks one family of statements on every small graph (or
//! cover, or tree) and returns a [`VerificationReport`]. Instances are
//! processed in parallel on the current rayon pool and merged in
//! enumeration order, so reports are identical across runs and thread counts.

mod graphoidal;
mod scans;

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};

pub use graphoidal::verify_graphoidal_theorems;
pub use scans::{
    gamma_exceptional_graphs, verify_delta_bounds, verify_line_graph_index_bound,
    verify_line_graph_number, verify_tree_theorems,
};

/// A check that failed, with enough data to replay the instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<String>,
    pub observed: String,
}

/// An empirical observation reported next to the statement it concerns,
/// without affecting the verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub topic: String,
    pub claim: String,
    pub observed: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub graphs: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub max_n: usize,
    pub instances: usize,
    pub violations: Vec<Violation>,
    pub findings: Vec<Finding>,
    pub verdict: Verdict,
    /// Excluded from serialization so reports compare byte for byte.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub(crate) fn new(
        theorem: TheoremId,
        max_n: usize,
        instances: usize,
        violations: Vec<Violation>,
        findings: Vec<Finding>,
        elapsed: Duration,
    ) -> Self {
        let verdict = if violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            theorem: theorem.id().to_string(),
            max_n,
            instances,
            violations,
            findings,
            verdict,
            elapsed,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self, include_timing: bool) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if include_timing {
            value["elapsed_ms"] = serde_json::json!(self.elapsed.as_millis() as u64);
        }
        serde_json::to_string_pretty(&value).expect("report serializes")
    }

    /// One row per violation and finding after a summary row.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let row = |w: &mut csv::Writer<Vec<u8>>, fields: [&str; 6]| {
            w.write_record(fields).expect("in-memory csv");
        };
        row(&mut w, ["kind", "theorem", "check", "graph6", "cover", "observed"]);
        let summary = format!(
            "instances={} violations={} findings={}",
            self.instances,
            self.violations.len(),
            self.findings.len()
        );
        let verdict = if self.passed() { "pass" } else { "fail" };
        row(&mut w, ["summary", &self.theorem, verdict, "", "", &summary]);
        for v in &self.violations {
            let cover = v.cover.as_deref().unwrap_or("");
            row(&mut w, ["violation", &self.theorem, &v.check, &v.graph6, cover, &v.observed]);
        }
        for f in &self.findings {
            let observed = format!("{} (claim: {})", f.observed, f.claim);
            row(&mut w, ["finding", &self.theorem, &f.topic, &f.graphs.join(" "), "", &observed]);
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{} (max n {}): {verdict}, {} instances, {} violations",
            self.theorem,
            self.max_n,
            self.instances,
            self.violations.len()
        );
        for v in &self.violations {
            let _ = write!(out, "  violation [{}] {}: {}", v.check, v.graph6, v.observed);
            if let Some(c) = &v.cover {
                let _ = write!(out, " cover {}", c.trim_end().replace('\n', " | "));
            }
            out.push('\n');
        }
        for f in &self.findings {
            let _ = writeln!(out, "  finding [{}] {}", f.topic, f.observed);
            let _ = writeln!(out, "    claim: {}", f.claim);
            if !f.graphs.is_empty() {
                let _ = writeln!(out, "    graphs: {}", f.graphs.join(" "));
            }
        }
        out
    }
}

/// The statement families the harness can scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `D(L(G)) = D'(G)` away from the graphs where lifting fails.
    LineGraphNumber,
    /// `D'(L(G)) <= 3`, and `D'(H) <= 3` for claw-free `H`.
    LineGraphIndexBound,
    /// `D' <= Δ` and `D' <= Δ - 1` with their exceptions.
    DeltaBounds,
    /// Tree bounds and the family with `D' = D + 1`.
    Trees,
    /// Bounds, constructions and gaps for graphoidal covers.
    Graphoidal,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::LineGraphNumber,
        TheoremId::LineGraphIndexBound,
        TheoremId::DeltaBounds,
        TheoremId::Trees,
        TheoremId::Graphoidal,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::LineGraphNumber => "thm-2-3",
            TheoremId::LineGraphIndexBound => "thm-2-5",
            TheoremId::DeltaBounds => "delta-bounds",
            TheoremId::Trees => "trees",
            TheoremId::Graphoidal => "graphoidal",
        }
    }

    pub fn max_order(self) -> usize {
        match self {
            TheoremId::LineGraphNumber => 7,
            TheoremId::LineGraphIndexBound | TheoremId::DeltaBounds => 6,
            TheoremId::Trees => 10,
            TheoremId::Graphoidal => 5,
        }
    }

    pub fn default_order(self) -> usize {
        match self {
            TheoremId::LineGraphNumber => 6,
            TheoremId::LineGraphIndexBound => 5,
            TheoremId::DeltaBounds => 6,
            TheoremId::Trees => 9,
            TheoremId::Graphoidal => 5,
        }
    }

    pub fn run(self, max_n: usize) -> Result<VerificationReport> {
        match self {
            TheoremId::LineGraphNumber => verify_line_graph_number(max_n),
            TheoremId::LineGraphIndexBound => verify_line_graph_index_bound(max_n),
            TheoremId::DeltaBounds => verify_delta_bounds(max_n),
            TheoremId::Trees => verify_tree_theorems(max_n),
            TheoremId::Graphoidal => verify_graphoidal_theorems(max_n),
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = TheoremId::ALL.iter().map(|t| t.id()).collect();
                Error::arg(format!("unknown theorem id `{s}`; expected one of {}", ids.join(", ")))
            })
    }
}

pub(crate) fn check_order(theorem: TheoremId, max_n: usize) -> Result<()> {
    if max_n > theorem.max_order() {
        return Err(Error::UnsupportedSize {
            what: "scan order",
            actual: max_n,
            limit: theorem.max_order(),
        });
    }
    Ok(())
}

pub(crate) fn g6(g: &Graph) -> String {
    encode_graph6(g).expect("scanned graphs are small")
}

pub(crate) fn violation(check: &str, g: &Graph, observed: String) -> Violation {
    Violation {
        check: check.to_string(),
        graph6: g6(g),
        cover: None,
        observed,
    }
}
