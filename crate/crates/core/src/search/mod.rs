//! Deciding arrowing by exhaustive search, plus randomized falsification and
//! a scan for the smallest arrowing part size.

mod engine;
mod mrn;
mod random;
pub mod symmetry;

use std::sync::Arc;
use std::time::Duration;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{format_targets, Coloring, PartStructure, TargetSpec, MAX_COLORS};

pub use engine::arrows_exhaustive;
pub use mrn::{compute_mrn_search, MrnOutcome, MrnStatus, MrnStep};
pub use random::{arrows_randomized, RandomOutcome};
pub use symmetry::{symmetry_reduction, Schedule, SymmetryElement};

/// Host plus one target per color: "does every coloring contain some
/// target in its own color?"
#[derive(Clone, Debug)]
pub struct ArrowInstance {
    host: Arc<PartStructure>,
    targets: Vec<TargetSpec>,
}

impl ArrowInstance {
    pub fn new(host: impl Into<Arc<PartStructure>>, targets: Vec<TargetSpec>) -> Result<Self> {
        if targets.is_empty() {
            return Err(invalid("at least one target is required"));
        }
        if targets.len() > MAX_COLORS {
            return Err(invalid(format!("at most {MAX_COLORS} colors")));
        }
        Ok(ArrowInstance {
            host: host.into(),
            targets,
        })
    }

    pub fn host(&self) -> &PartStructure {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<PartStructure> {
        &self.host
    }

    pub fn targets(&self) -> &[TargetSpec] {
        &self.targets
    }

    pub fn color_count(&self) -> usize {
        self.targets.len()
    }

    pub fn describe(&self) -> String {
        format!(
            "{} -> [{}]",
            self.host.label(),
            format_targets(&self.targets)
        )
    }
}

/// Node and wall-clock limits; the search stops at whichever comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    pub fn with_time(mut self, t: Duration) -> Self {
        self.max_time = Some(t);
        self
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            max_time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(100_000_000)
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub budget: Budget,
    /// Apply lex-leader symmetry pruning.
    pub symmetry: bool,
    pub workers: usize,
    /// With several workers, still return the certificate a single worker
    /// would find.
    pub deterministic: bool,
    /// Depth at which the tree is cut into shards for the workers.
    pub split_depth: Option<usize>,
    /// Print nodes/sec and a depth histogram to stderr about once a second.
    pub progress: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Budget::default(),
            symmetry: true,
            workers: 1,
            deterministic: false,
            split_depth: None,
            progress: false,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: Budget) -> Self {
        SearchConfig {
            budget,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrowVerdict {
    /// Every coloring contains a target (tree exhausted).
    Arrows,
    /// A good coloring exists; see the certificate.
    NotArrows,
    /// Budget ran out first.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: ArrowVerdict,
    pub certificate: Option<Coloring>,
    pub nodes_explored: u64,
    pub exhaustive: bool,
    pub budget_exhausted: bool,
    pub elapsed: Duration,
    /// Nodes per depth (index = number of colored edges before the node).
    pub depth_histogram: Vec<u64>,
}

impl SearchOutcome {
    /// `Some(true)` arrows, `Some(false)` good coloring found, `None` unknown.
    pub fn arrows(&self) -> Option<bool> {
        match self.verdict {
            ArrowVerdict::Arrows => Some(true),
            ArrowVerdict::NotArrows => Some(false),
            ArrowVerdict::Inconclusive => None,
        }
    }
}

#[derive(Serialize)]
pub(crate) struct CertificateJson<'a> {
    parts: &'a [usize],
    colors: usize,
    assignment: &'a [u8],
}

impl<'a> From<&'a Coloring> for CertificateJson<'a> {
    fn from(c: &'a Coloring) -> Self {
        CertificateJson {
            parts: c.host().part_sizes(),
            colors: c.color_count(),
            assignment: c.assignment(),
        }
    }
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    verdict: ArrowVerdict,
    arrows: Option<bool>,
    exhaustive: bool,
    budget_exhausted: bool,
    nodes_explored: u64,
    elapsed_ms: u128,
    certificate: Option<CertificateJson<'a>>,
}

impl Serialize for SearchOutcome {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OutcomeJson {
            verdict: self.verdict,
            arrows: self.arrows(),
            exhaustive: self.exhaustive,
            budget_exhausted: self.budget_exhausted,
            nodes_explored: self.nodes_explored,
            elapsed_ms: self.elapsed.as_millis(),
            certificate: self.certificate.as_ref().map(CertificateJson::from),
        }
        .serialize(s)
    }
}
