use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{PartStructure, TargetSpec};

use super::{arrows_exhaustive, ArrowInstance, ArrowVerdict, SearchConfig, SearchOutcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MrnStatus {
    /// Arrows exhaustively at `t`, and `t = 1` or a good coloring exists at `t - 1`.
    Resolved { t: usize },
    /// The value is at least `t_low`; nothing sharper could be settled.
    LowerBoundOnly { t_low: usize },
    /// Every part size in the range has a good coloring.
    NoArrowingFound { from: usize, to: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct MrnStep {
    pub t: usize,
    pub outcome: SearchOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct MrnOutcome {
    #[serde(flatten)]
    pub status: MrnStatus,
    pub log: Vec<MrnStep>,
}

/// Scans part sizes upward looking for the smallest `t` such that
/// `K_{j×t}` arrows the targets.
pub fn compute_mrn_search(
    parts: usize,
    targets: &[TargetSpec],
    t_range: RangeInclusive<usize>,
    config: &SearchConfig,
) -> Result<MrnOutcome> {
    if t_range.is_empty() || *t_range.start() == 0 {
        return Err(invalid(
            "part size range must be non-empty and start at 1 or more",
        ));
    }
    if parts == 0 {
        return Err(invalid("need at least one part"));
    }
    let search = |t: usize| -> Result<MrnStep> {
        let inst = ArrowInstance::new(PartStructure::uniform(parts, t)?, targets.to_vec())?;
        Ok(MrnStep {
            t,
            outcome: arrows_exhaustive(&inst, config),
        })
    };

    let mut log: Vec<MrnStep> = Vec::new();
    let mut best_good: Option<usize> = None;
    let mut all_good = true;
    for t in t_range.clone() {
        let step = search(t)?;
        let verdict = step.outcome.verdict;
        log.push(step);
        match verdict {
            ArrowVerdict::NotArrows => best_good = Some(t),
            ArrowVerdict::Inconclusive => all_good = false,
            ArrowVerdict::Arrows => {
                if t > 1 && t == *t_range.start() {
                    let below = search(t - 1)?;
                    if below.outcome.verdict == ArrowVerdict::NotArrows {
                        best_good = Some(t - 1);
                    }
                    log.insert(0, below);
                }
                let status = if t == 1 || best_good == Some(t - 1) {
                    MrnStatus::Resolved { t }
                } else {
                    MrnStatus::LowerBoundOnly {
                        t_low: best_good.map_or(1, |g| g + 1),
                    }
                };
                return Ok(MrnOutcome { status, log });
            }
        }
    }
    let status = if all_good {
        MrnStatus::NoArrowingFound {
            from: *t_range.start(),
            to: *t_range.end(),
        }
    } else {
        MrnStatus::LowerBoundOnly {
            t_low: best_good.map_or(1, |g| g + 1),
        }
    };
    Ok(MrnOutcome { status, log })
}
