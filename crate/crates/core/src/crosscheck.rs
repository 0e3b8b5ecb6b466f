//! Consistency of a closed-form value `v` with the rest of the crate: a good
//! coloring must exist at part size `v - 1`, and no good coloring may exist
//! at part size `v`.

use std::sync::Arc;

use serde::Serialize;

use crate::detect::verify_coloring;
use crate::error::{invalid, Result};
use crate::formula::{
    mrn_formula_c3c3, mrn_formula_c3c3_multi, mrn_formula_c3c4, Caveat, Mrn, RamseyValue,
};
use crate::graph::{format_targets, Coloring, PartStructure, TargetSpec};
use crate::search::{arrows_exhaustive, ArrowInstance, ArrowVerdict, Budget, SearchConfig};
use crate::witness::{
    t5t6_stripe, witness_l5, witness_search_fallback, witness_t10, witness_t2, witness_t3,
    witness_t4, witness_t5t6, witness_t8, FallbackResult,
};

/// The value being checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Query {
    C3C3 { j: usize, n: usize },
    C3C3Multi { j: usize, n_list: Vec<usize> },
    C3C4 { j: usize, n: usize },
}

impl Query {
    pub fn j(&self) -> usize {
        match self {
            Query::C3C3 { j, .. } | Query::C3C3Multi { j, .. } | Query::C3C4 { j, .. } => *j,
        }
    }

    pub fn targets(&self) -> Vec<TargetSpec> {
        use TargetSpec::{Cycle, Stripe};
        match self {
            Query::C3C3 { n, .. } => vec![Cycle(3), Cycle(3), Stripe(*n)],
            Query::C3C3Multi { n_list, .. } => {
                let mut t = vec![Cycle(3), Cycle(3)];
                t.extend(n_list.iter().map(|&n| Stripe(n)));
                t
            }
            Query::C3C4 { n, .. } => vec![Cycle(3), Cycle(4), Stripe(*n)],
        }
    }

    pub fn formula(&self) -> Result<RamseyValue> {
        match self {
            Query::C3C3 { j, n } => mrn_formula_c3c3(*j, *n),
            Query::C3C3Multi { j, n_list } => mrn_formula_c3c3_multi(n_list, *j),
            Query::C3C4 { j, n } => mrn_formula_c3c4(*j, *n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum WitnessStatus {
    /// `v = 1`: the lower bound holds trivially.
    NotNeeded,
    Good {
        method: String,
        host: String,
    },
    /// The construction does not avoid the requested targets.
    Bad {
        method: String,
        host: String,
    },
    /// Neither a construction nor the search produced a good coloring.
    NotFound {
        host: String,
        exhaustive: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchStatus {
    /// Every coloring at part size `v` contains a target.
    Exhaustive {
        host: String,
        nodes: u64,
    },
    Inconclusive {
        host: String,
        nodes: u64,
    },
    /// A good coloring exists at part size `v`: the value is too small.
    Falsified {
        host: String,
        nodes: u64,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub query: Query,
    pub targets: String,
    pub formula: RamseyValue,
    pub witness: WitnessStatus,
    pub search: SearchStatus,
    /// Caveat codes from the formula plus any conflict found here.
    pub flags: Vec<String>,
}

impl CrossCheckReport {
    /// No conflict was detected (inconclusive searches are not conflicts).
    pub fn consistent(&self) -> bool {
        !matches!(
            self.witness,
            WitnessStatus::Bad { .. }
                | WitnessStatus::NotFound {
                    exhaustive: true,
                    ..
                }
        ) && !matches!(self.search, SearchStatus::Falsified { .. })
    }
}

/// A good coloring of `K_{j×t}` for the query's targets, from the explicit
/// families where one applies.
fn construction(query: &Query, t: usize) -> Option<(String, Result<Coloring>)> {
    let j = query.j();
    let (method, built) = match query {
        Query::C3C3 { .. } | Query::C3C3Multi { .. } if j <= 5 => {
            ("t2", witness_t2(j, t, query.targets().len() - 2))
        }
        Query::C3C3 { n, .. } if j == 6 && t + 1 == *n => ("t3", witness_t3(*n)),
        Query::C3C3Multi { n_list, .. }
            if j == 6 && t == n_list.iter().map(|n| n - 1).sum::<usize>() =>
        {
            ("t4", witness_t4(n_list))
        }
        Query::C3C3 { n, .. } if j >= 7 && t5t6_stripe(j, t) <= *n => ("t5t6", witness_t5t6(j, t)),
        Query::C3C3 { n, .. } if j >= 8 && t == 1 && (j - 2) / 2 < *n => ("l5", witness_l5(j)),
        Query::C3C4 { n, .. } if j == 3 && t == *n + 1 => ("t10", witness_t10(*n)),
        Query::C3C4 { .. } if j == 2 => ("t8", witness_t8(t)),
        _ => return None,
    };
    Some((method.to_string(), built))
}

fn certify_lower_bound(query: &Query, t: usize, budget: Budget) -> Result<WitnessStatus> {
    if t == 0 {
        return Ok(WitnessStatus::NotNeeded);
    }
    let targets = query.targets();
    let host = PartStructure::uniform(query.j(), t)?;
    let label = host.label();
    if let Some((method, built)) = construction(query, t) {
        let coloring = built?;
        let good = verify_coloring(&coloring, &targets)?.is_good();
        return Ok(if good {
            WitnessStatus::Good {
                method,
                host: label,
            }
        } else {
            WitnessStatus::Bad {
                method,
                host: label,
            }
        });
    }
    Ok(match witness_search_fallback(host, targets, budget)? {
        FallbackResult::Found(_) => WitnessStatus::Good {
            method: "search".into(),
            host: label,
        },
        FallbackResult::NotFound { exhaustive } => WitnessStatus::NotFound {
            host: label,
            exhaustive,
        },
    })
}

fn search_at(query: &Query, t: usize, budget: Budget) -> Result<SearchStatus> {
    let host = Arc::new(PartStructure::uniform(query.j(), t)?);
    let label = host.label();
    let inst = ArrowInstance::new(host, query.targets())?;
    let out = arrows_exhaustive(&inst, &SearchConfig::with_budget(budget));
    let nodes = out.nodes_explored;
    Ok(match out.verdict {
        ArrowVerdict::Arrows => SearchStatus::Exhaustive { host: label, nodes },
        ArrowVerdict::NotArrows => SearchStatus::Falsified { host: label, nodes },
        ArrowVerdict::Inconclusive => SearchStatus::Inconclusive { host: label, nodes },
    })
}

/// Checks the closed-form value for `query` against constructions and search.
/// `budget` applies separately to the fallback witness search and to the
/// arrowing search.
pub fn cross_check(query: &Query, budget: Budget) -> Result<CrossCheckReport> {
    if query.j() < 2 {
        return Err(invalid("need j >= 2"));
    }
    let formula = query.formula()?;
    let mut flags: Vec<String> = formula
        .caveats
        .iter()
        .map(|c| Caveat::code(*c).to_string())
        .collect();
    let (witness, search) = match formula.value {
        Mrn::Finite(v) => {
            let v = v as usize;
            (
                certify_lower_bound(query, v - 1, budget)?,
                search_at(query, v, budget)?,
            )
        }
        Mrn::Infinite => {
            // any part size must admit a good coloring; spot-check one
            let t = query
                .targets()
                .iter()
                .filter_map(|t| match t {
                    TargetSpec::Stripe(n) => Some(*n),
                    _ => None,
                })
                .max()
                .unwrap_or(1);
            (
                certify_lower_bound(query, t, budget)?,
                SearchStatus::Skipped {
                    reason: "value is infinite".into(),
                },
            )
        }
    };
    if matches!(
        witness,
        WitnessStatus::Bad { .. }
            | WitnessStatus::NotFound {
                exhaustive: true,
                ..
            }
    ) {
        flags.push("LOWER_BOUND_CONFLICT".into());
    }
    if matches!(search, SearchStatus::Falsified { .. }) {
        flags.push("FORMULA_CONFLICT".into());
    }
    Ok(CrossCheckReport {
        targets: format_targets(&query.targets()),
        query: query.clone(),
        formula,
        witness,
        search,
        flags,
    })
}
