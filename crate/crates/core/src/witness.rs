//! Explicit lower-bound colorings.
//!
//! Each constructor returns a total coloring of a complete multipartite host
//! that avoids every target in its own color; [`WitnessFamily::targets`]
//! names the targets each family is certified against.
//!
//! Parts are 0-based here: "part 0" is the first part `X_1`.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{Coloring, PartStructure, TargetSpec};
use crate::search::{arrows_exhaustive, ArrowInstance, ArrowVerdict, Budget, SearchConfig};

const RED: u8 = 0;
const BLUE: u8 = 1;
const GREEN: u8 = 2;

/// Color of the pair of parts `(a, b)` (both `< 5`) in the two-pentagon
/// split of `K_5`: red along the cycle 0-1-2-3-4, blue along 0-2-4-1-3.
fn pentagon_color(a: usize, b: usize) -> u8 {
    match (b + 5 - a) % 5 {
        1 | 4 => RED,
        _ => BLUE,
    }
}

/// Red and blue blow-ups of the two complementary 5-cycles, restricted to
/// `part_count <= 5` parts of size `t`. Both classes are triangle-free.
pub fn c5_blowup_pair(part_count: usize, t: usize) -> Result<Coloring> {
    if !(2..=5).contains(&part_count) {
        return Err(invalid(format!(
            "part count {part_count} outside 2..=5 (K_6 has no triangle-free 2-coloring)"
        )));
    }
    let host = Arc::new(PartStructure::uniform(part_count, t)?);
    let h = host.clone();
    Coloring::from_fn(host, 2, |u, v| pentagon_color(h.part_of(u), h.part_of(v)))
}

/// `c5_blowup_pair` with `extra_colors` empty stripe colors appended.
pub fn witness_t2(parts: usize, t: usize, extra_colors: usize) -> Result<Coloring> {
    if extra_colors == 0 {
        return Err(invalid("need at least one stripe color"));
    }
    if parts > 5 {
        return Err(invalid(format!(
            "{parts} parts: only hosts with at most 5 parts split into two pentagon blow-ups"
        )));
    }
    let base = c5_blowup_pair(parts, t)?;
    Ok(Coloring::from_assignment(
        base.host_arc().clone(),
        2 + extra_colors,
        base.assignment().to_vec(),
    ))
}

/// On `K_{6×(n-1)}`: part 5 joined to everything in green
/// (`K_{n-1, 5(n-1)}`, maximum matching `n - 1`), parts 0..5 split by
/// `c5_blowup_pair`.
pub fn witness_t3(n: usize) -> Result<Coloring> {
    if n < 2 {
        return Err(invalid(
            "n must be at least 2 (for n = 1 the host would be empty)",
        ));
    }
    witness_t4(&[n])
}

/// On `K_{6×T}` with `T = Σ(n_i - 1)`: part 5 is cut into consecutive
/// blocks of sizes `n_i - 1`; block `i` is joined to all of parts 0..5 in
/// color `i + 2`. Colors 0 and 1 are the pentagon blow-ups on parts 0..5.
pub fn witness_t4(n_list: &[usize]) -> Result<Coloring> {
    if n_list.is_empty() {
        return Err(invalid("stripe list is empty"));
    }
    if n_list.contains(&0) {
        return Err(invalid("stripe sizes must be at least 1"));
    }
    let t: usize = n_list.iter().map(|n| n - 1).sum();
    if t == 0 {
        return Err(invalid(
            "all stripe sizes are 1, so the host would be empty",
        ));
    }
    let host = Arc::new(PartStructure::uniform(6, t)?);
    // block_color[m] for the m-th vertex of part 5
    let block_color: Vec<u8> = n_list
        .iter()
        .enumerate()
        .flat_map(|(i, &n)| std::iter::repeat_n(GREEN + i as u8, n - 1))
        .collect();
    let h = host.clone();
    Coloring::from_fn(host, 2 + n_list.len(), |u, v| {
        let (pu, pv) = (h.part_of(u), h.part_of(v));
        if pv == 5 {
            block_color[v - h.vertex(5, 0)]
        } else {
            pentagon_color(pu, pv)
        }
    })
}

/// On `K_j`, `j >= 8`: red star at 0, blue star from 1 to `2..j`, green
/// clique on `2..j` (maximum matching `⌊(j-2)/2⌋ <= j - 5`).
pub fn witness_l5(j: usize) -> Result<Coloring> {
    if j < 8 {
        return Err(invalid(format!("j = {j} < 8")));
    }
    let host = Arc::new(PartStructure::complete(j)?);
    Coloring::from_fn(host, 3, |u, _| match u {
        0 => RED,
        1 => BLUE,
        _ => GREEN,
    })
}

/// On `K_{j×t}`, `j >= 7`. Green is the complete multipartite graph on parts
/// `4..j`. On parts 0..4, red is the path blow-up 0-1-2-3 and blue the path
/// 2-0-3-1; every green-side vertex is red to parts 0 and 3 and blue to
/// parts 1 and 2. Neither red nor blue has a triangle: red never joins
/// parts 0 and 3, blue never joins 1 and 2.
pub fn witness_t5t6(j: usize, t: usize) -> Result<Coloring> {
    if j < 7 {
        return Err(invalid(format!("j = {j} < 7")));
    }
    let host = Arc::new(PartStructure::uniform(j, t)?);
    let h = host.clone();
    Coloring::from_fn(host, 3, |u, v| {
        let (a, b) = (h.part_of(u), h.part_of(v));
        match (a, b) {
            (4.., _) => GREEN,
            (0, 1) | (1, 2) | (2, 3) => RED,
            (0, 2) | (0, 3) | (1, 3) => BLUE,
            (0 | 3, 4..) => RED,
            (1 | 2, 4..) => BLUE,
            _ => unreachable!("parts ({a}, {b})"),
        }
    })
}

/// Smallest stripe the green class of `witness_t5t6(j, t)` avoids:
/// `(j-4)t` green vertices hold at most `⌊(j-4)t/2⌋` disjoint edges.
pub fn t5t6_stripe(j: usize, t: usize) -> usize {
    (j - 4) * t / 2 + 1
}

/// On `K_{3×(n+1)}` with `a`, `b` the first two vertices of part 2: green
/// joins the rest of part 2 to parts 0 and 1 (`K_{n-1, 2(n+1)}`), blue is
/// the two stars `a`–part 0 and `b`–part 1, red is everything else and is
/// bipartite (`part 0 + a` against `part 1 + b`).
pub fn witness_t10(n: usize) -> Result<Coloring> {
    if n < 2 {
        return Err(invalid("n must be at least 2"));
    }
    let host = Arc::new(PartStructure::uniform(3, n + 1)?);
    let a = host.vertex(2, 0);
    let b = host.vertex(2, 1);
    let h = host.clone();
    Coloring::from_fn(host, 3, |u, v| match (h.part_of(u), v) {
        (0, v) if v == a => BLUE,
        (1, v) if v == b => BLUE,
        (_, v) if h.part_of(v) == 2 && v != a && v != b => GREEN,
        _ => RED,
    })
}

/// `K_{2×t}` all red, blue and green empty.
pub fn witness_t8(t: usize) -> Result<Coloring> {
    let host = Arc::new(PartStructure::uniform(2, t)?);
    Coloring::from_fn(host, 3, |_, _| RED)
}

#[derive(Clone, Debug)]
pub enum FallbackResult {
    Found(Coloring),
    /// `exhaustive` is true when the search proved no good coloring exists.
    NotFound {
        exhaustive: bool,
    },
}

/// Good coloring found by exhaustive search, for hosts where no explicit
/// construction applies.
pub fn witness_search_fallback(
    host: PartStructure,
    targets: Vec<TargetSpec>,
    budget: Budget,
) -> Result<FallbackResult> {
    let inst = ArrowInstance::new(host, targets)?;
    let out = arrows_exhaustive(&inst, &SearchConfig::with_budget(budget));
    Ok(match out.verdict {
        ArrowVerdict::NotArrows => FallbackResult::Found(
            out.certificate
                .expect("certificate accompanies a good verdict"),
        ),
        ArrowVerdict::Arrows => FallbackResult::NotFound { exhaustive: true },
        ArrowVerdict::Inconclusive => FallbackResult::NotFound { exhaustive: false },
    })
}

/// A witness construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum WitnessFamily {
    C5Pair {
        parts: usize,
        t: usize,
    },
    T2 {
        parts: usize,
        t: usize,
        extra: usize,
    },
    T3 {
        n: usize,
    },
    T4 {
        n_list: Vec<usize>,
    },
    L5 {
        j: usize,
    },
    T5T6 {
        j: usize,
        t: usize,
    },
    T10 {
        n: usize,
    },
    T8 {
        t: usize,
    },
}

impl WitnessFamily {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessFamily::C5Pair { .. } => "c5pair",
            WitnessFamily::T2 { .. } => "t2",
            WitnessFamily::T3 { .. } => "t3",
            WitnessFamily::T4 { .. } => "t4",
            WitnessFamily::L5 { .. } => "l5",
            WitnessFamily::T5T6 { .. } => "t5t6",
            WitnessFamily::T10 { .. } => "t10",
            WitnessFamily::T8 { .. } => "t8",
        }
    }

    pub fn build(&self) -> Result<Coloring> {
        match self {
            WitnessFamily::C5Pair { parts, t } => c5_blowup_pair(*parts, *t),
            WitnessFamily::T2 { parts, t, extra } => witness_t2(*parts, *t, *extra),
            WitnessFamily::T3 { n } => witness_t3(*n),
            WitnessFamily::T4 { n_list } => witness_t4(n_list),
            WitnessFamily::L5 { j } => witness_l5(*j),
            WitnessFamily::T5T6 { j, t } => witness_t5t6(*j, *t),
            WitnessFamily::T10 { n } => witness_t10(*n),
            WitnessFamily::T8 { t } => witness_t8(*t),
        }
    }

    /// The targets the family avoids, one per color. Stripe colors of `t2`
    /// and `t8` are empty, so `M1` (the strongest stripe) is listed.
    pub fn targets(&self) -> Vec<TargetSpec> {
        use TargetSpec::{Cycle, Stripe};
        match self {
            WitnessFamily::C5Pair { .. } => vec![Cycle(3), Cycle(3)],
            WitnessFamily::T2 { extra, .. } => {
                let mut v = vec![Cycle(3), Cycle(3)];
                v.extend(std::iter::repeat_n(Stripe(1), *extra));
                v
            }
            WitnessFamily::T3 { n } => vec![Cycle(3), Cycle(3), Stripe(*n)],
            WitnessFamily::T4 { n_list } => {
                let mut v = vec![Cycle(3), Cycle(3)];
                v.extend(n_list.iter().map(|&n| Stripe(n)));
                v
            }
            WitnessFamily::L5 { j } => vec![Cycle(3), Cycle(3), Stripe(j - 4)],
            WitnessFamily::T5T6 { j, t } => vec![Cycle(3), Cycle(3), Stripe(t5t6_stripe(*j, *t))],
            WitnessFamily::T10 { n } => vec![Cycle(3), Cycle(4), Stripe(*n)],
            WitnessFamily::T8 { .. } => vec![Cycle(3), Cycle(4), Stripe(1)],
        }
    }
}
