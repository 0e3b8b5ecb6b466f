//! Monochromatic target detection and good-coloring verification.

mod cycles;
mod matching;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{ClassGraph, Coloring, TargetSpec};

pub(crate) use cycles::cycle_through_edge;
pub use cycles::find_cycle;
pub(crate) use matching::IncrementalMatching;
pub use matching::{max_matching_size, maximum_matching};

/// A concrete copy of a target inside a color class.
///
/// Cycles list their vertices in cycle order; stripes list `2n` endpoints,
/// consecutive pairs forming the edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub target: TargetSpec,
    pub vertices: Vec<usize>,
}

impl Embedding {
    /// Checks that every listed edge is in `class` and the vertices are
    /// distinct (pairwise disjoint edges for stripes).
    pub fn check(&self, class: &ClassGraph) -> Result<(), String> {
        let n = class.vertex_count();
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= n) {
            return Err("vertex out of range".into());
        }
        let mut seen = vec![false; n];
        for &v in vs {
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        match self.target {
            TargetSpec::Cycle(m) => {
                if vs.len() != m {
                    return Err(format!("cycle lists {} vertices, expected {m}", vs.len()));
                }
                for i in 0..m {
                    let (a, b) = (vs[i], vs[(i + 1) % m]);
                    if !class.has_edge(a, b) {
                        return Err(format!("missing cycle edge ({a}, {b})"));
                    }
                }
            }
            TargetSpec::Stripe(k) => {
                if vs.len() != 2 * k {
                    return Err(format!(
                        "stripe lists {} endpoints, expected {}",
                        vs.len(),
                        2 * k
                    ));
                }
                for pair in vs.chunks(2) {
                    if !class.has_edge(pair[0], pair[1]) {
                        return Err(format!("missing stripe edge ({}, {})", pair[0], pair[1]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Returns a copy of `target` inside `class`, if there is one.
pub fn contains_target(class: &ClassGraph, target: TargetSpec) -> Option<Embedding> {
    match target {
        TargetSpec::Cycle(m) => find_cycle(class, m).expect("TargetSpec cycles have m >= 3"),
        TargetSpec::Stripe(k) => {
            if class.edge_count() < k || 2 * k > class.vertex_count() {
                return None;
            }
            let m = maximum_matching(class);
            (m.len() >= k).then(|| Embedding {
                target,
                vertices: m[..k].iter().flat_map(|&(u, v)| [u, v]).collect(),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColorStatus {
    Found(Embedding),
    Absent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorReport {
    pub color: usize,
    pub target: TargetSpec,
    pub status: ColorStatus,
}

/// Per-color outcome of checking a total coloring against its targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub per_color: Vec<ColorReport>,
}

impl VerificationReport {
    /// Good means no color contains its own target.
    pub fn is_good(&self) -> bool {
        self.per_color
            .iter()
            .all(|c| c.status == ColorStatus::Absent)
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_good() {
            "good"
        } else {
            "bad"
        }
    }
}

#[derive(Serialize)]
struct ColorJson<'a> {
    color: usize,
    target: TargetSpec,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding: Option<&'a [usize]>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    verdict: &'static str,
    per_color: Vec<ColorJson<'a>>,
}

impl Serialize for VerificationReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ReportJson {
            verdict: self.verdict(),
            per_color: self
                .per_color
                .iter()
                .map(|c| match &c.status {
                    ColorStatus::Found(e) => ColorJson {
                        color: c.color,
                        target: c.target,
                        status: "found",
                        embedding: Some(&e.vertices),
                    },
                    ColorStatus::Absent => ColorJson {
                        color: c.color,
                        target: c.target,
                        status: "absent",
                        embedding: None,
                    },
                })
                .collect(),
        }
        .serialize(s)
    }
}

fn check_arity(coloring: &Coloring, targets: &[TargetSpec]) -> Result<()> {
    if targets.len() != coloring.color_count() {
        return Err(invalid(format!(
            "{} targets for a {}-coloring",
            targets.len(),
            coloring.color_count()
        )));
    }
    coloring.require_total()
}

/// Full per-color report for a total coloring.
pub fn verify_coloring(coloring: &Coloring, targets: &[TargetSpec]) -> Result<VerificationReport> {
    check_arity(coloring, targets)?;
    let per_color = targets
        .iter()
        .enumerate()
        .map(|(c, &target)| {
            let class = coloring.color_class(c)?;
            let status = match contains_target(&class, target) {
                Some(e) => {
                    debug_assert!(e.check(&class).is_ok());
                    ColorStatus::Found(e)
                }
                None => ColorStatus::Absent,
            };
            Ok(ColorReport {
                color: c,
                target,
                status,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport { per_color })
}

/// Same verdict as [`verify_coloring`], stopping at the first hit.
pub fn is_good_coloring(coloring: &Coloring, targets: &[TargetSpec]) -> Result<bool> {
    check_arity(coloring, targets)?;
    for (c, &t) in targets.iter().enumerate() {
        if contains_target(&coloring.color_class(c)?, t).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_targets, PartStructure};
    use std::sync::Arc;

    #[test]
    fn stripe_dispatch() {
        let star = ClassGraph::from_edges(6, (1..6).map(|v| (0, v)));
        assert!(contains_target(&star, TargetSpec::Stripe(2)).is_none());
        assert!(contains_target(&star, TargetSpec::Stripe(1)).is_some());
        let k6 = ClassGraph::complete(6);
        let e = contains_target(&k6, TargetSpec::Stripe(3)).unwrap();
        e.check(&k6).unwrap();
        assert_eq!(e.vertices.len(), 6);
    }

    #[test]
    fn all_red_k6_is_bad() {
        let host = Arc::new(PartStructure::complete(6).unwrap());
        let c = Coloring::from_fn(host, 2, |_, _| 0).unwrap();
        let r = verify_coloring(&c, &parse_targets("C3,C3").unwrap()).unwrap();
        assert!(!r.is_good());
        assert!(matches!(r.per_color[0].status, ColorStatus::Found(_)));
        assert_eq!(r.per_color[1].status, ColorStatus::Absent);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["verdict"], "bad");
        assert_eq!(json["per_color"][0]["status"], "found");
        assert_eq!(
            json["per_color"][0]["embedding"].as_array().unwrap().len(),
            3
        );
        assert!(json["per_color"][1].get("embedding").is_none());
    }

    #[test]
    fn two_pentagons_are_good() {
        let host = Arc::new(PartStructure::complete(5).unwrap());
        let c = Coloring::from_fn(host, 2, |u, v| u8::from(!matches!(v - u, 1 | 4))).unwrap();
        let targets = parse_targets("C3,C3").unwrap();
        assert!(verify_coloring(&c, &targets).unwrap().is_good());
        assert!(is_good_coloring(&c, &targets).unwrap());
    }

    #[test]
    fn arity_and_totality_enforced() {
        let host = Arc::new(PartStructure::complete(4).unwrap());
        let c = Coloring::from_fn(host.clone(), 2, |_, _| 0).unwrap();
        assert!(verify_coloring(&c, &parse_targets("C3").unwrap()).is_err());
        let partial = Coloring::new(host, 2).unwrap();
        assert!(verify_coloring(&partial, &parse_targets("C3,C3").unwrap()).is_err());
    }

    #[test]
    fn embedding_checker_rejects_forgeries() {
        let g = ClassGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let fake = Embedding {
            target: TargetSpec::Cycle(3),
            vertices: vec![0, 1, 2],
        };
        assert!(fake.check(&g).is_err());
        let overlapping = Embedding {
            target: TargetSpec::Stripe(2),
            vertices: vec![0, 1, 1, 2],
        };
        assert!(overlapping.check(&g).is_err());
        let ok = Embedding {
            target: TargetSpec::Stripe(2),
            vertices: vec![0, 1, 2, 3],
        };
        assert!(ok.check(&g).is_ok());
    }
}
