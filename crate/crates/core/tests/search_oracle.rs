mod common;

use std::sync::Arc;

use common::{count_good_colorings, multipartite_edges, partitions, Naive};
use multiramsey::search::{compute_mrn_search, ArrowVerdict, MrnStatus};
use multiramsey::{
    arrows_exhaustive, parse_targets, ArrowInstance, Budget, PartStructure, SearchConfig,
};

fn decide(parts: &[usize], targets: &str, config: &SearchConfig) -> multiramsey::SearchOutcome {
    let inst = ArrowInstance::new(
        PartStructure::new(parts).unwrap(),
        parse_targets(targets).unwrap(),
    )
    .unwrap();
    arrows_exhaustive(&inst, config)
}

/// The certificate, re-checked with the brute-force detectors.
fn oracle_good(outcome: &multiramsey::SearchOutcome, targets: &[&str]) -> bool {
    let c = outcome.certificate.as_ref().unwrap();
    let (n, edges) = multipartite_edges(c.host().part_sizes());
    targets.iter().enumerate().all(|(color, t)| {
        let class: Vec<_> = edges
            .iter()
            .zip(c.assignment())
            .filter(|&(_, &a)| a as usize == color)
            .map(|(&e, _)| e)
            .collect();
        !Naive::from_edges(n, &class).has_target(t)
    })
}

#[test]
fn k5_has_twelve_good_colorings() {
    assert_eq!(count_good_colorings(&[1; 5], &["C3", "C3"]), 12);
    assert_eq!(count_good_colorings(&[1; 6], &["C3", "C3"]), 0);
}

#[test]
fn verdicts_match_enumeration_on_tiny_hosts() {
    let two = [
        ["C3", "C3"],
        ["C3", "C4"],
        ["C3", "M2"],
        ["C4", "M2"],
        ["C4", "C4"],
        ["C5", "M2"],
    ];
    let three = [
        ["C3", "C3", "M1"],
        ["C3", "C4", "M1"],
        ["C3", "M2", "M1"],
        ["C3", "C3", "M2"],
    ];
    let mut checked = 0;
    for n in 2..=7 {
        for parts in partitions(n) {
            let edges = multipartite_edges(&parts).1.len();
            let mut cases: Vec<Vec<&str>> = Vec::new();
            if edges <= 16 {
                cases.extend(two.iter().map(|t| t.to_vec()));
            }
            if edges <= 10 {
                cases.extend(three.iter().map(|t| t.to_vec()));
            }
            for targets in cases {
                let spec = targets.join(",");
                let expected = count_good_colorings(&parts, &targets) == 0;
                for symmetry in [true, false] {
                    let config = SearchConfig {
                        symmetry,
                        ..SearchConfig::default()
                    };
                    let out = decide(&parts, &spec, &config);
                    assert_eq!(
                        out.arrows(),
                        Some(expected),
                        "{parts:?} [{spec}] symmetry={symmetry}"
                    );
                    if !expected {
                        assert!(oracle_good(&out, &targets));
                    }
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn k6_does_not_arrow_c3_c4() {
    let out = decide(&[1; 6], "C3,C4", &SearchConfig::default());
    assert_eq!(out.verdict, ArrowVerdict::NotArrows);
    assert!(oracle_good(&out, &["C3", "C4"]));
}

#[test]
fn workers_agree_with_single_thread() {
    for (parts, targets) in [
        (vec![1; 6], "C3,C3"),
        (vec![1; 7], "C3,C4"),
        (vec![1; 7], "C3,C3,M2"),
        (vec![3, 3, 4], "C3,C4"),
        (vec![2, 2, 2], "C3,C4,M2"),
    ] {
        let single = decide(&parts, targets, &SearchConfig::default());
        for workers in [2, 4] {
            let config = SearchConfig {
                workers,
                deterministic: true,
                ..SearchConfig::default()
            };
            let multi = decide(&parts, targets, &config);
            assert_eq!(multi.verdict, single.verdict, "{parts:?} [{targets}]");
            assert_eq!(
                multi.certificate, single.certificate,
                "{parts:?} [{targets}]"
            );
        }
    }
}

#[test]
fn seven_parts_two_stripes_resolved() {
    let targets = parse_targets("C3,C3,M2").unwrap();
    let out = compute_mrn_search(7, &targets, 1..=2, &SearchConfig::default()).unwrap();
    assert_eq!(out.status, MrnStatus::Resolved { t: 2 });
    let starved = SearchConfig::with_budget(Budget::nodes(10_000));
    let out = compute_mrn_search(7, &targets, 1..=2, &starved).unwrap();
    assert_eq!(out.status, MrnStatus::LowerBoundOnly { t_low: 2 });
}

#[test]
fn budget_exhaustion_is_inconclusive() {
    let out = decide(
        &[2; 7],
        "C3,C3,M3",
        &SearchConfig::with_budget(Budget::nodes(50_000)),
    );
    assert_eq!(out.verdict, ArrowVerdict::Inconclusive);
    assert!(out.budget_exhausted && !out.exhaustive);
    assert!(out.nodes_explored >= 50_000);
}

#[test]
fn shared_host_reused_across_instances() {
    let host = Arc::new(PartStructure::uniform(3, 3).unwrap());
    let a = ArrowInstance::new(host.clone(), parse_targets("C3,C4,M2").unwrap()).unwrap();
    let b = ArrowInstance::new(host, parse_targets("C3,C4,M3").unwrap()).unwrap();
    assert_eq!(
        arrows_exhaustive(&a, &SearchConfig::default()).arrows(),
        Some(false)
    );
    assert_eq!(
        arrows_exhaustive(&b, &SearchConfig::default()).arrows(),
        Some(false)
    );
}
