//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! shown.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{partitions, random_graph, rng, Naive};
use multiramsey::detect::{is_good_coloring, max_matching_size, verify_coloring};
use multiramsey::formula::{mrn_formula_c3c3, Caveat, Mrn};
use multiramsey::search::{arrows_randomized, ArrowVerdict};
use multiramsey::witness::{
    witness_l5, witness_search_fallback, witness_t10, witness_t2, witness_t3, witness_t4,
    witness_t5t6, witness_t8, FallbackResult,
};
use multiramsey::{
    arrows_exhaustive, parse_targets, ArrowInstance, Budget, ClassGraph, Coloring, PartStructure,
    SearchConfig, SearchOutcome, TargetSpec,
};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn decide(parts: &[usize], targets: &str, config: &SearchConfig) -> (SearchOutcome, Duration) {
    let inst = ArrowInstance::new(
        PartStructure::new(parts).unwrap(),
        parse_targets(targets).unwrap(),
    )
    .unwrap();
    let start = Instant::now();
    let out = arrows_exhaustive(&inst, config);
    (out, start.elapsed())
}

fn expect_good(parts: &[usize], targets: &str, limit: Duration) -> Check {
    let (out, took) = decide(parts, targets, &SearchConfig::default());
    ensure(out.verdict == ArrowVerdict::NotArrows, || {
        format!("{parts:?} [{targets}]: {:?}", out.verdict)
    })?;
    let cert = out.certificate.as_ref().ok_or("no certificate")?;
    let t = parse_targets(targets).unwrap();
    ensure(verify_coloring(cert, &t).unwrap().is_good(), || {
        "certificate fails verification".into()
    })?;
    ensure(took < limit, || format!("{took:?} over {limit:?}"))?;
    Ok(format!(
        "good coloring in {} nodes, {:.3} ms",
        out.nodes_explored,
        took.as_secs_f64() * 1e3
    ))
}

fn expect_arrows(parts: &[usize], targets: &str, config: &SearchConfig, limit: Duration) -> Check {
    let (out, took) = decide(parts, targets, config);
    ensure(
        out.verdict == ArrowVerdict::Arrows && out.exhaustive,
        || {
            format!(
                "{parts:?} [{targets}]: {:?} after {} nodes",
                out.verdict, out.nodes_explored
            )
        },
    )?;
    ensure(took < limit, || format!("{took:?} over {limit:?}"))?;
    Ok(format!(
        "arrows in {} nodes, {:.3} ms",
        out.nodes_explored,
        took.as_secs_f64() * 1e3
    ))
}

fn c1_r33() -> Check {
    let a = expect_good(&[1; 5], "C3,C3", Duration::from_secs(1))?;
    let b = expect_arrows(
        &[1; 6],
        "C3,C3",
        &SearchConfig::default(),
        Duration::from_secs(1),
    )?;
    Ok(format!("K5 {a}; K6 {b}"))
}

fn c2_r34() -> Check {
    let a = expect_good(&[1; 6], "C3,C4", Duration::from_secs(60))?;
    let b = expect_arrows(
        &[1; 7],
        "C3,C4",
        &SearchConfig::default(),
        Duration::from_secs(60),
    )?;
    Ok(format!("K6 {a}; K7 {b}"))
}

fn c3_k334() -> Check {
    let config = SearchConfig {
        budget: Budget::nodes(1_000_000_000).with_time(Duration::from_secs(600)),
        symmetry: true,
        workers: 1,
        ..SearchConfig::default()
    };
    expect_arrows(&[3, 3, 4], "C3,C4", &config, Duration::from_secs(600))
}

fn c4_k6_one_stripe() -> Check {
    expect_arrows(
        &[1; 6],
        "C3,C3,M1",
        &SearchConfig::default(),
        Duration::from_secs(60),
    )
}

fn c5_witness_grid() -> Check {
    let start = Instant::now();
    let mut cells = 0;
    let mut check = |label: String, c: Coloring, targets: Vec<TargetSpec>| -> Result<(), String> {
        cells += 1;
        ensure(c.is_total(), || format!("{label}: partial coloring"))?;
        ensure(verify_coloring(&c, &targets).unwrap().is_good(), || {
            format!("{label}: bad")
        })
    };
    let c3c3 = |stripes: &[usize]| {
        let mut t = vec![TargetSpec::Cycle(3), TargetSpec::Cycle(3)];
        t.extend(stripes.iter().map(|&n| TargetSpec::Stripe(n)));
        t
    };
    for j in 2..=5 {
        for t in 1..=4 {
            for i in 1..=3 {
                check(
                    format!("t2({j},{t},{i})"),
                    witness_t2(j, t, i).unwrap(),
                    c3c3(&vec![1; i]),
                )?;
            }
        }
    }
    for n in 2..=6 {
        check(format!("t3({n})"), witness_t3(n).unwrap(), c3c3(&[n]))?;
    }
    for list in [vec![2, 2], vec![2, 3], vec![3, 3, 2]] {
        check(
            format!("t4({list:?})"),
            witness_t4(&list).unwrap(),
            c3c3(&list),
        )?;
    }
    for j in 8..=12 {
        check(format!("l5({j})"), witness_l5(j).unwrap(), c3c3(&[j - 4]))?;
    }
    for j in 7..=12 {
        for t in 1..=3 {
            // smallest n with (j-4)t <= 2n-1
            let green = (j - 4) * t;
            let n = (1..).find(|&n| green < 2 * n).unwrap();
            check(
                format!("t5t6({j},{t})"),
                witness_t5t6(j, t).unwrap(),
                c3c3(&[n]),
            )?;
        }
    }
    for n in 2..=8 {
        let t = vec![
            TargetSpec::Cycle(3),
            TargetSpec::Cycle(4),
            TargetSpec::Stripe(n),
        ];
        check(format!("t10({n})"), witness_t10(n).unwrap(), t)?;
    }
    for t in 1..=4 {
        let targets = vec![
            TargetSpec::Cycle(3),
            TargetSpec::Cycle(4),
            TargetSpec::Stripe(1),
        ];
        check(format!("t8({t})"), witness_t8(t).unwrap(), targets)?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || {
        format!("{took:?} over 10s")
    })?;
    Ok(format!(
        "{cells} cells good in {:.3} ms",
        took.as_secs_f64() * 1e3
    ))
}

fn c6_formula_points() -> Check {
    for (j, n, want) in [(7, 2, 2), (7, 3, 2), (8, 1, 1), (8, 2, 1), (8, 4, 2)] {
        let v = mrn_formula_c3c3(j, n).unwrap();
        ensure(v.value == Mrn::Finite(want), || {
            format!("({j},{n}) = {}, want {want}", v.value)
        })?;
        ensure(v.caveats.is_empty(), || {
            format!("({j},{n}) flagged {:?}", v.caveats)
        })?;
    }
    let a = mrn_formula_c3c3(9, 5).unwrap();
    ensure(a.caveats.contains(&Caveat::LemmaConflict), || {
        format!("(9,5) flags {:?}", a.caveats)
    })?;
    let b = mrn_formula_c3c3(9, 2).unwrap();
    ensure(
        b.caveats.contains(&Caveat::RawZero) || b.caveats.contains(&Caveat::LemmaConflict),
        || format!("(9,2) flags {:?}", b.caveats),
    )?;
    Ok(format!(
        "5 points exact; (9,5) {:?}; (9,2) {:?}",
        a.caveats, b.caveats
    ))
}

fn c7_fallback_k7() -> Check {
    let start = Instant::now();
    let targets = parse_targets("C3,C3,M2").unwrap();
    let found = witness_search_fallback(
        PartStructure::complete(7).unwrap(),
        targets.clone(),
        Budget::default(),
    )
    .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let FallbackResult::Found(c) = found else {
        return Err(format!("no coloring: {found:?}"));
    };
    ensure(is_good_coloring(&c, &targets).unwrap(), || {
        "certificate fails re-verification".into()
    })?;
    ensure(took < Duration::from_secs(60), || {
        format!("{took:?} over 60s")
    })?;
    Ok(format!(
        "good 3-coloring of K7 in {:.3} ms",
        took.as_secs_f64() * 1e3
    ))
}

fn c8_matching_oracle() -> Check {
    let mut r = rng(2024);
    let mut mismatches = 0;
    for _ in 0..200 {
        let n = r.random_range(1..=10);
        let p = r.random_range(0.1..0.9);
        let g: Naive = random_graph(&mut r, n, p);
        if max_matching_size(&ClassGraph::from_edges(n, g.edges())) != g.matching_number() {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok("200 graphs, 0 mismatches".into())
}

fn c9_pruning_soundness() -> Check {
    let mut instances = 0;
    let mut mismatches = Vec::new();
    for n in 1..=8 {
        for parts in partitions(n) {
            for targets in ["C3,C3", "C3,C4", "C3,M2", "C4,M2"] {
                let on = decide(&parts, targets, &SearchConfig::default()).0;
                let off = decide(
                    &parts,
                    targets,
                    &SearchConfig {
                        symmetry: false,
                        ..SearchConfig::default()
                    },
                )
                .0;
                instances += 1;
                if on.arrows().is_none() || on.arrows() != off.arrows() {
                    mismatches.push(format!("{parts:?} [{targets}]"));
                }
            }
        }
    }
    ensure(mismatches.is_empty(), || {
        format!("mismatches: {mismatches:?}")
    })?;
    Ok(format!("{instances} instances, 0 mismatches"))
}

fn c10_falsify() -> Check {
    let inst = ArrowInstance::new(
        PartStructure::uniform(7, 2).unwrap(),
        parse_targets("C3,C3,M2").unwrap(),
    )
    .unwrap();
    let out = arrows_randomized(&inst, 100_000, 1);
    ensure(out.counterexample.is_none(), || {
        "a good coloring was sampled".into()
    })?;
    Ok(format!(
        "none found in {} samples, {:.1} ms",
        out.samples_drawn,
        out.elapsed.as_secs_f64() * 1e3
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("R(C3,C3) = 6", c1_r33),
        ("R(C3,C4) = 7", c2_r34),
        ("K_{3,3,4} arrows (C3, C4)", c3_k334),
        ("K6 arrows (C3, C3, K2)", c4_k6_one_stripe),
        ("witness certification grid", c5_witness_grid),
        ("closed-form point values and flags", c6_formula_points),
        (
            "search finds a good coloring of K7 for (C3, C3, 2K2)",
            c7_fallback_k7,
        ),
        ("matching against brute force", c8_matching_oracle),
        ("symmetry pruning soundness", c9_pruning_soundness),
        ("random falsification on K_{7x2}", c10_falsify),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match result {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
