//! Scans part sizes for the least t with K_{j×t} arrowing the targets.

use multiramsey::search::compute_mrn_search;
use multiramsey::{parse_targets, Budget, SearchConfig};

fn main() -> multiramsey::Result<()> {
    let config = SearchConfig {
        workers: 4,
        deterministic: true,
        ..SearchConfig::with_budget(Budget::nodes(50_000_000))
    };
    for (j, targets, range) in [
        (6, "C3,C3,M2", 1..=3),
        (7, "C3,C3,M2", 1..=2),
        (3, "C3,C4,M2", 2..=4),
    ] {
        let out = compute_mrn_search(j, &parse_targets(targets)?, range, &config)?;
        println!("j = {j} [{targets}]: {:?}", out.status);
        for step in &out.log {
            println!(
                "    t = {}: {:?} ({} nodes)",
                step.t, step.outcome.verdict, step.outcome.nodes_explored
            );
        }
    }
    Ok(())
}
