//! K_{3,3,4} arrows (C3, C4): node counts with and without symmetry pruning,
//! and the same search spread over worker threads.

use std::time::Instant;

use multiramsey::search::symmetry_reduction;
use multiramsey::{arrows_exhaustive, parse_targets, ArrowInstance, PartStructure, SearchConfig};

fn main() -> multiramsey::Result<()> {
    let inst = ArrowInstance::new(PartStructure::new(&[3, 3, 4])?, parse_targets("C3,C4")?)?;
    let schedule = symmetry_reduction(&inst);
    println!(
        "{}: {} group elements (part groups {:?})",
        inst.describe(),
        schedule.elements.len(),
        schedule.part_groups
    );

    let configs = [
        (
            "no symmetry",
            SearchConfig {
                symmetry: false,
                ..SearchConfig::default()
            },
        ),
        ("symmetry", SearchConfig::default()),
        (
            "symmetry, 4 workers",
            SearchConfig {
                workers: 4,
                ..SearchConfig::default()
            },
        ),
    ];
    for (name, config) in configs {
        let start = Instant::now();
        let out = arrows_exhaustive(&inst, &config);
        println!(
            "{name:<22} {:?} {:>9} nodes {:?}",
            out.verdict,
            out.nodes_explored,
            start.elapsed()
        );
    }
    Ok(())
}
