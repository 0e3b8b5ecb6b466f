//! Builds one coloring from every witness family and verifies it against
//! the targets the family is meant to avoid.

use multiramsey::detect::{max_matching_size, verify_coloring};
use multiramsey::graph::format_targets;
use multiramsey::witness::WitnessFamily;

fn main() -> multiramsey::Result<()> {
    let families = [
        WitnessFamily::C5Pair { parts: 5, t: 2 },
        WitnessFamily::T2 {
            parts: 4,
            t: 3,
            extra: 2,
        },
        WitnessFamily::T3 { n: 4 },
        WitnessFamily::T4 {
            n_list: vec![3, 3, 2],
        },
        WitnessFamily::L5 { j: 10 },
        WitnessFamily::T5T6 { j: 9, t: 2 },
        WitnessFamily::T10 { n: 5 },
        WitnessFamily::T8 { t: 3 },
    ];
    for family in families {
        let coloring = family.build()?;
        let targets = family.targets();
        let report = verify_coloring(&coloring, &targets)?;
        let sizes: Vec<usize> = (0..coloring.color_count())
            .map(|c| coloring.color_class(c).map(|g| g.edge_count()))
            .collect::<Result<_, _>>()?;
        let last = coloring.color_class(coloring.color_count() - 1)?;
        println!(
            "{:<7} {:<12} [{}]  {}  class sizes {:?}, last class matching {}",
            family.name(),
            coloring.host().label(),
            format_targets(&targets),
            report.verdict(),
            sizes,
            max_matching_size(&last),
        );
    }
    Ok(())
}
