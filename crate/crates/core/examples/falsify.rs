//! Random sampling as a quick sanity check. Finding a good coloring refutes
//! arrowing; finding none proves nothing.

use multiramsey::search::arrows_randomized;
use multiramsey::{parse_targets, ArrowInstance, PartStructure};

fn main() -> multiramsey::Result<()> {
    let cases = [
        (vec![1; 5], "C3,C3"),
        (vec![2; 5], "C3,C3,M1"),
        (vec![2; 7], "C3,C3,M2"),
    ];
    for (parts, targets) in cases {
        let inst = ArrowInstance::new(PartStructure::new(&parts)?, parse_targets(targets)?)?;
        let out = arrows_randomized(&inst, 100_000, 42);
        let result = if out.counterexample.is_some() {
            "good coloring found"
        } else {
            "none found"
        };
        println!(
            "{:<24} {result} after {} samples",
            inst.describe(),
            out.samples_drawn
        );
    }
    Ok(())
}
