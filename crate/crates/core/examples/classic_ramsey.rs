//! Exhaustive arrowing search on complete graphs: R(C3, C3) = 6 and
//! R(C3, C4) = 7.

use multiramsey::{arrows_exhaustive, parse_targets, ArrowInstance, PartStructure, SearchConfig};

fn main() -> multiramsey::Result<()> {
    for (targets, n) in [("C3,C3", 5), ("C3,C3", 6), ("C3,C4", 6), ("C3,C4", 7)] {
        let inst = ArrowInstance::new(PartStructure::complete(n)?, parse_targets(targets)?)?;
        let out = arrows_exhaustive(&inst, &SearchConfig::default());
        println!(
            "{:<18} {:?} after {} nodes ({:?})",
            inst.describe(),
            out.verdict,
            out.nodes_explored,
            out.elapsed
        );
        if let Some(c) = &out.certificate {
            for color in 0..c.color_count() {
                let edges: Vec<_> = c.color_class(color)?.edges().collect();
                println!("    color {color}: {edges:?}");
            }
        }
    }
    Ok(())
}
