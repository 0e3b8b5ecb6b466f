//! Closed-form values checked against explicit colorings one part size
//! below and exhaustive search at the value itself.

use multiramsey::crosscheck::{cross_check, Query};
use multiramsey::Budget;

fn main() -> multiramsey::Result<()> {
    let queries = [
        Query::C3C3 { j: 6, n: 2 },
        Query::C3C3 { j: 7, n: 2 },
        Query::C3C3 { j: 8, n: 2 },
        Query::C3C3 { j: 9, n: 4 },
        Query::C3C3Multi {
            j: 6,
            n_list: vec![2, 2],
        },
        Query::C3C4 { j: 3, n: 2 },
        Query::C3C4 { j: 2, n: 3 },
    ];
    for q in &queries {
        let r = cross_check(q, Budget::nodes(20_000_000))?;
        println!(
            "{:<40} v = {:<3} {}",
            format!("{q:?}"),
            r.formula.value.to_string(),
            if r.consistent() {
                "consistent"
            } else {
                "CONFLICT"
            }
        );
        println!("    witness: {}", serde_json::to_string(&r.witness)?);
        println!("    search:  {}", serde_json::to_string(&r.search)?);
        if !r.flags.is_empty() {
            println!("    flags:   {}", r.flags.join(", "));
        }
    }
    Ok(())
}
