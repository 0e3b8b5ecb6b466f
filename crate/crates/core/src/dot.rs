//! Graphviz export. Each part becomes a cluster; each edge carries its color
//! index as `color=c` (0-based); uncolored edges are dotted.

use std::fmt::Write as _;

use crate::graph::Coloring;

pub fn to_dot(coloring: &Coloring) -> String {
    let host = coloring.host();
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", host.label());
    out.push_str("  node [shape=circle];\n");
    for p in 0..host.part_count() {
        let _ = writeln!(out, "  subgraph cluster_{p} {{");
        let _ = writeln!(out, "    label=\"X{}\";", p + 1);
        for v in host.part_vertices(p) {
            let _ = writeln!(out, "    {v};");
        }
        out.push_str("  }\n");
    }
    for (e, &(u, v)) in host.edges().iter().enumerate() {
        match coloring.assignment()[e] {
            crate::graph::UNASSIGNED => {
                let _ = writeln!(out, "  {u} -- {v} [style=dotted];");
            }
            c => {
                let _ = writeln!(out, "  {u} -- {v} [color={c}];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartStructure;
    use std::sync::Arc;

    #[test]
    fn lists_every_edge_once() {
        let host = Arc::new(PartStructure::new(&[1, 2]).unwrap());
        let c = Coloring::from_fn(host, 2, |u, _| u as u8 % 2).unwrap();
        let dot = to_dot(&c);
        assert!(dot.starts_with("graph \"K_{1,2}\" {"));
        assert_eq!(dot.matches(" -- ").count(), 2);
        assert!(dot.contains("0 -- 1 [color=0];"));
        assert!(dot.contains("subgraph cluster_1"));
    }
}
