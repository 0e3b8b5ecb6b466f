use crate::error::{invalid, Result};
use crate::graph::{bits, ClassGraph, TargetSpec};

use super::Embedding;

/// Finds a cycle of exactly `m` vertices in `class`.
///
/// Triangles and 4-cycles go through neighbourhood intersections; longer
/// cycles use a depth-first walk from each vertex as the smallest cycle
/// member, which is exact for any `m`.
pub fn find_cycle(class: &ClassGraph, m: usize) -> Result<Option<Embedding>> {
    if m < 3 {
        return Err(invalid(format!("cycle length {m} < 3")));
    }
    let n = class.vertex_count();
    let vertices = match m {
        3 => find_triangle(class),
        4 => find_four_cycle(class),
        _ if m > n => None,
        _ => find_long_cycle(class, m),
    };
    Ok(vertices.map(|vertices| Embedding {
        target: TargetSpec::Cycle(m),
        vertices,
    }))
}

fn find_triangle(g: &ClassGraph) -> Option<Vec<usize>> {
    for u in 0..g.vertex_count() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            if let Some(w) = g.common_neighbor(u, v) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

fn find_four_cycle(g: &ClassGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for u in 0..n {
        for w in u + 1..n {
            let common: Vec<u64> = g.row(u).iter().zip(g.row(w)).map(|(a, b)| a & b).collect();
            let mut it = bits(&common);
            if let (Some(x), Some(y)) = (it.next(), it.next()) {
                return Some(vec![u, x, w, y]);
            }
        }
    }
    None
}

fn find_long_cycle(g: &ClassGraph, m: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut path = Vec::with_capacity(m);
    let mut on_path = vec![false; n];
    for s in 0..n {
        if g.degree(s) < 2 {
            continue;
        }
        path.clear();
        path.push(s);
        on_path[s] = true;
        let found = extend_cycle(g, s, m, &mut path, &mut on_path);
        on_path[s] = false;
        if found {
            return Some(path);
        }
    }
    None
}

/// Extends `path` (starting at `s`, all other members `> s`) to `m` vertices
/// closing back to `s`.
fn extend_cycle(
    g: &ClassGraph,
    s: usize,
    m: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let last = *path.last().unwrap();
    if path.len() == m {
        return g.has_edge(last, s);
    }
    let nexts: Vec<usize> = g
        .neighbors(last)
        .filter(|&x| x > s && !on_path[x])
        .collect();
    for x in nexts {
        // canonical direction: second vertex smaller than the last
        if path.len() == m - 1 && x < path[1] {
            continue;
        }
        path.push(x);
        on_path[x] = true;
        if extend_cycle(g, s, m, path, on_path) {
            return true;
        }
        on_path[x] = false;
        path.pop();
    }
    false
}

/// True if the edge `uv` (already present in `g`) lies on a cycle of
/// exactly `m` vertices.
pub(crate) fn cycle_through_edge(g: &ClassGraph, u: usize, v: usize, m: usize) -> bool {
    debug_assert!(g.has_edge(u, v));
    match m {
        3 => g.common_neighbor(u, v).is_some(),
        4 => {
            let ru = u / 64;
            let bu = 1u64 << (u % 64);
            g.neighbors(u).filter(|&w| w != v).any(|w| {
                g.row(w)
                    .iter()
                    .zip(g.row(v))
                    .enumerate()
                    .any(|(i, (a, b))| {
                        let mut x = a & b;
                        if i == ru {
                            x &= !bu;
                        }
                        x != 0
                    })
            })
        }
        _ => {
            let mut on_path = vec![false; g.vertex_count()];
            on_path[u] = true;
            on_path[v] = true;
            simple_path(g, v, u, m - 1, &mut on_path)
        }
    }
}

/// Is there a simple path of `len` edges from `from` to `to` avoiding the
/// vertices marked in `on_path` (except `to` at the very end)?
fn simple_path(g: &ClassGraph, from: usize, to: usize, len: usize, on_path: &mut [bool]) -> bool {
    if len == 1 {
        return g.has_edge(from, to);
    }
    let nexts: Vec<usize> = g.neighbors(from).filter(|&x| !on_path[x]).collect();
    for x in nexts {
        on_path[x] = true;
        let hit = simple_path(g, x, to, len - 1, on_path);
        on_path[x] = false;
        if hit {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Coloring, PartStructure};
    use std::sync::Arc;

    fn blowup_c5(t: usize) -> ClassGraph {
        let host = Arc::new(PartStructure::uniform(5, t).unwrap());
        let h = host.clone();
        let c = Coloring::from_fn(host, 2, |u, v| {
            let d = (h.part_of(v) + 5 - h.part_of(u)) % 5;
            u8::from(!(d == 1 || d == 4))
        })
        .unwrap();
        c.color_class(0).unwrap()
    }

    #[test]
    fn k22_has_four_cycle() {
        let g = ClassGraph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]);
        let e = find_cycle(&g, 4).unwrap().unwrap();
        assert!(e.check(&g).is_ok());
        assert!(find_cycle(&g, 3).unwrap().is_none());
    }

    #[test]
    fn c5_blowup_triangle_free() {
        let g = blowup_c5(2);
        assert_eq!(g.edge_count(), 20);
        assert!(find_cycle(&g, 3).unwrap().is_none());
        assert!(find_cycle(&g, 4).unwrap().is_some());
        assert!(find_cycle(&g, 5).unwrap().is_some());
    }

    #[test]
    fn star_has_no_triangle() {
        let g = ClassGraph::from_edges(6, (1..6).map(|v| (0, v)));
        assert!(find_cycle(&g, 3).unwrap().is_none());
    }

    #[test]
    fn short_length_is_an_error() {
        assert!(find_cycle(&ClassGraph::new(3), 2).is_err());
    }

    #[test]
    fn long_cycles_exact() {
        let c7 = ClassGraph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7)));
        for m in 3..=8 {
            let found = find_cycle(&c7, m).unwrap();
            assert_eq!(found.is_some(), m == 7, "m={m}");
            if let Some(e) = found {
                e.check(&c7).unwrap();
            }
        }
        let k8 = ClassGraph::complete(8);
        for m in 3..=8 {
            find_cycle(&k8, m).unwrap().unwrap().check(&k8).unwrap();
        }
    }

    #[test]
    fn through_edge() {
        let c6 = ClassGraph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6)));
        assert!(cycle_through_edge(&c6, 0, 1, 6));
        assert!(!cycle_through_edge(&c6, 0, 1, 5));
        assert!(!cycle_through_edge(&c6, 0, 1, 4));
        let mut g = ClassGraph::from_edges(5, [(0, 1), (1, 2), (2, 3)]);
        assert!(!cycle_through_edge(&g, 0, 1, 4));
        g.add_edge(3, 0);
        assert!(cycle_through_edge(&g, 0, 1, 4));
        assert!(cycle_through_edge(&g, 3, 0, 4));
        assert!(!cycle_through_edge(&g, 3, 0, 3));
    }
}
