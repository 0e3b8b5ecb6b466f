//! Maximum matchings in non-bipartite graphs, where odd cycles force the
//! blossom contraction.

use multiramsey::detect::maximum_matching;
use multiramsey::ClassGraph;

fn main() {
    let petersen = ClassGraph::from_edges(
        10,
        (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
    );
    let two_triangles = ClassGraph::from_edges(
        7,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 4),
        ],
    );
    let odd_cycle = ClassGraph::from_edges(9, (0..9).map(|i| (i, (i + 1) % 9)));

    for (name, g) in [
        ("petersen", petersen),
        ("two triangles", two_triangles),
        ("C9", odd_cycle),
    ] {
        let m = maximum_matching(&g);
        println!(
            "{name:<14} {} vertices, {} edges -> matching {} {:?}",
            g.vertex_count(),
            g.edge_count(),
            m.len(),
            m
        );
    }
}
