//! Brute-force oracles sharing no code with the library detectors.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency matrix on `n <= 12` vertices.
#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Naive {
    pub fn new(n: usize) -> Self {
        Naive {
            n,
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Naive::new(n);
        for &(u, v) in edges {
            g.adj[u][v] = true;
            g.adj[v][u] = true;
        }
        g
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u][v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Size of a largest matching, by enumerating every matching: the lowest
    /// unmatched vertex either stays unmatched or pairs with a neighbour.
    pub fn matching_number(&self) -> usize {
        fn go(g: &Naive, used: &mut Vec<bool>, from: usize) -> usize {
            let Some(v) = (from..g.n).find(|&v| !used[v]) else {
                return 0;
            };
            used[v] = true;
            let mut best = go(g, used, v + 1);
            for u in v + 1..g.n {
                if g.adj[v][u] && !used[u] {
                    used[u] = true;
                    best = best.max(1 + go(g, used, v + 1));
                    used[u] = false;
                }
            }
            used[v] = false;
            best
        }
        go(self, &mut vec![false; self.n], 0)
    }

    /// Whether some sequence of `m` distinct vertices closes into a cycle.
    pub fn has_cycle(&self, m: usize) -> bool {
        fn go(g: &Naive, path: &mut Vec<usize>, m: usize) -> bool {
            let last = *path.last().unwrap();
            if path.len() == m {
                return g.adj[last][path[0]];
            }
            for w in 0..g.n {
                if g.adj[last][w] && !path.contains(&w) {
                    path.push(w);
                    if go(g, path, m) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (0..self.n).any(|s| go(self, &mut vec![s], m))
    }

    pub fn has_target(&self, target: &str) -> bool {
        let (kind, size) = target.split_at(1);
        let size: usize = size.parse().unwrap();
        match kind {
            "C" => self.has_cycle(size),
            "M" => self.matching_number() >= size,
            _ => panic!("target {target}"),
        }
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Naive {
    let mut g = Naive::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.adj[u][v] = true;
                g.adj[v][u] = true;
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cross edges of the complete multipartite graph with the given parts,
/// vertices numbered part by part.
pub fn multipartite_edges(parts: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let mut part_of = Vec::new();
    for (p, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, s));
    }
    let n = part_of.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    (n, edges)
}

/// Counts good colorings among all `k^E` colorings of the host.
pub fn count_good_colorings(parts: &[usize], targets: &[&str]) -> u64 {
    let (n, edges) = multipartite_edges(parts);
    let k = targets.len();
    let total = (k as u64).pow(edges.len() as u32);
    let mut good = 0;
    for code in 0..total {
        let mut classes = vec![Vec::new(); k];
        let mut x = code;
        for &e in &edges {
            classes[(x % k as u64) as usize].push(e);
            x /= k as u64;
        }
        if classes
            .iter()
            .zip(targets)
            .all(|(class, t)| !Naive::from_edges(n, class).has_target(t))
        {
            good += 1;
        }
    }
    good
}

/// All integer partitions of `n`, parts non-increasing.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
