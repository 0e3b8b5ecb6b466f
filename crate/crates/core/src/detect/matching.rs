//! Maximum matching in general graphs (Edmonds' blossom shrinking).

use std::collections::VecDeque;

use crate::graph::ClassGraph;

const NONE: usize = usize::MAX;

/// Scratch space for one augmenting-path search.
struct Forest {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Forest {
    fn new(n: usize) -> Self {
        Forest {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used.fill(false);
        self.queue.clear();
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Grows an alternating tree from the free vertex `root`; returns the free
    /// endpoint of an augmenting path if one exists.
    fn find_path(&mut self, g: &ClassGraph, mate: &[usize], root: usize) -> Option<usize> {
        self.reset();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..g.vertex_count() {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn flip(&self, mate: &mut [usize], mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
}

/// A matching kept maximum while edges are added one at a time.
///
/// Adding an edge raises the maximum by at most one, and any augmenting path
/// for the old matching must use the new edge, so one round of searches from
/// the free vertices restores maximality.
#[derive(Clone, Debug)]
pub(crate) struct IncrementalMatching {
    mate: Vec<usize>,
    size: usize,
}

impl IncrementalMatching {
    pub fn new(n: usize) -> Self {
        IncrementalMatching {
            mate: vec![NONE; n],
            size: 0,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Call after `uv` was inserted into `g`. Returns true when the matching
    /// grew; in that case the caller may want the previous state for undo,
    /// which is why a snapshot is handed back.
    pub fn edge_added(&mut self, g: &ClassGraph, u: usize, v: usize) -> Option<Vec<usize>> {
        if self.mate[u] == NONE && self.mate[v] == NONE {
            let old = self.mate.clone();
            self.mate[u] = v;
            self.mate[v] = u;
            self.size += 1;
            return Some(old);
        }
        if 2 * (self.size + 1) > g.vertex_count() {
            return None;
        }
        let mut forest = Forest::new(g.vertex_count());
        for root in 0..g.vertex_count() {
            if self.mate[root] != NONE || g.degree(root) == 0 {
                continue;
            }
            if let Some(end) = forest.find_path(g, &self.mate, root) {
                let old = self.mate.clone();
                forest.flip(&mut self.mate, end);
                self.size += 1;
                return Some(old);
            }
        }
        None
    }

    pub fn restore(&mut self, snapshot: Vec<usize>) {
        self.mate = snapshot;
        self.size -= 1;
    }
}

/// Edges of a maximum matching, each as `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &ClassGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut mate = vec![NONE; n];
    // greedy start
    for (u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    let mut forest = Forest::new(n);
    for root in 0..n {
        if mate[root] == NONE && g.degree(root) > 0 {
            if let Some(end) = forest.find_path(g, &mate, root) {
                forest.flip(&mut mate, end);
            }
        }
    }
    (0..n)
        .filter(|&u| mate[u] != NONE && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect()
}

pub fn max_matching_size(g: &ClassGraph) -> usize {
    maximum_matching(g).len()
}
