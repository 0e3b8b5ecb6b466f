//! Complete multipartite hosts, edge colorings and per-color adjacency views.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Marker for an edge that has not been colored yet.
pub const UNASSIGNED: u8 = u8::MAX;

/// Largest supported number of colors (`UNASSIGNED` is reserved).
pub const MAX_COLORS: usize = UNASSIGNED as usize;

const NO_EDGE: u32 = u32::MAX;

/// Iterate the set bits of a word slice in increasing order.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// Simple undirected graph on `0..n` stored as adjacency bit rows.
///
/// This is the view returned for a single color class; adjacency queries are
/// a single word lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl ClassGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        ClassGraph {
            n,
            words,
            rows: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = ClassGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        ClassGraph::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `uv`; returns false if it was already present.
    ///
    /// Panics on a loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
        self.edges -= 1;
        true
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Smallest common neighbour of `u` and `v`.
    pub fn common_neighbor(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = (self.row(u), self.row(v));
        a.iter()
            .zip(b)
            .enumerate()
            .find(|(_, (x, y))| *x & *y != 0)
            .map(|(w, (x, y))| w * 64 + (x & y).trailing_zeros() as usize)
    }
}

/// Host graph `K_{s1, s2, ..., sj}`.
///
/// Vertex ids are contiguous per part, part 0 first. Edges are all cross-part
/// pairs listed lexicographically by `(min id, max id)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartStructure {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    part_of: Vec<usize>,
    edges: Vec<(usize, usize)>,
    index: Vec<u32>,
}

impl PartStructure {
    pub fn new(part_sizes: &[usize]) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(invalid("part list is empty"));
        }
        if let Some(p) = part_sizes.iter().position(|&s| s == 0) {
            return Err(invalid(format!("part {p} has size 0")));
        }
        let mut offsets = Vec::with_capacity(part_sizes.len());
        let mut part_of = Vec::new();
        for (p, &size) in part_sizes.iter().enumerate() {
            offsets.push(part_of.len());
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let n = part_of.len();
        let mut edges = Vec::new();
        let mut index = vec![NO_EDGE; n * n];
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    let e = edges.len() as u32;
                    index[u * n + v] = e;
                    index[v * n + u] = e;
                    edges.push((u, v));
                }
            }
        }
        Ok(PartStructure {
            sizes: part_sizes.to_vec(),
            offsets,
            part_of,
            edges,
            index,
        })
    }

    /// `K_{j×t}`.
    pub fn uniform(parts: usize, size: usize) -> Result<Self> {
        PartStructure::new(&vec![size; parts])
    }

    /// `K_n` as `n` singleton parts.
    pub fn complete(n: usize) -> Result<Self> {
        PartStructure::uniform(n, 1)
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn part_vertices(&self, p: usize) -> Range<usize> {
        self.offsets[p]..self.offsets[p] + self.sizes[p]
    }

    /// Id of the `m`-th (0-based) vertex of part `p`.
    pub fn vertex(&self, p: usize, m: usize) -> usize {
        debug_assert!(m < self.sizes[p]);
        self.offsets[p] + m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return None;
        }
        match self.index[u * n + v] {
            NO_EDGE => None,
            e => Some(e as usize),
        }
    }

    pub fn is_cross(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn is_uniform(&self) -> bool {
        self.sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// Short label such as `K_{3,3,4}` or `K_{7x2}`.
    pub fn label(&self) -> String {
        if self.is_uniform() {
            if self.sizes[0] == 1 {
                format!("K_{}", self.part_count())
            } else {
                format!("K_{{{}x{}}}", self.part_count(), self.sizes[0])
            }
        } else {
            let s: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
            format!("K_{{{}}}", s.join(","))
        }
    }
}

/// Edge coloring of a host with `k` colors. Entries may be `UNASSIGNED`
/// while a coloring is being built; every public verifier demands a total one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    host: Arc<PartStructure>,
    colors: usize,
    assignment: Vec<u8>,
}

impl Coloring {
    pub fn new(host: Arc<PartStructure>, colors: usize) -> Result<Self> {
        if colors == 0 || colors > MAX_COLORS {
            return Err(invalid(format!(
                "color count {colors} outside 1..={MAX_COLORS}"
            )));
        }
        let assignment = vec![UNASSIGNED; host.edge_count()];
        Ok(Coloring {
            host,
            colors,
            assignment,
        })
    }

    /// Every edge gets `color_fn(u, v)` (called with `u < v`).
    pub fn from_fn<F>(host: Arc<PartStructure>, colors: usize, mut color_fn: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> u8,
    {
        let mut c = Coloring::new(host, colors)?;
        for e in 0..c.host.edge_count() {
            let (u, v) = c.host.edges()[e];
            c.set_index(e, color_fn(u, v))?;
        }
        Ok(c)
    }

    pub(crate) fn from_assignment(
        host: Arc<PartStructure>,
        colors: usize,
        assignment: Vec<u8>,
    ) -> Self {
        debug_assert_eq!(assignment.len(), host.edge_count());
        Coloring {
            host,
            colors,
            assignment,
        }
    }

    pub fn host(&self) -> &PartStructure {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<PartStructure> {
        &self.host
    }

    pub fn color_count(&self) -> usize {
        self.colors
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn set_index(&mut self, e: usize, c: u8) -> Result<()> {
        if c as usize >= self.colors {
            return Err(invalid(format!(
                "color {c} out of range for k={}",
                self.colors
            )));
        }
        self.assignment[e] = c;
        Ok(())
    }

    pub fn set(&mut self, u: usize, v: usize, c: u8) -> Result<()> {
        let e = self
            .host
            .edge_index(u, v)
            .ok_or_else(|| invalid(format!("({u}, {v}) is not a cross edge")))?;
        self.set_index(e, c)
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u8> {
        self.host
            .edge_index(u, v)
            .map(|e| self.assignment[e])
            .filter(|&c| c != UNASSIGNED)
    }

    pub fn is_total(&self) -> bool {
        !self.assignment.contains(&UNASSIGNED)
    }

    pub(crate) fn require_total(&self) -> Result<()> {
        match self.assignment.iter().position(|&c| c == UNASSIGNED) {
            None => Ok(()),
            Some(e) => {
                let (u, v) = self.host.edges()[e];
                Err(invalid(format!(
                    "coloring is partial: edge ({u}, {v}) unassigned"
                )))
            }
        }
    }

    /// The subgraph on all host vertices formed by the edges of color `c`.
    pub fn color_class(&self, c: usize) -> Result<ClassGraph> {
        if c >= self.colors {
            return Err(invalid(format!(
                "color {c} out of range for k={}",
                self.colors
            )));
        }
        let edges = self.host.edges();
        Ok(ClassGraph::from_edges(
            self.host.vertex_count(),
            self.assignment
                .iter()
                .zip(edges)
                .filter(|(&a, _)| a as usize == c)
                .map(|(_, &e)| e),
        ))
    }

    pub fn color_classes(&self) -> Vec<ClassGraph> {
        (0..self.colors)
            .map(|c| self.color_class(c).expect("in range"))
            .collect()
    }

    /// Swap two color labels everywhere.
    pub fn swap_colors(&mut self, a: u8, b: u8) {
        for c in self.assignment.iter_mut() {
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
    }
}

/// Monochromatic target for one color: a cycle `C_m` or a stripe `nK_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TargetSpec {
    Cycle(usize),
    Stripe(usize),
}

impl TargetSpec {
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(invalid(format!("cycle length {m} < 3")));
        }
        Ok(TargetSpec::Cycle(m))
    }

    pub fn stripe(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(invalid("stripe size must be at least 1"));
        }
        Ok(TargetSpec::Stripe(n))
    }
}

impl fmt::Display for TargetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetSpec::Cycle(m) => write!(f, "C{m}"),
            TargetSpec::Stripe(n) => write!(f, "M{n}"),
        }
    }
}

impl FromStr for TargetSpec {
    type Err = Error;

    fn from_str(token: &str) -> Result<Self> {
        let bad = |reason: &str| Error::TargetParse {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let t = token.trim();
        let mut chars = t.chars();
        let kind = chars.next().ok_or_else(|| bad("empty token"))?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected C<m> or M<n>"));
        }
        let value: usize = rest.parse().map_err(|_| bad("number out of range"))?;
        match kind {
            'C' => {
                if value < 3 {
                    Err(bad("cycle length below 3"))
                } else {
                    Ok(TargetSpec::Cycle(value))
                }
            }
            'M' => {
                if value < 1 {
                    Err(bad("stripe size below 1"))
                } else {
                    Ok(TargetSpec::Stripe(value))
                }
            }
            _ => Err(bad("expected C<m> or M<n>")),
        }
    }
}

impl Serialize for TargetSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `C3,C3,M2` style lists. Color `i` is paired with the `i`-th target.
pub fn parse_targets(text: &str) -> Result<Vec<TargetSpec>> {
    text.split(',').map(str::parse).collect()
}

pub fn format_targets(targets: &[TargetSpec]) -> String {
    targets
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
