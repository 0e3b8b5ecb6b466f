//! Symmetry of an arrowing instance and the lex-leader pruning it enables.
//!
//! The automorphisms used are vertex permutations that preserve the part
//! structure (swapping two vertices of one part, swapping two parts of equal
//! size) combined with permutations of colors whose targets coincide. Every
//! such map sends good colorings to good colorings. The search only keeps
//! colorings that are lexicographically no larger than their image under each
//! listed element; the lexicographic minimum of an orbit passes every such
//! test, so pruning the rest never changes the arrowing verdict, whichever
//! subset of the group is listed.

use serde::Serialize;

use super::ArrowInstance;

/// One group element: a vertex permutation plus a color permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryElement {
    pub vertex_perm: Vec<usize>,
    pub color_perm: Vec<u8>,
}

impl SymmetryElement {
    fn is_color_identity(&self) -> bool {
        self.color_perm
            .iter()
            .enumerate()
            .all(|(i, &c)| i == c as usize)
    }
}

/// The reductions applied to one instance.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Schedule {
    /// Groups of colors with identical targets.
    pub color_groups: Vec<Vec<usize>>,
    /// Groups of equal-size parts (each group has at least two parts).
    pub part_groups: Vec<Vec<usize>>,
    /// Parts whose vertices can be permuted among themselves (size >= 2).
    pub vertex_parts: Vec<usize>,
    pub elements: Vec<SymmetryElement>,
}

impl Schedule {
    pub fn colors_interchangeable(&self, a: usize, b: usize) -> bool {
        self.color_groups
            .iter()
            .any(|g| g.contains(&a) && g.contains(&b))
    }

    pub fn parts_interchangeable(&self, a: usize, b: usize) -> bool {
        self.part_groups
            .iter()
            .any(|g| g.contains(&a) && g.contains(&b))
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.is_empty()
    }
}

fn groups_by_key<K: PartialEq + Copy>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut groups: Vec<(K, Vec<usize>)> = Vec::new();
    for (i, &k) in keys.iter().enumerate() {
        match groups.iter_mut().find(|(g, _)| *g == k) {
            Some((_, members)) => members.push(i),
            None => groups.push((k, vec![i])),
        }
    }
    groups
        .into_iter()
        .map(|(_, m)| m)
        .filter(|m| m.len() > 1)
        .collect()
}

fn pairs(items: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    items
        .iter()
        .enumerate()
        .flat_map(move |(i, &a)| items[i + 1..].iter().map(move |&b| (a, b)))
}

/// Lists the symmetry used to prune the search on `instance`.
pub fn symmetry_reduction(instance: &ArrowInstance) -> Schedule {
    let host = instance.host();
    let n = host.vertex_count();
    let k = instance.targets().len();

    let color_groups = groups_by_key(instance.targets());
    let part_groups = groups_by_key(host.part_sizes());
    let vertex_parts: Vec<usize> = (0..host.part_count())
        .filter(|&p| host.part_sizes()[p] > 1)
        .collect();

    let identity_v: Vec<usize> = (0..n).collect();
    let identity_c: Vec<u8> = (0..k as u8).collect();

    let mut vertex_perms = Vec::new();
    for &p in &vertex_parts {
        let vs: Vec<usize> = host.part_vertices(p).collect();
        for (a, b) in pairs(&vs) {
            let mut perm = identity_v.clone();
            perm.swap(a, b);
            vertex_perms.push(perm);
        }
    }
    for group in &part_groups {
        for (p, q) in pairs(group) {
            let mut perm = identity_v.clone();
            for (a, b) in host.part_vertices(p).zip(host.part_vertices(q)) {
                perm.swap(a, b);
            }
            vertex_perms.push(perm);
        }
    }

    let mut color_perms = Vec::new();
    for group in &color_groups {
        for (a, b) in pairs(group) {
            let mut perm = identity_c.clone();
            perm.swap(a, b);
            color_perms.push(perm);
        }
    }

    let mut elements = Vec::new();
    for v in &vertex_perms {
        elements.push(SymmetryElement {
            vertex_perm: v.clone(),
            color_perm: identity_c.clone(),
        });
    }
    for c in &color_perms {
        elements.push(SymmetryElement {
            vertex_perm: identity_v.clone(),
            color_perm: c.clone(),
        });
        for v in &vertex_perms {
            elements.push(SymmetryElement {
                vertex_perm: v.clone(),
                color_perm: c.clone(),
            });
        }
    }

    Schedule {
        color_groups,
        part_groups,
        vertex_parts,
        elements,
    }
}

/// A group element rewritten over search positions.
#[derive(Clone, Debug)]
pub(crate) struct PositionMap {
    /// `source[q]`: the position whose color lands on `q` under the element.
    source: Vec<usize>,
    color_perm: Vec<u8>,
    /// Positions where the image can differ from the original, ascending.
    moved: Vec<usize>,
}

impl PositionMap {
    /// `position_of(u, v)` gives the search position of host edge `uv`.
    pub fn compile(
        element: &SymmetryElement,
        order: &[(usize, usize)],
        position_of: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut source = vec![usize::MAX; order.len()];
        for (p, &(u, v)) in order.iter().enumerate() {
            let (a, b) = (element.vertex_perm[u], element.vertex_perm[v]);
            source[position_of(a.min(b), a.max(b))] = p;
        }
        let recolors = !element.is_color_identity();
        let moved = (0..order.len())
            .filter(|&q| recolors || source[q] != q)
            .collect();
        PositionMap {
            source,
            color_perm: element.color_perm.clone(),
            moved,
        }
    }

    /// Compares the assigned prefix `x[0..=depth]` with its image.
    pub fn compare_prefix(&self, x: &[u8], depth: usize) -> LexState {
        for &q in &self.moved {
            if q > depth {
                break;
            }
            let src = self.source[q];
            if src > depth {
                return LexState::Open;
            }
            let own = x[q];
            let image = self.color_perm[x[src] as usize];
            if own < image {
                return LexState::Smaller;
            }
            if own > image {
                return LexState::Larger;
            }
        }
        LexState::Open
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum LexState {
    /// Strictly below the image: holds for every completion.
    Smaller,
    /// Strictly above: no completion can be the orbit minimum.
    Larger,
    /// Equal as far as both sides are determined.
    Open,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_targets, PartStructure};

    fn inst(parts: &[usize], targets: &str) -> ArrowInstance {
        ArrowInstance::new(
            PartStructure::new(parts).unwrap(),
            parse_targets(targets).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn color_groups() {
        let s = symmetry_reduction(&inst(&[1; 4], "C3,C3,M2"));
        assert!(s.colors_interchangeable(0, 1));
        assert!(!s.colors_interchangeable(0, 2));
        assert!(!s.colors_interchangeable(1, 2));
    }

    #[test]
    fn part_groups() {
        let s = symmetry_reduction(&inst(&[3, 3, 4], "C3,C4"));
        assert!(s.parts_interchangeable(0, 1));
        assert!(!s.parts_interchangeable(0, 2));
        assert_eq!(s.vertex_parts, vec![0, 1, 2]);
        assert!(s.color_groups.is_empty());
        // 3 + 3 + 6 transpositions and one part swap
        assert_eq!(s.elements.len(), 13);
    }

    #[test]
    fn complete_graph_full_symmetry() {
        let s = symmetry_reduction(&inst(&[1; 7], "C3,C4"));
        assert_eq!(s.part_groups, vec![(0..7).collect::<Vec<_>>()]);
        assert_eq!(s.elements.len(), 21);
    }

    #[test]
    fn elements_preserve_parts() {
        let i = inst(&[2, 2, 3], "C3,C3");
        let host = i.host();
        for e in symmetry_reduction(&i).elements {
            for &(u, v) in host.edges() {
                assert!(host.is_cross(e.vertex_perm[u], e.vertex_perm[v]));
            }
        }
    }
}
