//! Enumeration of cycle graphs and of small graphs in the image of ξ_μ.

use std::collections::BTreeMap;

use super::graph::{CanonicalKey, StableGraph};
use super::partition::partitions_of;

/// Which valence condition cycle vertices must meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CycleStability {
    /// Every genus-0 vertex carries at least one leg (valence >= 3).
    #[default]
    Stable,
    /// Bare valence-2 vertices on the cycle are allowed.
    Prestable,
}

/// Genus-1 cycles of rational vertices with legs labeled 1..=l, cycle length
/// at most `max_cycle_len`, one representative per isomorphism class.
pub fn enumerate_cycle_graphs(
    l: usize,
    max_cycle_len: usize,
    stability: CycleStability,
) -> Vec<StableGraph> {
    let mut found: BTreeMap<CanonicalKey, StableGraph> = BTreeMap::new();
    for c in 1..=max_cycle_len {
        let edges = cycle_edges(c);
        for assignment in assignments(l, c) {
            let mut counts = vec![0usize; c];
            for &v in &assignment {
                counts[v] += 1;
            }
            if stability == CycleStability::Stable && counts.contains(&0) {
                continue;
            }
            let legs = assignment
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i as u32 + 1))
                .collect();
            let Ok(graph) = StableGraph::prestable(vec![0; c], edges.clone(), legs) else {
                continue;
            };
            if stability == CycleStability::Stable && !graph.is_stable() {
                continue;
            }
            found.entry(graph.canonical_form()).or_insert(graph);
        }
    }
    found.into_values().collect()
}

fn cycle_edges(c: usize) -> Vec<(usize, usize)> {
    if c == 1 {
        return vec![(0, 0)];
    }
    (0..c).map(|i| (i, (i + 1) % c)).collect()
}

/// All maps {0..n} -> {0..k}.
fn assignments(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0..k).map(move |v| {
                    let mut b = a.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    out
}

/// A rooted tree of vertex genera.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeShape {
    pub genus: u32,
    pub children: Vec<TreeShape>,
}

impl TreeShape {
    pub fn total_genus(&self) -> u32 {
        self.genus + self.children.iter().map(TreeShape::total_genus).sum::<u32>()
    }

    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    pub fn num_vertices(&self) -> usize {
        1 + self.children.iter().map(TreeShape::num_vertices).sum::<usize>()
    }
}

/// Stable rooted trees of total genus `h` and depth at most `depth`, where
/// the root also carries one edge to its parent. Rational vertices need at
/// least two children; leaves have positive genus.
pub fn tree_shapes(h: u32, depth: usize) -> Vec<TreeShape> {
    let mut out = Vec::new();
    for root in 0..=h {
        let rest = h - root;
        if rest == 0 {
            if root > 0 {
                out.push(TreeShape {
                    genus: root,
                    children: vec![],
                });
            }
            continue;
        }
        if depth == 0 {
            continue;
        }
        let min_children = if root == 0 { 2 } else { 1 };
        for parts in partitions_of(rest) {
            if parts.len() < min_children {
                continue;
            }
            for children in child_multisets(&parts, depth - 1) {
                out.push(TreeShape {
                    genus: root,
                    children,
                });
            }
        }
    }
    out.sort();
    out
}

// One shape per part, non-decreasing among equal parts to avoid repeats.
fn child_multisets(parts: &[u32], depth: usize) -> Vec<Vec<TreeShape>> {
    let mut out = vec![Vec::<TreeShape>::new()];
    for (i, &p) in parts.iter().enumerate() {
        let shapes = tree_shapes(p, depth);
        let mut next = Vec::new();
        for prefix in out {
            for s in &shapes {
                if i > 0 && parts[i - 1] == p && prefix.last().is_some_and(|last| s < last) {
                    continue;
                }
                let mut v = prefix.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Graphs in the image of ξ_μ with cycle length at most `max_cycle_len` and
/// trees of depth at most `max_depth`, deduplicated up to isomorphism.
pub fn z_graphs(mu: &[u32], max_cycle_len: usize, max_depth: usize) -> Vec<StableGraph> {
    let l = mu.len();
    let shape_lists: Vec<Vec<TreeShape>> = mu.iter().map(|&h| tree_shapes(h, max_depth)).collect();
    let mut found: BTreeMap<CanonicalKey, StableGraph> = BTreeMap::new();
    for c in 1..=max_cycle_len.min(l) {
        for choice in product(&shape_lists) {
            for assignment in assignments(l, c) {
                // every rational cycle vertex needs a tree for stability
                if (0..c).any(|v| !assignment.contains(&v)) {
                    continue;
                }
                let graph = assemble(c, &choice, &assignment);
                found.entry(graph.canonical_form()).or_insert(graph);
            }
        }
    }
    found.into_values().collect()
}

fn product(lists: &[Vec<TreeShape>]) -> Vec<Vec<&TreeShape>> {
    let mut out = vec![Vec::new()];
    for list in lists {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<&TreeShape>| {
                list.iter().map(move |s| {
                    let mut v = prefix.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
    }
    out
}

fn assemble(c: usize, trees: &[&TreeShape], attach: &[usize]) -> StableGraph {
    let mut genera = vec![0u32; c];
    let mut edges = cycle_edges(c);
    fn place(
        shape: &TreeShape,
        parent: usize,
        genera: &mut Vec<u32>,
        edges: &mut Vec<(usize, usize)>,
    ) {
        let v = genera.len();
        genera.push(shape.genus);
        edges.push((parent, v));
        for child in &shape.children {
            place(child, v, genera, edges);
        }
    }
    for (shape, &at) in trees.iter().zip(attach) {
        place(shape, at, &mut genera, &mut edges);
    }
    StableGraph::new(genera, edges, vec![]).expect("assembled graph is stable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_graph_counts() {
        use CycleStability::*;
        assert_eq!(enumerate_cycle_graphs(1, 1, Stable).len(), 1);
        assert_eq!(enumerate_cycle_graphs(1, 1, Prestable).len(), 1);
        assert_eq!(enumerate_cycle_graphs(1, 2, Prestable).len(), 2);
        assert_eq!(enumerate_cycle_graphs(2, 2, Prestable).len(), 3);
        // with stability the bare vertices are excluded
        assert_eq!(enumerate_cycle_graphs(1, 2, Stable).len(), 1);
        assert_eq!(enumerate_cycle_graphs(2, 2, Stable).len(), 2);
    }

    #[test]
    fn cycle_graphs_are_genus_one_cycles() {
        for l in 1..=4 {
            for g in enumerate_cycle_graphs(l, 3, CycleStability::Stable) {
                assert!(g.is_stable());
                assert_eq!(g.total_genus(), 1);
                assert_eq!(g.cycle().unwrap().len(), g.num_vertices());
                assert_eq!(g.legs().len(), l);
            }
        }
    }

    // Labeled legs on an unoriented cycle of c rational vertices, each
    // carrying at least one leg: count necklace-like classes by orbit
    // counting over the dihedral group acting on vertex positions.
    fn stable_cycle_count_brute(l: usize, c: usize) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        for a in assignments(l, c) {
            if (0..c).any(|v| !a.contains(&v)) {
                continue;
            }
            let mut images = Vec::new();
            for r in 0..c {
                for flip in [false, true] {
                    let img: Vec<usize> = a
                        .iter()
                        .map(|&v| {
                            let w = if flip { (c - v) % c } else { v };
                            (w + r) % c
                        })
                        .collect();
                    images.push(img);
                }
            }
            seen.insert(images.into_iter().min().unwrap());
        }
        seen.len()
    }

    #[test]
    fn stable_cycle_counts_match_dihedral_orbits() {
        for l in 1..=5 {
            let expected: usize = (1..=3.min(l)).map(|c| stable_cycle_count_brute(l, c)).sum();
            assert_eq!(
                enumerate_cycle_graphs(l, 3, CycleStability::Stable).len(),
                expected,
                "l = {l}"
            );
        }
    }

    #[test]
    fn tree_shapes_small() {
        assert_eq!(
            tree_shapes(1, 2),
            vec![TreeShape {
                genus: 1,
                children: vec![]
            }]
        );
        // 2; 1-[1]; 0-[1,1]
        assert_eq!(tree_shapes(2, 2).len(), 3);
        for h in 1..=6 {
            for s in tree_shapes(h, 2) {
                assert_eq!(s.total_genus(), h);
                assert!(s.depth() <= 2);
            }
        }
    }

    #[test]
    fn z_graphs_carry_their_partition() {
        for g in 2..=5u32 {
            for mu in partitions_of(g - 1) {
                let graphs = z_graphs(&mu, 3, 2);
                assert!(!graphs.is_empty());
                for graph in graphs {
                    assert_eq!(graph.total_genus(), g);
                    assert_eq!(graph.extract_partition().unwrap(), mu);
                }
            }
        }
    }
}
