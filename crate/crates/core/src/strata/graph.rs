use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Dual graph of a (pre)stable curve: vertex genera, edges (loops allowed,
/// parallel edges allowed) and labeled legs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StableGraph {
    genera: Vec<u32>,
    edges: Vec<(usize, usize)>,
    legs: Vec<(usize, u32)>,
}

/// Sorted, relabeling-invariant encoding of a graph.
pub type CanonicalKey = (Vec<u32>, Vec<(usize, usize)>, Vec<(usize, u32)>);

impl StableGraph {
    /// Connected and stable: genus-0 vertices have valence >= 3, genus-1
    /// vertices valence >= 1.
    pub fn new(genera: Vec<u32>, edges: Vec<(usize, usize)>, legs: Vec<(usize, u32)>) -> Result<Self> {
        let g = Self::prestable(genera, edges, legs)?;
        if let Some(v) = g.first_unstable_vertex() {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} of genus {} has valence {}",
                g.genera[v],
                g.valence(v)
            )));
        }
        Ok(g)
    }

    /// Connected, stability not enforced.
    pub fn prestable(
        genera: Vec<u32>,
        edges: Vec<(usize, usize)>,
        legs: Vec<(usize, u32)>,
    ) -> Result<Self> {
        let n = genera.len();
        if n == 0 {
            return Err(Error::InvalidGraph("no vertices".into()));
        }
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
        }
        if let Some(&(v, _)) = legs.iter().find(|&&(v, _)| v >= n) {
            return Err(Error::InvalidGraph(format!("leg on missing vertex {v}")));
        }
        let edges = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let graph = StableGraph {
            genera,
            edges,
            legs,
        };
        if !graph.is_connected() {
            return Err(Error::InvalidGraph("graph is disconnected".into()));
        }
        Ok(graph)
    }

    pub fn num_vertices(&self) -> usize {
        self.genera.len()
    }

    pub fn genera(&self) -> &[u32] {
        &self.genera
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn legs(&self) -> &[(usize, u32)] {
        &self.legs
    }

    /// Half-edges at `v` (a loop counts twice) plus legs at `v`.
    pub fn valence(&self, v: usize) -> usize {
        self.edge_degree(v) + self.legs.iter().filter(|&&(w, _)| w == v).count()
    }

    fn edge_degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn first_unstable_vertex(&self) -> Option<usize> {
        (0..self.num_vertices()).find(|&v| {
            let val = self.valence(v);
            match self.genera[v] {
                0 => val < 3,
                1 => val < 1,
                _ => false,
            }
        })
    }

    pub fn is_stable(&self) -> bool {
        self.first_unstable_vertex().is_none()
    }

    /// First Betti number |E| - |V| + 1.
    pub fn betti(&self) -> usize {
        self.edges.len() + 1 - self.num_vertices()
    }

    /// Sum of vertex genera plus the first Betti number.
    pub fn total_genus(&self) -> u32 {
        self.genera.iter().sum::<u32>() + self.betti() as u32
    }

    /// Vertices of the 2-core (what is left after repeatedly pruning
    /// vertices of edge-degree <= 1). For Betti number 1 this is the unique
    /// cycle.
    pub fn core_vertices(&self) -> Vec<usize> {
        let n = self.num_vertices();
        let mut alive = vec![true; n];
        let mut deg: Vec<usize> = (0..n).map(|v| self.edge_degree(v)).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if alive[v] && deg[v] <= 1 {
                    alive[v] = false;
                    changed = true;
                    for &(a, b) in &self.edges {
                        if a == v && b != v && alive[b] {
                            deg[b] -= 1;
                        } else if b == v && a != v && alive[a] {
                            deg[a] -= 1;
                        }
                    }
                }
            }
        }
        (0..n).filter(|&v| alive[v]).collect()
    }

    /// The unique minimal Betti-1 subgraph, as vertices in cyclic order.
    /// `None` unless the Betti number is exactly 1.
    pub fn cycle(&self) -> Option<Vec<usize>> {
        if self.betti() != 1 {
            return None;
        }
        let core = self.core_vertices();
        let in_core: BTreeSet<usize> = core.iter().copied().collect();
        let core_edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| in_core.contains(a) && in_core.contains(b))
            .collect();
        // a single cycle: every core vertex meets exactly two core half-edges
        let ok = core.iter().all(|&v| {
            core_edges
                .iter()
                .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
                .sum::<usize>()
                == 2
        });
        if !ok || core_edges.len() != core.len() {
            return None;
        }
        // walk around it
        let mut order = vec![core[0]];
        let mut used = vec![false; core_edges.len()];
        let mut cur = core[0];
        for _ in 1..core.len() {
            let (k, &(a, b)) = core_edges
                .iter()
                .enumerate()
                .find(|&(k, &(a, b))| !used[k] && (a == cur || b == cur))?;
            used[k] = true;
            cur = if a == cur { b } else { a };
            order.push(cur);
        }
        Some(order)
    }

    /// Membership in Z: Betti number 1 and every cycle vertex rational.
    pub fn in_z(&self) -> bool {
        match self.cycle() {
            Some(c) => c.iter().all(|&v| self.genera[v] == 0),
            None => false,
        }
    }

    /// Tree decomposition around the cycle; fails unless `in_z()`.
    pub fn xi_structure(&self) -> Result<XiGraph> {
        if !self.in_z() {
            return Err(Error::NotInZ);
        }
        let cycle = self.cycle().ok_or(Error::NotInZ)?;
        let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
        let mut assigned = vec![false; self.num_vertices()];
        for &v in &cycle {
            assigned[v] = true;
        }
        let mut trees = Vec::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            let (attach, root) = match (on_cycle.contains(&a), on_cycle.contains(&b)) {
                (true, false) => (a, b),
                (false, true) => (b, a),
                _ => continue,
            };
            // flood the tree hanging off this edge
            let mut vertices = vec![root];
            assigned[root] = true;
            let mut i = 0;
            while i < vertices.len() {
                let v = vertices[i];
                for &(x, y) in &self.edges {
                    let w = if x == v {
                        y
                    } else if y == v {
                        x
                    } else {
                        continue;
                    };
                    if !assigned[w] {
                        assigned[w] = true;
                        vertices.push(w);
                    }
                }
                i += 1;
            }
            let genus = vertices.iter().map(|&v| self.genera[v]).sum();
            trees.push(AttachedTree {
                attach,
                root,
                edge: k,
                vertices,
                genus,
            });
        }
        let mut partition: Vec<u32> = trees.iter().map(|t| t.genus).collect();
        partition.sort_unstable();
        Ok(XiGraph {
            partition,
            cycle,
            trees,
        })
    }

    /// Sorted genera of the trees hanging off the cycle.
    pub fn extract_partition(&self) -> Result<Vec<u32>> {
        Ok(self.xi_structure()?.partition)
    }

    pub fn classify_edge(&self, edge: usize) -> Result<EdgeType> {
        let xi = self.xi_structure()?;
        xi.classify(self, edge)
    }

    /// Dual-graph contraction. A non-loop edge merges its endpoints (genera
    /// add); a loop is deleted and its vertex gains one genus. Legs and the
    /// other edges are carried along; no vertex is removed beyond the merge.
    pub fn contract_edge(&self, edge: usize) -> Result<StableGraph> {
        let &(a, b) = self.edges.get(edge).ok_or(Error::NoSuchEdge(edge))?;
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != edge)
            .map(|(_, &e)| e)
            .collect();
        let mut genera = self.genera.clone();
        let mut legs = self.legs.clone();
        if a == b {
            genera[a] += 1;
        } else {
            // keep a, drop b, shift indices above b
            genera[a] += genera[b];
            genera.remove(b);
            let remap = |v: usize| {
                let v = if v == b { a } else { v };
                if v > b {
                    v - 1
                } else {
                    v
                }
            };
            for e in edges.iter_mut() {
                *e = (remap(e.0), remap(e.1));
            }
            for l in legs.iter_mut() {
                l.0 = remap(l.0);
            }
        }
        for e in edges.iter_mut() {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        StableGraph::prestable(genera, edges, legs)
    }

    /// Canonical key: minimum encoding over relabelings that respect the
    /// (genus, valence, leg labels) vertex invariant.
    pub fn canonical_form(&self) -> CanonicalKey {
        let n = self.num_vertices();
        let invariant = |v: usize| {
            let mut ls: Vec<u32> = self.legs.iter().filter(|l| l.0 == v).map(|l| l.1).collect();
            ls.sort_unstable();
            (self.genera[v], self.valence(v), ls)
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| invariant(v));
        // blocks of vertices with equal invariants
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match blocks.last_mut() {
                Some(bl) if invariant(bl[0]) == invariant(v) => bl.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        let mut best: Option<CanonicalKey> = None;
        let mut perm = Vec::with_capacity(n);
        self.search_labelings(&blocks, 0, &mut perm, &mut best);
        best.expect("at least one labeling")
    }

    fn search_labelings(
        &self,
        blocks: &[Vec<usize>],
        i: usize,
        perm: &mut Vec<usize>,
        best: &mut Option<CanonicalKey>,
    ) {
        if i == blocks.len() {
            let key = self.encode(perm);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        }
        for_each_permutation(&blocks[i], &mut |p| {
            let len = perm.len();
            perm.extend_from_slice(p);
            self.search_labelings(blocks, i + 1, perm, best);
            perm.truncate(len);
        });
    }

    // `order[new] = old`
    fn encode(&self, order: &[usize]) -> CanonicalKey {
        let mut new_of = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let genera = order.iter().map(|&v| self.genera[v]).collect();
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (new_of[a], new_of[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        let mut legs: Vec<(usize, u32)> = self.legs.iter().map(|&(v, l)| (new_of[v], l)).collect();
        legs.sort_unstable();
        (genera, edges, legs)
    }

    pub fn is_isomorphic(&self, other: &StableGraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

fn for_each_permutation(items: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    let mut v = items.to_vec();
    rec(&mut v, 0, f);
}

impl fmt::Debug for StableGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "StableGraph {{ genera: {:?}, edges: {:?}, legs: {:?} }}",
            self.genera, self.edges, self.legs
        )
    }
}

/// A tree of the decomposition and the edge attaching it to the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachedTree {
    pub attach: usize,
    pub root: usize,
    pub edge: usize,
    pub vertices: Vec<usize>,
    pub genus: u32,
}

/// A graph in Z seen as the image of a gluing map ξ_μ: a cycle of rational
/// vertices with one tree of positive genus per marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiGraph {
    pub partition: Vec<u32>,
    pub cycle: Vec<usize>,
    pub trees: Vec<AttachedTree>,
}

/// The five kinds of edge of a graph in the image of ξ_μ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeType {
    /// Edge of a cycle of length >= 2.
    Cycle,
    /// Edge inside an attached tree.
    Tree,
    /// Cycle vertex to a tree root of positive genus.
    RootPositive,
    /// Cycle vertex to a tree root of genus 0.
    RootZero,
    /// The loop of a length-1 cycle.
    Loop,
}

impl EdgeType {
    pub const ALL: [EdgeType; 5] = [
        EdgeType::Cycle,
        EdgeType::Tree,
        EdgeType::RootPositive,
        EdgeType::RootZero,
        EdgeType::Loop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EdgeType::Cycle => "CYCLE",
            EdgeType::Tree => "TREE",
            EdgeType::RootPositive => "ROOT_POSITIVE",
            EdgeType::RootZero => "ROOT_ZERO",
            EdgeType::Loop => "LOOP",
        }
    }
}

impl fmt::Display for EdgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl XiGraph {
    pub fn classify(&self, graph: &StableGraph, edge: usize) -> Result<EdgeType> {
        let &(a, b) = graph.edges().get(edge).ok_or(Error::NoSuchEdge(edge))?;
        let on_cycle = |v: usize| self.cycle.contains(&v);
        Ok(match (on_cycle(a), on_cycle(b)) {
            (true, true) if self.cycle.len() == 1 => EdgeType::Loop,
            (true, true) => EdgeType::Cycle,
            (true, false) | (false, true) => {
                let root = if on_cycle(a) { b } else { a };
                if graph.genera()[root] == 0 {
                    EdgeType::RootZero
                } else {
                    EdgeType::RootPositive
                }
            }
            (false, false) => EdgeType::Tree,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strata::fixtures::{figure_one_left, figure_one_right};

    #[test]
    fn figure_one_graphs() {
        let left = figure_one_left();
        assert_eq!(left.total_genus(), 11);
        assert!(left.is_stable());
        assert!(left.in_z());
        assert_eq!(left.extract_partition().unwrap(), vec![1, 2, 3, 4]);

        let right = figure_one_right();
        assert_eq!(right.total_genus(), 11);
        assert!(right.in_z());
        assert_eq!(right.extract_partition().unwrap(), vec![10]);
    }

    #[test]
    fn genus_one_loop_vertex_is_not_in_z() {
        let g = StableGraph::new(vec![1], vec![(0, 0)], vec![]).unwrap();
        assert_eq!(g.total_genus(), 2);
        assert!(!g.in_z());
        assert_eq!(g.extract_partition(), Err(Error::NotInZ));
    }

    #[test]
    fn loop_with_single_tail() {
        for g in 2..=6u32 {
            let graph = StableGraph::new(vec![0, g - 1], vec![(0, 0), (0, 1)], vec![]).unwrap();
            assert_eq!(graph.extract_partition().unwrap(), vec![g - 1]);
        }
    }

    #[test]
    fn validation() {
        assert!(StableGraph::new(vec![0], vec![(0, 0)], vec![]).is_err());
        assert!(StableGraph::new(vec![0, 1], vec![], vec![]).is_err());
        assert!(StableGraph::new(vec![1], vec![], vec![]).is_err());
        assert!(StableGraph::new(vec![2], vec![], vec![]).is_ok());
        assert!(StableGraph::new(vec![0], vec![(0, 1)], vec![]).is_err());
        assert!(StableGraph::prestable(vec![0, 0], vec![(0, 1), (0, 1)], vec![]).is_ok());
    }

    #[test]
    fn edge_classification() {
        // 2-cycle of rational vertices, genus-3 tree (0 -> 1, 2) at vertex 0,
        // genus-1 leaf at vertex 1
        let g = StableGraph::new(
            vec![0, 0, 0, 1, 2, 1],
            vec![(0, 1), (0, 1), (0, 2), (2, 3), (2, 4), (1, 5)],
            vec![],
        )
        .unwrap();
        assert_eq!(g.extract_partition().unwrap(), vec![1, 3]);
        assert_eq!(g.classify_edge(0).unwrap(), EdgeType::Cycle);
        assert_eq!(g.classify_edge(2).unwrap(), EdgeType::RootZero);
        assert_eq!(g.classify_edge(3).unwrap(), EdgeType::Tree);
        assert_eq!(g.classify_edge(5).unwrap(), EdgeType::RootPositive);
        assert_eq!(g.classify_edge(9), Err(Error::NoSuchEdge(9)));

        let lp = figure_one_right();
        assert_eq!(lp.classify_edge(0).unwrap(), EdgeType::Loop);
    }

    #[test]
    fn contractions() {
        // length-3 cycle, one genus-1 leaf per cycle vertex
        let tri = StableGraph::new(
            vec![0, 0, 0, 1, 1, 1],
            vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
            vec![],
        )
        .unwrap();
        let c = tri.contract_edge(0).unwrap();
        assert_eq!(c.cycle().unwrap().len(), 2);
        assert_eq!(c.extract_partition().unwrap(), vec![1, 1, 1]);
        assert_eq!(c.total_genus(), tri.total_genus());

        let lp = figure_one_right();
        let c = lp.contract_edge(0).unwrap();
        assert_eq!(c.betti(), 0);
        assert_eq!(c.total_genus(), 11);
        assert!(!c.in_z());

        let left = figure_one_left();
        let tree_edge = (0..left.edges().len())
            .find(|&k| left.classify_edge(k).unwrap() == EdgeType::Tree)
            .unwrap();
        let c = left.contract_edge(tree_edge).unwrap();
        assert!(c.in_z());
        assert_eq!(c.extract_partition().unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn canonical_form_detects_relabeling() {
        let a = StableGraph::new(vec![0, 1, 2], vec![(0, 0), (0, 1), (0, 2)], vec![]).unwrap();
        let b = StableGraph::new(vec![2, 0, 1], vec![(1, 1), (1, 2), (0, 1)], vec![]).unwrap();
        let c = StableGraph::new(vec![0, 1, 2], vec![(0, 0), (0, 2), (1, 2)], vec![]).unwrap();
        assert!(a.is_isomorphic(&b));
        assert!(!a.is_isomorphic(&c));
    }
}
