//! Edge-contraction behaviour of graphs in Z, by edge type.

use std::collections::BTreeMap;
use std::fmt;

use super::enumerate::z_graphs;
use super::graph::EdgeType;
use super::partition::{is_refinement, is_strict_refinement, partitions_of};
use crate::error::{Error, Result};

pub const CLOSURE_MAX_CYCLE_LEN: usize = 3;
pub const CLOSURE_MAX_TREE_DEPTH: usize = 2;

/// What a single contraction did to the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    /// Still in Z with the same partition.
    Same,
    /// Still in Z with a strictly finer partition.
    Finer,
    /// Left Z.
    Outside,
    /// Still in Z with some other partition.
    Other,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OutcomeCounts {
    pub same: usize,
    pub finer: usize,
    pub outside: usize,
    pub other: usize,
}

impl OutcomeCounts {
    pub fn total(&self) -> usize {
        self.same + self.finer + self.outside + self.other
    }

    fn record(&mut self, o: Outcome) {
        match o {
            Outcome::Same => self.same += 1,
            Outcome::Finer => self.finer += 1,
            Outcome::Outside => self.outside += 1,
            Outcome::Other => self.other += 1,
        }
    }

    fn only(&self, o: Outcome) -> bool {
        let n = match o {
            Outcome::Same => self.same,
            Outcome::Finer => self.finer,
            Outcome::Outside => self.outside,
            Outcome::Other => self.other,
        };
        self.total() > 0 && n == self.total()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub g: u32,
    pub graphs_checked: usize,
    pub contractions_checked: usize,
    pub outcomes: BTreeMap<EdgeType, OutcomeCounts>,
    /// The cycle-to-root edge type whose contractions refine the partition.
    pub refining_root_type: Option<EdgeType>,
    /// Whether the refining type is the positive-genus one, which is the
    /// order in which the two root types are usually listed.
    pub matches_listed_order: Option<bool>,
    pub violations: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "g={}: {} graphs, {} contractions",
            self.g, self.graphs_checked, self.contractions_checked
        )?;
        writeln!(f, "{:<14} {:>6} {:>6} {:>8} {:>6}", "edge", "same", "finer", "outside", "other")?;
        for (t, c) in &self.outcomes {
            writeln!(
                f,
                "{:<14} {:>6} {:>6} {:>8} {:>6}",
                t.name(),
                c.same,
                c.finer,
                c.outside,
                c.other
            )?;
        }
        match self.refining_root_type {
            Some(t) => writeln!(f, "refining root type: {t}")?,
            None => writeln!(f, "refining root type: undetermined")?,
        }
        if let Some(m) = self.matches_listed_order {
            writeln!(f, "positive-genus root refines: {m}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        Ok(())
    }
}

/// Contracts every edge of every small graph in Z of genus g and tallies the
/// outcomes per edge type.
pub fn verify_closure_lemma(g: u32) -> Result<ClosureReport> {
    if g < 2 {
        return Err(Error::InvalidGenus {
            g: g as usize,
            min: 2,
        });
    }
    let principal = vec![g - 1];
    let mut outcomes: BTreeMap<EdgeType, OutcomeCounts> =
        EdgeType::ALL.iter().map(|&t| (t, OutcomeCounts::default())).collect();
    let mut violations = Vec::new();
    let mut graphs_checked = 0;
    let mut contractions_checked = 0;

    for mu in partitions_of(g - 1) {
        for graph in z_graphs(&mu, CLOSURE_MAX_CYCLE_LEN, CLOSURE_MAX_TREE_DEPTH) {
            graphs_checked += 1;
            let xi = graph.xi_structure()?;
            if xi.partition != mu {
                violations.push(format!("{graph:?} built for {mu:?} reads as {:?}", xi.partition));
            }
            for e in 0..graph.edges().len() {
                contractions_checked += 1;
                let t = xi.classify(&graph, e)?;
                let c = graph.contract_edge(e)?;
                let (a, b) = graph.edges()[e];
                let expected_betti = graph.betti() - usize::from(a == b);
                if c.betti() != expected_betti || c.total_genus() != graph.total_genus() {
                    violations.push(format!("{t} contraction of {graph:?} changed genus or Betti number"));
                }
                let outcome = match c.extract_partition() {
                    Err(_) => Outcome::Outside,
                    Ok(p) if p == mu => Outcome::Same,
                    Ok(p) if is_strict_refinement(&p, &mu) => Outcome::Finer,
                    Ok(_) => Outcome::Other,
                };
                if mu != principal && c.in_z() && c.extract_partition()? == principal {
                    violations.push(format!("{t} contraction of {graph:?} reached {principal:?}"));
                }
                outcomes.get_mut(&t).expect("all types present").record(outcome);
            }
        }
    }

    for t in [EdgeType::Cycle, EdgeType::Tree] {
        let c = outcomes[&t];
        if c.total() > 0 && !c.only(Outcome::Same) {
            violations.push(format!("{t} contractions do not all preserve the partition: {c:?}"));
        }
    }
    let lp = outcomes[&EdgeType::Loop];
    if !lp.only(Outcome::Outside) {
        violations.push(format!("LOOP contractions do not all leave Z: {lp:?}"));
    }

    let pos = outcomes[&EdgeType::RootPositive];
    let zero = outcomes[&EdgeType::RootZero];
    let refining: Vec<EdgeType> = [(EdgeType::RootPositive, pos), (EdgeType::RootZero, zero)]
        .iter()
        .filter(|(_, c)| c.only(Outcome::Finer))
        .map(|&(t, _)| t)
        .collect();
    for (t, c) in [(EdgeType::RootPositive, pos), (EdgeType::RootZero, zero)] {
        if c.total() > 0 && !c.only(Outcome::Finer) && !c.only(Outcome::Outside) {
            violations.push(format!("{t} contractions are mixed: {c:?}"));
        }
    }
    if pos.total() > 0 && zero.total() > 0 {
        if refining.len() != 1 {
            violations.push(format!(
                "expected exactly one refining root type, found {refining:?}"
            ));
        } else {
            let other = if refining[0] == EdgeType::RootPositive { zero } else { pos };
            if !other.only(Outcome::Outside) {
                violations.push(format!("non-refining root type stays in Z: {other:?}"));
            }
        }
    }
    let refining_root_type = (refining.len() == 1).then(|| refining[0]);

    // (g-1) coarsens everything, and only refines itself
    for p in partitions_of(g - 1) {
        if !is_refinement(&p, &principal) {
            violations.push(format!("{p:?} does not refine {principal:?}"));
        }
        if p != principal && is_refinement(&principal, &p) {
            violations.push(format!("{principal:?} refines {p:?}"));
        }
    }

    Ok(ClosureReport {
        g,
        graphs_checked,
        contractions_checked,
        outcomes,
        refining_root_type,
        matches_listed_order: refining_root_type.map(|t| t == EdgeType::RootPositive),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_is_trivially_closed() {
        let r = verify_closure_lemma(2).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.graphs_checked, 1);
        assert_eq!(r.outcomes[&EdgeType::Loop].outside, 1);
        assert_eq!(r.outcomes[&EdgeType::RootPositive].outside, 1);
        assert_eq!(r.refining_root_type, None);
    }

    #[test]
    fn small_genera_have_no_violations() {
        for g in 3..=5 {
            let r = verify_closure_lemma(g).unwrap();
            assert!(r.passed(), "{r}");
            assert_eq!(r.contractions_checked, r.outcomes.values().map(|c| c.total()).sum::<usize>());
        }
    }

    #[test]
    fn genus_zero_roots_refine() {
        let r = verify_closure_lemma(5).unwrap();
        assert_eq!(r.refining_root_type, Some(EdgeType::RootZero));
        assert_eq!(r.matches_listed_order, Some(false));
        assert!(r.outcomes[&EdgeType::RootPositive].only(Outcome::Outside));
        for t in EdgeType::ALL {
            assert!(r.outcomes[&t].total() > 0, "{t} never exercised");
        }
    }

    #[test]
    fn rejects_genus_below_two() {
        assert!(verify_closure_lemma(1).is_err());
    }
}
