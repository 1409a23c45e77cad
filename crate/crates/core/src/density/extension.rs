use std::collections::BTreeSet;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::compute::AgreementOracle;
use crate::clique::{enumerate_maximum_cliques, max_clique, SolverOptions};
use crate::error::{Error, Result};
use crate::graph::fixer_neighborhood_graph;
use crate::permgroup::{generate_elements, subgroup_shape, Permutation, SubgroupShape, TransitiveAction};

/// How a stabilizer `H = ⟨x⟩` of order 3 sits inside larger intersecting
/// sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionReport {
    pub fixers: usize,
    /// Fixers outside `H` agreeing with every element of `H`.
    pub extenders: usize,
    /// Largest intersecting set containing `H`, when `H` is not maximal.
    pub max_extension: Option<usize>,
    /// Whether `H⟨y⟩` is intersecting for every extender `y`.
    pub closures_intersecting: bool,
    /// Shapes of `⟨x, y⟩` over the extenders.
    pub shapes: Vec<SubgroupShape>,
    /// Clique number of the complement of the derangement graph.
    pub omega: usize,
    /// Maximum basic intersecting sets examined when `omega = 4`.
    pub size_four_sets: usize,
    /// Whether each size-four set has its non-identity elements in distinct
    /// point stabilizers.
    pub distinct_stabilizers: bool,
    pub truncated: bool,
}

pub fn stabilizer_extension_analysis(
    action: &TransitiveAction,
    solver: SolverOptions,
    enumeration_cap: usize,
) -> Result<ExtensionReport> {
    if action.stabilizer_order() != 3 {
        return Err(Error::Hypothesis(format!(
            "point stabilizers have order {}, not 3",
            action.stabilizer_order()
        )));
    }
    let degree = action.group().degree();
    let x = action
        .stabilizer()
        .iter()
        .find(|h| !h.is_identity())
        .expect("H has order 3")
        .clone();
    let x2 = x.inverse();
    let fixers = action.fixer_set();
    let in_s: FxHashSet<&Permutation> = fixers.iter().collect();
    let extender_idx: Vec<usize> = fixers
        .iter()
        .enumerate()
        .filter(|(_, y)| **y != x && **y != x2)
        .filter(|(_, y)| in_s.contains(&x2.mul(y)) && in_s.contains(&x.mul(y)))
        .map(|(i, _)| i)
        .collect();

    let graph = fixer_neighborhood_graph(&fixers)?;
    let oracle = AgreementOracle::new(action);
    let mut max_extension = None;
    let mut closures_intersecting = true;
    let mut shapes: BTreeSet<SubgroupShape> = BTreeSet::new();
    if !extender_idx.is_empty() {
        let sub = graph.induced_subgraph(&extender_idx);
        let res = max_clique(&sub, solver);
        max_extension = Some(3 + res.omega);
        let h = action.stabilizer();
        for &i in &extender_idx {
            let y = &fixers[i];
            let k = [Permutation::identity(degree), y.clone(), y.inverse()];
            let hk: Vec<Permutation> = h
                .iter()
                .flat_map(|a| k.iter().map(move |b| a.mul(b)))
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            closures_intersecting &= oracle.is_intersecting(&hk);
            let generated = generate_elements(degree, &[x.clone(), y.clone()], 1 << 16)?;
            shapes.insert(subgroup_shape(&generated));
        }
    }

    let res = max_clique(&graph, solver.with_hint(2));
    let omega = res.omega + 1;
    let mut size_four_sets = 0;
    let mut distinct_stabilizers = true;
    let mut truncated = false;
    if omega == 4 {
        let e = enumerate_maximum_cliques(&graph, 3, enumeration_cap);
        truncated = e.truncated;
        size_four_sets = e.cliques.len();
        for c in &e.cliques {
            // a point stabilizer containing a fixer s is ⟨s⟩
            let shared = c
                .iter()
                .enumerate()
                .any(|(i, &a)| c[i + 1..].iter().any(|&b| fixers[a].inverse() == fixers[b]));
            distinct_stabilizers &= !shared;
        }
    }
    Ok(ExtensionReport {
        fixers: fixers.len(),
        extenders: extender_idx.len(),
        max_extension,
        closures_intersecting,
        shapes: shapes.into_iter().collect(),
        omega,
        size_four_sets,
        distinct_stabilizers,
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::PermGroup;

    fn p(n: usize, cs: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cs).unwrap()
    }

    #[test]
    fn s5_three_cycles() {
        let s5 = PermGroup::new(vec![p(5, &[&[0, 1]]), p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let a = TransitiveAction::on_cosets("S5", s5, &[p(5, &[&[0, 1, 2]])], 1000).unwrap();
        let r = stabilizer_extension_analysis(&a, SolverOptions::sequential(), 10_000).unwrap();
        assert_eq!(r.fixers, 20);
        assert_eq!(r.omega, 4);
        assert!(r.size_four_sets > 0);
        assert!(r.distinct_stabilizers);
        assert!(!r.truncated);
        // (0 1 2) meets every 3-cycle on {0,1,2,k}? only those sharing two points agree with all of H
        assert!(r.extenders > 0 || r.max_extension.is_none());
    }

    #[test]
    fn wrong_stabilizer_order() {
        let s4 = PermGroup::new(vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let a = TransitiveAction::natural("S4", s4, 100).unwrap();
        assert!(stabilizer_extension_analysis(&a, SolverOptions::sequential(), 10).is_err());
    }
}
