//! Exact maximum clique search on [`BitGraph`]s.
//!
//! Branch and bound in the style of BBMC: the graph is relabelled by a
//! degeneracy ordering, candidate sets are packed bitsets, and every node is
//! bounded by a greedy sequential colouring of its candidates. The top-level
//! branches run in parallel and share only the incumbent size.

mod search;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::BitGraph;

pub use search::{enumerate_maximum_cliques, max_clique, CliqueEnumeration};

/// Default cap on the number of maximum cliques collected by enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Worker threads; `None` uses the global rayon pool, `Some(1)` searches
    /// sequentially and makes the witness deterministic.
    pub threads: Option<usize>,
    /// A clique size known to be attainable. Only larger-or-equal cliques are
    /// searched for first; the search is repeated without the hint if the
    /// hint turns out to exceed the clique number.
    pub lower_hint: Option<usize>,
}

impl SolverOptions {
    pub fn sequential() -> Self {
        SolverOptions {
            threads: Some(1),
            lower_hint: None,
        }
    }

    pub fn with_hint(mut self, hint: usize) -> Self {
        self.lower_hint = Some(hint);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub omega: usize,
    /// A maximum clique, sorted. Under parallel search this is one of
    /// possibly many maximum cliques.
    pub witness: Vec<usize>,
    pub node_count: u64,
    #[serde(with = "duration_secs")]
    pub elapsed: Duration,
}

mod duration_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        Ok(Duration::from_secs_f64(f64::deserialize(d)?))
    }
}

/// Size of a clique grown greedily from the few highest-degree vertices,
/// always adding the candidate with most neighbours among the candidates.
pub fn greedy_clique_lower_bound(graph: &BitGraph) -> usize {
    greedy_clique(graph).len()
}

pub(crate) fn greedy_clique(graph: &BitGraph) -> Vec<usize> {
    let n = graph.order();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| std::cmp::Reverse(graph.degree(v)));
    starts.truncate(16);
    let mut best = Vec::new();
    for s in starts {
        let mut clique = vec![s];
        let mut cand: Vec<u64> = graph.row(s).to_vec();
        loop {
            let next = crate::graph::bitgraph::iter_bits(&cand).max_by_key(|&v| {
                graph
                    .row(v)
                    .iter()
                    .zip(&cand)
                    .map(|(a, b)| (a & b).count_ones())
                    .sum::<u32>()
            });
            let Some(v) = next else { break };
            clique.push(v);
            for (c, r) in cand.iter_mut().zip(graph.row(v)) {
                *c &= r;
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Clique number by dynamic programming over vertex subsets; test oracle
/// for graphs of at most 24 vertices.
#[cfg(test)]
pub(crate) fn brute_force_omega(graph: &BitGraph) -> usize {
    let n = graph.order();
    assert!(n <= 24);
    let adj: Vec<u32> = (0..n)
        .map(|v| graph.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut is_clique = vec![false; 1 << n];
    is_clique[0] = true;
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if is_clique[rest as usize] && rest & !adj[v] == 0 {
            is_clique[mask as usize] = true;
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::finitefield::paley_graph;

    fn random_graph(n: usize, p: f64, seed: u64) -> BitGraph {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut g = BitGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn small_graphs() {
        assert_eq!(max_clique(&BitGraph::new(0), SolverOptions::default()).omega, 0);
        assert_eq!(max_clique(&BitGraph::new(3), SolverOptions::default()).omega, 1);
        let k5 = BitGraph::complete(5);
        let r = max_clique(&k5, SolverOptions::default());
        assert_eq!((r.omega, r.witness.clone()), (5, vec![0, 1, 2, 3, 4]));
        assert_eq!(greedy_clique_lower_bound(&k5), 5);
        assert_eq!(greedy_clique_lower_bound(&BitGraph::new(4)), 1);
        assert_eq!(greedy_clique_lower_bound(&BitGraph::new(0)), 0);
    }

    #[test]
    fn agrees_with_brute_force() {
        for seed in 0..60 {
            let n = 6 + (seed as usize % 19);
            let p = [0.2, 0.5, 0.8][seed as usize % 3];
            let g = random_graph(n, p, seed);
            let expected = brute_force_omega(&g);
            for threads in [Some(1), Some(2), None] {
                let r = max_clique(&g, SolverOptions { threads, lower_hint: None });
                assert_eq!(r.omega, expected, "seed {seed}");
                assert!(g.is_clique(&r.witness) && r.witness.len() == r.omega);
            }
            assert!(greedy_clique_lower_bound(&g) <= expected);
        }
    }

    #[test]
    fn hints_never_change_the_answer() {
        let g = random_graph(40, 0.6, 7);
        let exact = max_clique(&g, SolverOptions::sequential()).omega;
        for hint in [1, exact, exact + 1, exact + 5] {
            let r = max_clique(&g, SolverOptions::sequential().with_hint(hint));
            assert_eq!(r.omega, exact);
        }
    }

    #[test]
    fn paley_cliques() {
        assert_eq!(max_clique(&paley_graph(9).unwrap(), SolverOptions::default()).omega, 3);
        let p25 = paley_graph(25).unwrap();
        assert_eq!(max_clique(&p25, SolverOptions::default()).omega, 5);
        let lb = greedy_clique_lower_bound(&p25);
        assert!((2..=5).contains(&lb));
    }

    #[test]
    fn enumeration() {
        let k5 = BitGraph::complete(5);
        let e = enumerate_maximum_cliques(&k5, 5, 10);
        assert_eq!(e.cliques, vec![vec![0, 1, 2, 3, 4]]);
        assert!(!e.truncated);

        let mut triangles = BitGraph::new(24);
        for t in 0..8 {
            let b = 3 * t;
            triangles.add_edge(b, b + 1);
            triangles.add_edge(b, b + 2);
            triangles.add_edge(b + 1, b + 2);
        }
        let e = enumerate_maximum_cliques(&triangles, 3, 100);
        assert_eq!(e.cliques.len(), 8);
        let e = enumerate_maximum_cliques(&triangles, 3, 5);
        assert_eq!(e.cliques.len(), 5);
        assert!(e.truncated);

        let p9 = paley_graph(9).unwrap();
        let e = enumerate_maximum_cliques(&p9, 3, 100);
        let mut brute = 0;
        for a in 0..9 {
            for b in a + 1..9 {
                for c in b + 1..9 {
                    if p9.is_clique(&[a, b, c]) {
                        brute += 1;
                    }
                }
            }
        }
        // P9 is the 3×3 rook's graph: every edge lies in exactly one triangle
        assert_eq!(brute, 6);
        assert_eq!(e.cliques.len(), 6);
        assert!(e.cliques.iter().all(|c| p9.is_clique(c)));
    }
}
