//! Orbital digraphs, double coset graphs and block quotients.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::bitgraph::BitGraph;
use crate::error::{input, Error, Result};
use crate::permgroup::{coset_action, BlockSystem, FiniteGroup, PermGroup, Permutation, StabChain};
use crate::util::UnionFind;

/// One orbit of a transitive group on ordered pairs of points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitalDigraph {
    degree: usize,
    arcs: Vec<(u32, u32)>,
    representative: (u32, u32),
}

impl OrbitalDigraph {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    /// The arc `(0, v)` with `v` smallest.
    pub fn representative(&self) -> (u32, u32) {
        self.representative
    }

    /// The diagonal orbital `{(v, v)}`.
    pub fn is_trivial(&self) -> bool {
        self.representative.0 == self.representative.1
    }

    /// Out-valency: arcs leaving each point.
    pub fn valency(&self) -> usize {
        self.arcs.len() / self.degree
    }

    pub fn contains(&self, arc: (u32, u32)) -> bool {
        self.arcs.binary_search(&arc).is_ok()
    }

    /// The arc set reversed, `Δ*`.
    pub fn paired_arcs(&self) -> Vec<(u32, u32)> {
        let mut rev: Vec<(u32, u32)> = self.arcs.iter().map(|&(u, v)| (v, u)).collect();
        rev.sort_unstable();
        rev
    }

    /// Whether the digraph, with arc directions ignored, is connected.
    pub fn is_weakly_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.degree);
        for &(u, v) in &self.arcs {
            uf.union(u as usize, v as usize);
        }
        uf.classes().len() == 1
    }

    /// The underlying undirected graph (loops dropped).
    pub fn undirected(&self) -> BitGraph {
        let mut g = BitGraph::new(self.degree);
        for &(u, v) in &self.arcs {
            if u != v {
                g.add_edge(u as usize, v as usize);
            }
        }
        g
    }
}

/// All orbitals of a transitive group, the diagonal first, the rest in order
/// of their representative `(0, v)`.
pub fn orbitals(group: &PermGroup) -> Result<Vec<OrbitalDigraph>> {
    if !group.is_transitive() {
        return input("orbitals need a transitive group");
    }
    let n = group.degree();
    let mut uf = UnionFind::new(n * n);
    for g in group.generators() {
        for u in 0..n as u32 {
            for v in 0..n as u32 {
                let (a, b) = (g.apply(u), g.apply(v));
                uf.union(u as usize * n + v as usize, a as usize * n + b as usize);
            }
        }
    }
    let mut out: Vec<OrbitalDigraph> = uf
        .classes()
        .into_iter()
        .map(|class| {
            let arcs: Vec<(u32, u32)> = class
                .iter()
                .map(|&k| ((k / n) as u32, (k % n) as u32))
                .collect();
            // classes list members ascending, so the first arc starts at 0
            let representative = arcs[0];
            OrbitalDigraph {
                degree: n,
                arcs,
                representative,
            }
        })
        .collect();
    out.sort_by_key(|o| o.representative);
    Ok(out)
}

/// An element mapping `u` to `v`, found by breadth-first search.
pub fn transporter(group: &PermGroup, u: u32, v: u32) -> Option<Permutation> {
    let n = group.degree();
    let mut word: Vec<Option<Permutation>> = vec![None; n];
    word[u as usize] = Some(Permutation::identity(n));
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        let w = word[x as usize].clone().unwrap();
        for s in group.generators() {
            let y = s.apply(x);
            if word[y as usize].is_none() {
                word[y as usize] = Some(s.mul(&w));
                queue.push_back(y);
            }
        }
    }
    word[v as usize].take()
}

fn nontrivial(orbital: &OrbitalDigraph) -> Result<()> {
    if orbital.is_trivial() {
        input("the diagonal orbital is excluded")
    } else {
        Ok(())
    }
}

/// Whether `Δ = Δ*`, decided from the arc set and, independently, by the
/// existence of a 2-element `g` with `g(u) = v` and `g² ∈ G_u`.
pub fn is_self_paired(group: &PermGroup, orbital: &OrbitalDigraph, cap: usize) -> Result<bool> {
    nontrivial(orbital)?;
    let by_arcs = orbital.paired_arcs() == orbital.arcs();
    let (u, v) = orbital.representative();
    let t = transporter(group, u, v).ok_or_else(|| Error::Input("orbital outside orbit".into()))?;
    let by_element = group.point_stabilizer(u, cap)?.iter().any(|s| {
        let g = t.mul(s);
        g.order().is_power_of_two() && g.mul(&g).apply(u) == u
    });
    if by_arcs != by_element {
        return Err(Error::CrossCheck(format!(
            "self-pairedness of orbital {:?}: arc reversal says {by_arcs}, 2-element criterion says {by_element}",
            orbital.representative()
        )));
    }
    Ok(by_arcs)
}

/// Whether the orbital digraph is weakly connected, decided by a traversal
/// and, independently, by testing `⟨G_u, g⟩ = G` for `g` mapping `u` to `v`.
pub fn is_connected_orbital(group: &PermGroup, orbital: &OrbitalDigraph) -> Result<bool> {
    nontrivial(orbital)?;
    let by_traversal = orbital.is_weakly_connected();
    let (u, v) = orbital.representative();
    let g = transporter(group, u, v).ok_or_else(|| Error::Input("orbital outside orbit".into()))?;
    let chain = group.stabilizer_chain(&[u]);
    let mut gens = chain.stabilizer_generators(1);
    gens.push(g);
    let sub = StabChain::new(group.degree(), &gens, &[]).order();
    let by_generation = sub == chain.order();
    if by_traversal != by_generation {
        return Err(Error::CrossCheck(format!(
            "connectivity of orbital {:?}: traversal says {by_traversal}, generation criterion says {by_generation}",
            orbital.representative()
        )));
    }
    Ok(by_traversal)
}

/// A digraph on the left cosets of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDigraph {
    out: Vec<Vec<u32>>,
}

impl CosetDigraph {
    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[u32] {
        &self.out[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Common out-valency, if regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.out.first().map_or(0, Vec::len);
        self.out.iter().all(|o| o.len() == d).then_some(d)
    }

    pub fn is_symmetric(&self) -> bool {
        self.out.iter().enumerate().all(|(u, o)| {
            o.iter()
                .all(|&v| self.out[v as usize].binary_search(&(u as u32)).is_ok())
        })
    }

    pub fn arcs(&self) -> Vec<(u32, u32)> {
        let mut arcs: Vec<(u32, u32)> = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(u, o)| o.iter().map(move |&v| (u as u32, v)))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// The undirected graph, when every arc has its reverse.
    pub fn undirected(&self) -> Option<BitGraph> {
        if !self.is_symmetric() {
            return None;
        }
        let mut g = BitGraph::new(self.order());
        for (u, o) in self.out.iter().enumerate() {
            for &v in o {
                g.add_edge(u, v as usize);
            }
        }
        Some(g)
    }

    pub fn is_weakly_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.order());
        for (u, o) in self.out.iter().enumerate() {
            for &v in o {
                uf.union(u, v as usize);
            }
        }
        uf.classes().len() <= 1
    }
}

/// `Cos(G, H, HSH)`: arcs `(xH, yH)` with `x⁻¹y ∈ HSH`, loops excluded.
/// Cosets are numbered as in [`crate::permgroup::coset_action`].
pub fn double_coset_graph(group: &FiniteGroup, subgroup: &[usize], connection: &[usize]) -> Result<CosetDigraph> {
    let action = coset_action(group, subgroup)?;
    let mut hsh: FxHashSet<usize> = FxHashSet::default();
    for &s in connection {
        for &a in subgroup {
            let as_ = group.mul_positions(a, s);
            for &b in subgroup {
                hsh.insert(group.mul_positions(as_, b));
            }
        }
    }
    let n = action.degree();
    let reps: Vec<usize> = (0..n as u32).map(|c| action.representative(c)).collect();
    let out = reps
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let xinv = group.inverse_position(x);
            reps.iter()
                .enumerate()
                .filter(|&(j, &y)| j != i && hsh.contains(&group.mul_positions(xinv, y)))
                .map(|(j, _)| j as u32)
                .collect()
        })
        .collect();
    Ok(CosetDigraph { out })
}

/// Blocks as vertices, adjacent when some edge joins them.
pub fn quotient_graph(graph: &BitGraph, blocks: &BlockSystem) -> Result<BitGraph> {
    if blocks.degree() != graph.order() {
        return input("block system and graph have different point counts");
    }
    let mut q = BitGraph::new(blocks.block_count());
    for (u, v) in graph.edges() {
        let (a, b) = (blocks.block_of(u as u32), blocks.block_of(v as u32));
        if a != b {
            q.add_edge(a, b);
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::enumerate_group;

    fn p(n: usize, cs: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cs).unwrap()
    }

    #[test]
    fn cyclic_five_has_four_directed_orbitals() {
        let g = PermGroup::new(vec![p(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        let orbs = orbitals(&g).unwrap();
        assert_eq!(orbs.len(), 5);
        assert!(orbs[0].is_trivial());
        assert!(orbs.iter().all(|o| o.arcs().len() == 5));
        for o in &orbs[1..] {
            assert!(!is_self_paired(&g, o, 100).unwrap());
            assert!(is_connected_orbital(&g, o).unwrap());
        }
        assert!(is_self_paired(&g, &orbs[0], 100).is_err());
    }

    #[test]
    fn dihedral_ten_has_two_self_paired_orbitals() {
        let g = PermGroup::new(vec![p(5, &[&[0, 1, 2, 3, 4]]), p(5, &[&[1, 4], &[2, 3]])]).unwrap();
        let orbs = orbitals(&g).unwrap();
        assert_eq!(orbs.len(), 3);
        for o in &orbs[1..] {
            assert!(is_self_paired(&g, o, 100).unwrap());
            assert_eq!(o.valency(), 2);
        }
        let total: usize = orbs.iter().map(|o| o.arcs().len()).sum();
        assert_eq!(total, 25);
    }

    #[test]
    fn klein_regular_orbitals_are_disconnected() {
        let g = PermGroup::new(vec![p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])]).unwrap();
        for o in &orbitals(&g).unwrap()[1..] {
            assert!(!is_connected_orbital(&g, o).unwrap());
            assert!(is_self_paired(&g, o, 100).unwrap());
        }
    }

    #[test]
    fn two_transitive_has_one_nontrivial_orbital() {
        let s4 = PermGroup::new(vec![p(4, &[&[0, 1]]), p(4, &[&[0, 1, 2, 3]])]).unwrap();
        let orbs = orbitals(&s4).unwrap();
        assert_eq!(orbs.len(), 2);
        assert!(is_self_paired(&s4, &orbs[1], 100).unwrap());
        assert!(is_connected_orbital(&s4, &orbs[1]).unwrap());
    }

    #[test]
    fn double_coset_graph_of_trivial_connection_is_empty() {
        let s3 = enumerate_group(&[p(3, &[&[0, 1]]), p(3, &[&[0, 1, 2]])], 10).unwrap();
        let h = s3.stabilizer(2).unwrap();
        let g = double_coset_graph(&s3, &h, &[0]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.arc_count(), 0);
        let t = s3.position(&p(3, &[&[0, 2]])).unwrap();
        let k3 = double_coset_graph(&s3, &h, &[t]).unwrap();
        assert_eq!(k3.valency(), Some(2));
        assert!(k3.is_symmetric());
    }

    #[test]
    fn quotient_of_bipartite_graph() {
        let k33 = BitGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let b = BlockSystem::from_blocks(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let q = quotient_graph(&k33, &b).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.edge_count(), 1);
        assert_eq!(quotient_graph(&k33, &BlockSystem::singletons(6)).unwrap(), k33);
    }
}
