//! The complement of the derangement graph and the neighbourhood of the
//! identity in it.

use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};

use super::bitgraph::{words_for, BitGraph};
use crate::error::{input, Error, Result};
use crate::permgroup::{FiniteGroup, MaterializedAction, Permutation};
use crate::util::UnionFind;

/// Default cap on the vertex count of an explicit whole-group graph.
pub const DEFAULT_EXPLICIT_GRAPH_CAP: usize = 1 << 16;

/// The graph on a fixer set `S` with `s ~ t` iff `s⁻¹t ∈ S`.
///
/// This is the subgraph of the complement of the derangement graph induced
/// on the neighbours of the identity; vertex `i` is `fixers[i]` and carries
/// label `i`.
pub fn fixer_neighborhood_graph(fixers: &[Permutation]) -> Result<BitGraph> {
    let n = fixers.len();
    if n == 0 {
        return Ok(BitGraph::new(0));
    }
    let degree = fixers[0].degree();
    if fixers.iter().any(|s| s.degree() != degree) {
        return input("fixer set mixes permutation degrees");
    }
    if fixers.iter().any(|s| s.is_identity()) {
        return input("fixer set contains the identity");
    }
    let index: FxHashMap<&[u32], usize> =
        fixers.iter().enumerate().map(|(i, s)| (s.images(), i)).collect();
    if index.len() != n {
        return input("fixer set contains repeated elements");
    }
    if let Some(s) = fixers.iter().find(|s| !index.contains_key(s.inverse().images())) {
        return input(format!("fixer set is not inverse-closed: {s} has no inverse in it"));
    }
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    rows.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
        let inv = fixers[i].inverse();
        let inv = inv.images();
        let mut buf = vec![0u32; degree];
        for (j, t) in fixers.iter().enumerate() {
            if i == j {
                continue;
            }
            for (b, &v) in buf.iter_mut().zip(t.images()) {
                *b = inv[v as usize];
            }
            if index.contains_key(&buf[..]) {
                row[j / 64] |= 1 << (j % 64);
            }
        }
    });
    let g = BitGraph::from_rows(n, rows)?;
    g.with_labels((0..n).collect())
}

/// Whether conjugation by each generator maps `set` into itself.
pub fn is_conjugation_invariant(set: &[Permutation], generators: &[Permutation]) -> bool {
    let members: FxHashSet<&Permutation> = set.iter().collect();
    set.iter()
        .all(|s| generators.iter().all(|g| members.contains(&s.conjugate_by(g))))
}

/// Positions of the non-identity elements fixing at least one point of the
/// materialised action, decided by inspecting each induced permutation.
pub fn fixing_positions(action: &MaterializedAction) -> Vec<usize> {
    (1..action.group.order())
        .into_par_iter()
        .filter(|&i| action.point_image(i).has_fixed_point())
        .collect()
}

/// The complement of the derangement graph on all of `G`: `g ~ h` iff
/// `g⁻¹h` fixes a point. Vertex `i` is `group.element(i)`.
pub fn complement_derangement_graph(action: &MaterializedAction, cap: usize) -> Result<BitGraph> {
    let group = &action.group;
    let n = group.order();
    if n > cap {
        return Err(Error::GraphTooLarge { vertices: n, cap });
    }
    let fixing = fixing_positions(action);
    let words = words_for(n);
    let mut rows = vec![0u64; n * words];
    // row g is the left translate g·Fix
    rows.par_chunks_mut(words).enumerate().for_each(|(g, row)| {
        for &s in &fixing {
            let h = group.mul_positions(g, s);
            row[h / 64] |= 1 << (h % 64);
        }
    });
    BitGraph::from_rows(n, rows)
}

/// Whether `g ↦ g⁻¹` maps edges of a whole-group graph to edges.
pub fn inverse_map_is_automorphism(group: &FiniteGroup, graph: &BitGraph) -> bool {
    let inv: Vec<usize> = (0..group.order()).map(|i| group.inverse_position(i)).collect();
    graph.edges().all(|(u, v)| graph.has_edge(inv[u], inv[v]))
}

/// Whether left multiplication by every generator is an automorphism of a
/// whole-group graph.
pub fn left_translations_are_automorphisms(group: &FiniteGroup, graph: &BitGraph) -> bool {
    let gens: Vec<usize> = group
        .generators()
        .iter()
        .map(|s| group.position(s).expect("generator in group"))
        .collect();
    gens.iter().all(|&s| {
        graph
            .edges()
            .all(|(u, v)| graph.has_edge(group.mul_positions(s, u), group.mul_positions(s, v)))
    })
}

/// Orbits of `⟨conjugation by generators, inversion⟩` on a fixer set, each
/// as sorted indices into `fixers`.
pub fn conjugation_inversion_orbits(
    fixers: &[Permutation],
    generators: &[Permutation],
) -> Result<Vec<Vec<usize>>> {
    let index: FxHashMap<&Permutation, usize> =
        fixers.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut uf = UnionFind::new(fixers.len());
    for (i, s) in fixers.iter().enumerate() {
        let inv = s.inverse();
        let images = generators.iter().map(|g| s.conjugate_by(g)).chain([inv]);
        for t in images {
            match index.get(&t) {
                Some(&j) => {
                    uf.union(i, j);
                }
                None => return input(format!("{t} lies outside the fixer set")),
            }
        }
    }
    Ok(uf.classes())
}
