use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use super::permutation::{lcm, Permutation};
use super::schreier::StabChain;
use crate::error::{input, Error, Result};

/// Default cap on the number of elements a full enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 22;

/// A permutation group given by generators only.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let Some(first) = generators.first() else {
            return input("generator list is empty");
        };
        let degree = first.degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return input("generators have different degrees");
        }
        Ok(PermGroup { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn stabilizer_chain(&self, base_prefix: &[u32]) -> StabChain {
        StabChain::new(self.degree, &self.generators, base_prefix)
    }

    /// Group order from a stabilizer chain.
    pub fn order(&self) -> Result<u64> {
        self.stabilizer_chain(&[])
            .order()
            .ok_or_else(|| Error::Input("group order overflows u64".into()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.stabilizer_chain(&[]).contains(g)
    }

    /// Orbit of `v` in breadth-first order.
    pub fn orbit(&self, v: u32) -> Vec<u32> {
        orbit_under(self.degree, &self.generators, v)
    }

    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_under(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Elements of the point stabilizer `G_v`, via a chain with base `[v]`.
    pub fn point_stabilizer(&self, v: u32, cap: usize) -> Result<Vec<Permutation>> {
        if v as usize >= self.degree {
            return input(format!("point {v} out of range for degree {}", self.degree));
        }
        let chain = self.stabilizer_chain(&[v]);
        let gens = chain.stabilizer_generators(1);
        generate_elements(self.degree, &gens, cap)
    }

    /// Orbit of `g` under conjugation by the generators. Does not need the
    /// element list of the group.
    pub fn conjugacy_class(&self, g: &Permutation) -> Vec<Permutation> {
        conjugacy_class_under(&self.generators, g)
    }

    pub fn enumerate(&self, cap: usize) -> Result<FiniteGroup> {
        enumerate_group(&self.generators, cap)
    }
}

pub(crate) fn orbit_under(degree: usize, gens: &[Permutation], v: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    let mut orbit = vec![v];
    seen[v as usize] = true;
    let mut i = 0;
    while i < orbit.len() {
        let x = orbit[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit
}

/// Orbits sorted by smallest point, each orbit sorted.
pub(crate) fn orbits_under(degree: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for v in 0..degree as u32 {
        if seen[v as usize] {
            continue;
        }
        let mut orbit = orbit_under(degree, gens, v);
        for &x in &orbit {
            seen[x as usize] = true;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Sorted conjugacy class of `g` in `⟨gens⟩`.
pub fn conjugacy_class_under(gens: &[Permutation], g: &Permutation) -> Vec<Permutation> {
    let mut seen: FxHashSet<Permutation> = FxHashSet::default();
    seen.insert(g.clone());
    let mut queue = VecDeque::from([g.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = x.conjugate_by(s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut class: Vec<Permutation> = seen.into_iter().collect();
    class.sort_unstable();
    class
}

/// All elements of `⟨gens⟩`, sorted, identity first. Errors past `cap`.
pub fn generate_elements(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: FxHashSet<Permutation> = FxHashSet::default();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            let y = x.mul(s);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_unstable();
    // the identity is the lexicographically smallest image array
    debug_assert!(out[0].is_identity());
    Ok(out)
}

/// A permutation group with its full element table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, usize>,
    designated: Option<Vec<usize>>,
}

/// Breadth-first closure under right multiplication by the generators.
///
/// Elements are listed layer by layer (word length in the generators), each
/// layer sorted lexicographically by image array, so `elements[0]` is the
/// identity and the order is reproducible.
pub fn enumerate_group(generators: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    let group = PermGroup::new(generators.to_vec())?;
    if cap == 0 {
        return input("enumeration cap must be at least 1");
    }
    let degree = group.degree;
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: FxHashMap<Permutation, usize> = FxHashMap::default();
    index.insert(elements[0].clone(), 0);
    let mut layer = 0..1;
    while !layer.is_empty() {
        let mut next: FxHashSet<Permutation> = FxHashSet::default();
        for i in layer.clone() {
            for s in &group.generators {
                let y = elements[i].mul(s);
                if !index.contains_key(&y) && !next.contains(&y) {
                    if elements.len() + next.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    next.insert(y);
                }
            }
        }
        let mut next: Vec<Permutation> = next.into_iter().collect();
        next.sort_unstable();
        let start = elements.len();
        for y in next {
            index.insert(y.clone(), elements.len());
            elements.push(y);
        }
        layer = start..elements.len();
    }
    Ok(FiniteGroup {
        degree,
        generators: group.generators,
        elements,
        index,
        designated: None,
    })
}

/// Order, exponent and commutativity of a subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubgroupShape {
    pub order: u64,
    pub exponent: u64,
    pub abelian: bool,
}

/// Shape of the subgroup whose full element list is `elements`.
pub fn subgroup_shape(elements: &[Permutation]) -> SubgroupShape {
    let exponent = elements.iter().fold(1u64, |acc, g| lcm(acc, g.order()));
    let abelian = elements
        .iter()
        .enumerate()
        .all(|(i, a)| elements[i + 1..].iter().all(|b| a.commutes_with(b)));
    SubgroupShape {
        order: elements.len() as u64,
        exponent,
        abelian,
    }
}

/// Semiregularity of the subgroup with element list `elements` acting on
/// `{0, …, degree-1}`: whether only the identity fixes a point, and the
/// number of orbits.
pub fn semiregularity(degree: usize, elements: &[Permutation]) -> (bool, usize) {
    let semiregular = elements
        .iter()
        .all(|g| g.is_identity() || !g.has_fixed_point());
    let orbits = orbits_under(degree, elements).len();
    (semiregular, orbits)
}

impl FiniteGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn position(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn perm_group(&self) -> PermGroup {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
        }
    }

    pub fn designated_subgroup(&self) -> Option<&[usize]> {
        self.designated.as_deref()
    }

    /// Attaches the subgroup whose coset action is studied.
    pub fn with_designated_subgroup(mut self, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        if !self.is_subgroup(&positions) {
            return input("designated subgroup is not closed under composition and inverse");
        }
        if self.order() % positions.len() != 0 {
            return Err(Error::CrossCheck(
                "subgroup order does not divide group order".into(),
            ));
        }
        self.designated = Some(positions);
        Ok(self)
    }

    pub fn mul_positions(&self, i: usize, j: usize) -> usize {
        self.index[&self.elements[i].mul(&self.elements[j])]
    }

    pub fn inverse_position(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    /// Whether `positions` is closed under composition and inverse.
    pub fn is_subgroup(&self, positions: &[usize]) -> bool {
        if positions.is_empty() || positions.iter().any(|&p| p >= self.order()) {
            return false;
        }
        let set: FxHashSet<usize> = positions.iter().copied().collect();
        if !set.contains(&0) {
            return false;
        }
        positions.iter().all(|&a| {
            set.contains(&self.inverse_position(a))
                && positions
                    .iter()
                    .all(|&b| set.contains(&self.mul_positions(a, b)))
        })
    }

    /// Positions of `{g ∈ G : g(v) = v}`.
    pub fn stabilizer(&self, v: u32) -> Result<Vec<usize>> {
        if v as usize >= self.degree {
            return input(format!("point {v} out of range for degree {}", self.degree));
        }
        Ok((0..self.order())
            .filter(|&i| self.elements[i].apply(v) == v)
            .collect())
    }

    /// Sorted positions of the conjugacy class of `elements[i]`.
    pub fn conjugacy_class(&self, i: usize) -> Vec<usize> {
        let mut class: Vec<usize> = conjugacy_class_under(&self.generators, &self.elements[i])
            .iter()
            .map(|g| self.index[g])
            .collect();
        class.sort_unstable();
        class
    }

    /// Positions of the subgroup generated by the given positions.
    pub fn subgroup_generated(&self, generators: &[usize]) -> Vec<usize> {
        let gens: Vec<Permutation> = generators.iter().map(|&i| self.elements[i].clone()).collect();
        let mut out: Vec<usize> = generate_elements(self.degree, &gens, usize::MAX)
            .expect("subgroup of an enumerated group is bounded by it")
            .iter()
            .map(|g| self.index[g])
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.perm_group().is_transitive()
    }

    /// `(semiregular, number of orbits)` for the subgroup at `positions`.
    pub fn is_semiregular(&self, positions: &[usize]) -> (bool, usize) {
        let elems: Vec<Permutation> = positions.iter().map(|&i| self.elements[i].clone()).collect();
        semiregularity(self.degree, &elems)
    }

    pub fn subgroup_shape(&self, positions: &[usize]) -> SubgroupShape {
        let elems: Vec<Permutation> = positions.iter().map(|&i| self.elements[i].clone()).collect();
        subgroup_shape(&elems)
    }

    pub fn elements_at(&self, positions: &[usize]) -> Vec<Permutation> {
        positions.iter().map(|&i| self.elements[i].clone()).collect()
    }
}
