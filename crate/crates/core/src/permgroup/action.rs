//! Coset actions and the transitive actions whose density is studied.

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::group::{
    conjugacy_class_under, enumerate_group, generate_elements, FiniteGroup, PermGroup,
};
use super::permutation::Permutation;
use crate::error::{input, Error, Result};

/// The action of a group on the left cosets `gH` of a subgroup.
#[derive(Clone, Debug)]
pub struct CosetAction {
    coset_of: Vec<u32>,
    representatives: Vec<usize>,
    generator_images: Vec<Permutation>,
    image: FiniteGroup,
    kernel: Vec<usize>,
}

impl CosetAction {
    pub fn degree(&self) -> usize {
        self.representatives.len()
    }

    /// The permutation group on cosets. Its designated subgroup is the
    /// stabilizer of the coset `H` itself, which is point 0.
    pub fn image_group(&self) -> &FiniteGroup {
        &self.image
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    /// Positions (in the acting group) of the kernel of the action.
    pub fn kernel(&self) -> &[usize] {
        &self.kernel
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel.len() == 1
    }

    pub fn coset_of(&self, position: usize) -> u32 {
        self.coset_of[position]
    }

    /// Position of a representative of coset `c`; coset 0 is `H`.
    pub fn representative(&self, c: u32) -> usize {
        self.representatives[c as usize]
    }

    /// The permutation of the cosets induced by the element at `position`.
    pub fn element_image(&self, group: &FiniteGroup, position: usize) -> Permutation {
        let g = group.element(position);
        let images = self
            .representatives
            .iter()
            .map(|&r| self.coset_of[group.position(&g.mul(group.element(r))).unwrap()])
            .collect();
        Permutation::from_images_unchecked(images)
    }
}

/// Left-coset action of `group` on the cosets of the subgroup at `subgroup`.
///
/// Cosets are numbered with `H` as point 0 and the rest in order of first
/// appearance in the element list.
pub fn coset_action(group: &FiniteGroup, subgroup: &[usize]) -> Result<CosetAction> {
    let mut h: Vec<usize> = subgroup.to_vec();
    h.sort_unstable();
    h.dedup();
    if !group.is_subgroup(&h) {
        return input("coset action needs a subgroup closed under composition and inverse");
    }
    let mut coset_of = vec![u32::MAX; group.order()];
    let mut representatives = Vec::new();
    for y in 0..group.order() {
        if coset_of[y] != u32::MAX {
            continue;
        }
        let c = representatives.len() as u32;
        representatives.push(y);
        for &k in &h {
            coset_of[group.mul_positions(y, k)] = c;
        }
    }
    let image_of = |g: &Permutation| -> Permutation {
        let images = representatives
            .iter()
            .map(|&r| coset_of[group.position(&g.mul(group.element(r))).unwrap()])
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let generator_images: Vec<Permutation> = group.generators().iter().map(image_of).collect();
    let image = enumerate_group(&generator_images, group.order() + 1)?;
    let stab = image.stabilizer(0)?;
    let image = image.with_designated_subgroup(stab)?;
    let kernel: Vec<usize> = (0..group.order())
        .filter(|&i| {
            let g = group.element(i);
            representatives
                .iter()
                .all(|&r| coset_of[group.position(&g.mul(group.element(r))).unwrap()] == coset_of[r])
        })
        .collect();
    Ok(CosetAction {
        coset_of,
        representatives,
        generator_images,
        image,
        kernel,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionKind {
    /// The group's own action on `{0, …, degree-1}`; `H = G_0`.
    Natural,
    /// The action on the left cosets of the designated subgroup `H`.
    Cosets,
}

/// A transitive action described by a faithful permutation substrate and
/// the point stabilizer `H` of the studied action.
///
/// For coset actions the points are never materialised: an element fixes a
/// coset `xH` exactly when it lies in `xHx⁻¹`, so everything the density
/// computation needs is carried by `H` and conjugation.
#[derive(Clone, Debug)]
pub struct TransitiveAction {
    label: String,
    group: PermGroup,
    order: u64,
    stabilizer: Vec<Permutation>,
    kind: ActionKind,
    annotations: Vec<(String, String)>,
}

impl TransitiveAction {
    /// The natural action of a transitive permutation group.
    pub fn natural(label: impl Into<String>, group: PermGroup, cap: usize) -> Result<Self> {
        if !group.is_transitive() {
            return input("group is not transitive on its points");
        }
        let order = group.order()?;
        let stabilizer = group.point_stabilizer(0, cap)?;
        if order != group.degree() as u64 * stabilizer.len() as u64 {
            return Err(Error::CrossCheck(format!(
                "|G| = {order} but degree × |G_0| = {} × {}",
                group.degree(),
                stabilizer.len()
            )));
        }
        Ok(TransitiveAction {
            label: label.into(),
            group,
            order,
            stabilizer,
            kind: ActionKind::Natural,
            annotations: Vec::new(),
        })
    }

    /// The action on left cosets of `⟨subgroup_generators⟩`.
    pub fn on_cosets(
        label: impl Into<String>,
        group: PermGroup,
        subgroup_generators: &[Permutation],
        cap: usize,
    ) -> Result<Self> {
        let degree = group.degree();
        if subgroup_generators.iter().any(|g| g.degree() != degree) {
            return input("subgroup generators have the wrong degree");
        }
        let chain = group.stabilizer_chain(&[]);
        if let Some(g) = subgroup_generators.iter().find(|g| !chain.contains(g)) {
            return input(format!("subgroup generator {g} is not in the group"));
        }
        let order = chain
            .order()
            .ok_or_else(|| Error::Input("group order overflows u64".into()))?;
        let stabilizer = generate_elements(degree, subgroup_generators, cap)?;
        if order % stabilizer.len() as u64 != 0 {
            return Err(Error::CrossCheck("|H| does not divide |G|".into()));
        }
        Ok(TransitiveAction {
            label: label.into(),
            group,
            order,
            stabilizer,
            kind: ActionKind::Cosets,
            annotations: Vec::new(),
        })
    }

    /// Coset action if the group carries a designated subgroup, otherwise
    /// the natural action.
    pub fn from_finite_group(label: impl Into<String>, group: &FiniteGroup) -> Result<Self> {
        let label = label.into();
        match group.designated_subgroup() {
            Some(h) => {
                let gens = group.elements_at(h);
                let action =
                    Self::on_cosets(label, group.perm_group(), &gens, group.order() + 1)?;
                if action.order != group.order() as u64 {
                    return Err(Error::CrossCheck(
                        "stabilizer-chain order differs from enumerated order".into(),
                    ));
                }
                Ok(action)
            }
            None => Self::natural(label, group.perm_group(), group.order() + 1),
        }
    }

    pub fn annotate(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.annotations.push((key.into(), value.into()));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree of the studied action, `|G : H|`.
    pub fn degree(&self) -> u64 {
        self.order / self.stabilizer.len() as u64
    }

    /// Elements of `H`, sorted, identity first.
    pub fn stabilizer(&self) -> &[Permutation] {
        &self.stabilizer
    }

    pub fn stabilizer_order(&self) -> u64 {
        self.stabilizer.len() as u64
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    pub fn annotations(&self) -> &[(String, String)] {
        &self.annotations
    }

    /// Non-identity elements fixing at least one point: the union of the
    /// conjugacy classes of `H \ {1}`. Sorted.
    pub fn fixer_set(&self) -> Vec<Permutation> {
        let mut out: FxHashSet<Permutation> = FxHashSet::default();
        for h in &self.stabilizer {
            if h.is_identity() || out.contains(h) {
                continue;
            }
            out.extend(conjugacy_class_under(self.group.generators(), h));
        }
        let mut out: Vec<Permutation> = out.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// All point stabilizers, i.e. the distinct conjugates of `H`, each as a
    /// sorted element list.
    pub fn point_stabilizers(&self) -> Vec<Vec<Permutation>> {
        let mut seen: FxHashSet<Vec<Permutation>> = FxHashSet::default();
        seen.insert(self.stabilizer.clone());
        let mut queue = vec![self.stabilizer.clone()];
        while let Some(k) = queue.pop() {
            for s in self.group.generators() {
                let mut c: Vec<Permutation> = k.iter().map(|x| x.conjugate_by(s)).collect();
                c.sort_unstable();
                if seen.insert(c.clone()) {
                    queue.push(c);
                }
            }
        }
        let mut out: Vec<Vec<Permutation>> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// A small generating set of `H`.
    pub fn stabilizer_generators(&self) -> Vec<Permutation> {
        let degree = self.group.degree();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: FxHashSet<Permutation> = FxHashSet::default();
        span.insert(Permutation::identity(degree));
        for h in &self.stabilizer {
            if span.contains(h) {
                continue;
            }
            gens.push(h.clone());
            span = generate_elements(degree, &gens, usize::MAX)
                .expect("subgroup of H is finite")
                .into_iter()
                .collect();
        }
        gens
    }

    /// Enumerates the group with `H` designated.
    pub fn to_finite_group(&self, cap: usize) -> Result<FiniteGroup> {
        let g = self.group.enumerate(cap)?;
        if g.order() as u64 != self.order {
            return Err(Error::CrossCheck(format!(
                "enumerated order {} differs from stabilizer-chain order {}",
                g.order(),
                self.order
            )));
        }
        let positions: Vec<usize> = self
            .stabilizer
            .iter()
            .map(|h| g.position(h).expect("H lies in G"))
            .collect();
        g.with_designated_subgroup(positions)
    }

    /// The studied action as an explicit permutation group: the group itself
    /// for natural actions, the coset action otherwise.
    pub fn materialize(&self, cap: usize) -> Result<MaterializedAction> {
        let group = self.to_finite_group(cap)?;
        let cosets = match self.kind {
            ActionKind::Natural => None,
            ActionKind::Cosets => Some(coset_action(&group, group.designated_subgroup().unwrap())?),
        };
        Ok(MaterializedAction { group, cosets })
    }
}

/// An enumerated group together with the permutations it induces on the
/// points of the studied action.
#[derive(Clone, Debug)]
pub struct MaterializedAction {
    pub group: FiniteGroup,
    pub cosets: Option<CosetAction>,
}

impl MaterializedAction {
    pub fn degree(&self) -> usize {
        match &self.cosets {
            Some(c) => c.degree(),
            None => self.group.degree(),
        }
    }

    /// The permutation of the studied points induced by the element at
    /// `position`.
    pub fn point_image(&self, position: usize) -> Permutation {
        match &self.cosets {
            Some(c) => c.element_image(&self.group, position),
            None => self.group.element(position).clone(),
        }
    }

    /// The permutation group on the studied points.
    pub fn action_group(&self) -> PermGroup {
        match &self.cosets {
            Some(c) => PermGroup::new(c.generator_images().to_vec()).unwrap(),
            None => self.group.perm_group(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::group::DEFAULT_ENUMERATION_CAP;

    fn cyc(n: usize, cs: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cs).unwrap()
    }

    fn s4() -> FiniteGroup {
        enumerate_group(&[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])], 1000).unwrap()
    }

    #[test]
    fn whole_group_gives_trivial_action() {
        let g = s4();
        let all: Vec<usize> = (0..g.order()).collect();
        let a = coset_action(&g, &all).unwrap();
        assert_eq!(a.degree(), 1);
        assert_eq!(a.image_group().order(), 1);
        assert_eq!(a.kernel().len(), 24);
    }

    #[test]
    fn s4_on_cosets_of_three_cycle() {
        let g = s4();
        let x = g.position(&cyc(4, &[&[0, 1, 2]])).unwrap();
        let h = g.subgroup_generated(&[x]);
        let a = coset_action(&g, &h).unwrap();
        assert_eq!(a.degree(), 8);
        let img = a.image_group();
        assert!(img.is_transitive());
        assert_eq!(img.designated_subgroup().unwrap().len(), 3);
        assert!(a.is_faithful());
        // brute-force coset table: y and z share a coset iff y⁻¹z ∈ H
        for y in 0..24 {
            for z in 0..24 {
                let same = h.contains(&g.mul_positions(g.inverse_position(y), z));
                assert_eq!(same, a.coset_of(y) == a.coset_of(z));
            }
        }
    }

    #[test]
    fn coset_action_of_a_stabilizer_reproduces_the_action() {
        let g = s4();
        for v in 0..4 {
            let st = g.stabilizer(v).unwrap();
            let a = coset_action(&g, &st).unwrap();
            assert_eq!(a.degree(), 4);
            assert!(a.image_group().is_transitive());
            assert_eq!(a.image_group().designated_subgroup().unwrap().len(), st.len());
        }
    }

    #[test]
    fn rejects_non_subgroups() {
        let g = s4();
        // position 2 is a 4-cycle, whose square is missing
        assert!(coset_action(&g, &[0, 2]).is_err());
    }

    #[test]
    fn transitive_action_fixers_match_explicit_coset_action() {
        let gens = vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])];
        let act = TransitiveAction::on_cosets(
            "s4/z3",
            PermGroup::new(gens).unwrap(),
            &[cyc(4, &[&[0, 1, 2]])],
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap();
        assert_eq!(act.degree(), 8);
        let fixers = act.fixer_set();
        let m = act.materialize(1000).unwrap();
        let direct: Vec<Permutation> = (1..m.group.order())
            .filter(|&i| m.point_image(i).has_fixed_point())
            .map(|i| m.group.element(i).clone())
            .collect();
        let mut direct = direct;
        direct.sort();
        assert_eq!(fixers, direct);
        assert_eq!(act.point_stabilizers().len(), 4);
    }

    #[test]
    fn natural_action_rejects_intransitive() {
        let g = PermGroup::new(vec![cyc(4, &[&[0, 1]])]).unwrap();
        assert!(TransitiveAction::natural("x", g, 100).is_err());
    }
}
