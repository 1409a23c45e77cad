use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use super::matrix::{Mat2, ProjMatrix};
use crate::error::{input, Error, Result};
use crate::finitefield::{Field, FieldElement};
use crate::permgroup::{enumerate_group, FiniteGroup, PermGroup, Permutation, StabChain};

/// `PSL(2,q)` acting on the `q + 1` points of the projective line.
///
/// Point `(1 : y)` has index `y` (the field index of `y`) and `(0 : 1)` has
/// index `q`; matrices act on column vectors.
#[derive(Clone, Debug)]
pub struct Psl2 {
    field: Field,
}

/// An enumerated `PSL(2,q)`: the permutation group together with the
/// canonical matrix of every element.
#[derive(Clone, Debug)]
pub struct Psl2Elements {
    pub group: FiniteGroup,
    pub matrices: Vec<ProjMatrix>,
}

/// An order-3 subgroup class of `PSL(2,q)`, named by its generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Order3Class {
    /// 1 for the reference class, 2 for the second class when `q = 3ⁿ`
    /// with `n` even.
    pub selector: u8,
    pub generator: ProjMatrix,
}

impl Psl2 {
    pub fn new(q: u64) -> Result<Self> {
        Ok(Psl2 {
            field: Field::with_order(q)?,
        })
    }

    pub fn over(field: Field) -> Self {
        Psl2 { field }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    /// `q(q² - 1) / gcd(2, q - 1)`.
    pub fn order(&self) -> u64 {
        let q = self.q();
        let d = if q % 2 == 1 { 2 } else { 1 };
        q * (q * q - 1) / d
    }

    pub fn degree(&self) -> usize {
        self.q() as usize + 1
    }

    pub fn element(&self, m: Mat2) -> Result<ProjMatrix> {
        ProjMatrix::canonical(m, &self.field)
    }

    /// Matrix from field indices.
    pub fn matrix(&self, a: u32, b: u32, c: u32, d: u32) -> Result<ProjMatrix> {
        let f = &self.field;
        if [a, b, c, d].iter().any(|&x| x >= f.q()) {
            return input("matrix entry outside the field");
        }
        self.element(Mat2::new(f.element(a), f.element(b), f.element(c), f.element(d)))
    }

    pub fn identity(&self) -> ProjMatrix {
        ProjMatrix::canonical_unchecked(Mat2::identity(&self.field), &self.field)
    }

    pub fn mul(&self, x: &ProjMatrix, y: &ProjMatrix) -> ProjMatrix {
        x.mul(y, &self.field)
    }

    pub fn inverse(&self, x: &ProjMatrix) -> ProjMatrix {
        x.inverse(&self.field)
    }

    pub fn element_order(&self, x: &ProjMatrix) -> u64 {
        x.order(&self.field)
    }

    fn point_of(&self, u: FieldElement, v: FieldElement) -> u32 {
        let f = &self.field;
        if u.is_zero() {
            f.q()
        } else {
            f.div(v, u).expect("u is nonzero").index()
        }
    }

    /// The permutation of the projective line induced by `m`.
    pub fn to_permutation(&self, m: &ProjMatrix) -> Permutation {
        let f = &self.field;
        let m = m.matrix();
        let mut images = Vec::with_capacity(self.degree());
        for y in f.elements() {
            // m · (1, y)ᵀ
            let u = f.add(m.a, f.mul(m.b, y));
            let v = f.add(m.c, f.mul(m.d, y));
            images.push(self.point_of(u, v));
        }
        images.push(self.point_of(m.b, m.d));
        Permutation::from_images_unchecked(images)
    }

    /// `T = [1 1; 0 1]`, `D = diag(ω, ω⁻¹)` with `ω` primitive, and
    /// `W = [0 -1; 1 0]`.
    pub fn generator_matrices(&self) -> Vec<ProjMatrix> {
        let f = &self.field;
        let (zero, one) = (f.zero(), f.one());
        let w = f.primitive_element();
        let winv = f.inv(w).expect("primitive element is a unit");
        let mut gens = vec![
            self.element(Mat2::new(one, one, zero, one)).unwrap(),
            self.element(Mat2::new(w, zero, zero, winv)).unwrap(),
            self.element(Mat2::new(zero, f.neg(one), one, zero)).unwrap(),
        ];
        gens.dedup();
        gens.retain(|g| !g.is_identity(f));
        gens
    }

    pub fn perm_group(&self) -> PermGroup {
        PermGroup::new(
            self.generator_matrices()
                .iter()
                .map(|m| self.to_permutation(m))
                .collect(),
        )
        .expect("generators share the projective line")
    }

    /// Enumerates the group and attaches matrices, checking that the
    /// matrix and permutation pictures agree element by element.
    pub fn enumerate(&self, cap: usize) -> Result<Psl2Elements> {
        let mats = self.generator_matrices();
        let perms: Vec<Permutation> = mats.iter().map(|m| self.to_permutation(m)).collect();
        let group = enumerate_group(&perms, cap)?;
        if group.order() as u64 != self.order() {
            return Err(Error::CrossCheck(format!(
                "PSL(2,{}) enumerated to {} elements, expected {}",
                self.q(),
                group.order(),
                self.order()
            )));
        }
        // breadth-first over matrices, recording which permutation each is
        let mut matrices: Vec<Option<ProjMatrix>> = vec![None; group.order()];
        matrices[0] = Some(self.identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let m = matrices[i].unwrap();
            for (gm, gp) in mats.iter().zip(&perms) {
                let j = group.position(&group.element(i).mul(gp)).unwrap();
                let mj = self.mul(&m, gm);
                match matrices[j] {
                    Some(existing) if existing != mj => {
                        return Err(Error::CrossCheck(format!(
                            "element {j} reached as two different matrices"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        if self.to_permutation(&mj) != *group.element(j) {
                            return Err(Error::CrossCheck(format!(
                                "matrix {mj} does not induce element {j}"
                            )));
                        }
                        matrices[j] = Some(mj);
                        queue.push_back(j);
                    }
                }
            }
        }
        Ok(Psl2Elements {
            group,
            matrices: matrices.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// Conjugacy class of `x` in matrix form, by orbit under conjugation by
    /// the generators. Sorted.
    pub fn conjugacy_class(&self, x: &ProjMatrix) -> Vec<ProjMatrix> {
        let gens = self.generator_matrices();
        let mut seen: FxHashSet<ProjMatrix> = FxHashSet::default();
        seen.insert(*x);
        let mut queue = VecDeque::from([*x]);
        while let Some(y) = queue.pop_front() {
            for s in &gens {
                let z = y.conjugate_by(s, &self.field);
                if seen.insert(z) {
                    queue.push_back(z);
                }
            }
        }
        let mut class: Vec<ProjMatrix> = seen.into_iter().collect();
        class.sort_unstable();
        class
    }

    /// Decides `M³ = ±I` from the trace alone: the trace is `1` or `-1`.
    pub fn order3_test_by_trace(&self, m: &ProjMatrix) -> Result<bool> {
        let f = &self.field;
        if m.is_identity(f) {
            return input("the trace test does not apply to the identity");
        }
        let t = m.trace(f);
        Ok(t == f.one() || t == f.neg(f.one()))
    }

    /// The first cube root of unity other than 1, when `q ≡ 1 (mod 3)`.
    pub fn cube_root_of_unity(&self) -> Option<FieldElement> {
        let f = &self.field;
        f.units().find(|&r| r != f.one() && f.pow(r, 3) == f.one())
    }

    /// `[1 x; 0 1]`, of order `p`.
    pub fn unipotent(&self, x: FieldElement) -> ProjMatrix {
        let f = &self.field;
        ProjMatrix::canonical_unchecked(Mat2::new(f.one(), x, f.zero(), f.one()), f)
    }

    /// One generator per conjugacy class of subgroups of order 3:
    /// `diag(r, r²)` when `q ≡ 1 (mod 3)`, `[0 -1; 1 -1]` when
    /// `q ≡ 2 (mod 3)`, and `[1 1; 0 1]` (plus `[1 t; 0 1]` with `t` the
    /// first non-square when the degree is even) when `q = 3ⁿ`.
    ///
    /// Non-conjugacy of the listed subgroups is verified by orbit
    /// computation.
    pub fn order3_subgroup_classes(&self) -> Result<Vec<Order3Class>> {
        if self.order() % 3 != 0 {
            return input(format!("3 does not divide |PSL(2,{})|", self.q()));
        }
        let f = &self.field;
        let (zero, one) = (f.zero(), f.one());
        let mut gens = Vec::new();
        if f.characteristic() == 3 {
            gens.push(self.unipotent(one));
            if f.degree() % 2 == 0 {
                let t = f.first_non_square().expect("odd field has non-squares");
                gens.push(self.unipotent(t));
            }
        } else if self.q() % 3 == 1 {
            let r = self.cube_root_of_unity().unwrap();
            gens.push(self.element(Mat2::new(r, zero, zero, f.mul(r, r)))?);
        } else {
            gens.push(self.element(Mat2::new(zero, f.neg(one), one, f.neg(one)))?);
        }
        for g in &gens {
            if self.element_order(g) != 3 {
                return Err(Error::CrossCheck(format!("{g} does not have order 3")));
            }
        }
        if gens.len() == 2 {
            let s = self.fixer_set(&gens[0])?;
            if s.binary_search(&gens[1]).is_ok() {
                return Err(Error::CrossCheck(
                    "the two order-3 subgroups are conjugate".into(),
                ));
            }
        }
        Ok(gens
            .into_iter()
            .enumerate()
            .map(|(i, generator)| Order3Class {
                selector: i as u8 + 1,
                generator,
            })
            .collect())
    }

    /// Elements fixing a coset of `⟨x⟩` for `x` of order 3: the union of the
    /// classes of `x` and `x⁻¹`. Sorted.
    pub fn fixer_set(&self, x: &ProjMatrix) -> Result<Vec<ProjMatrix>> {
        if self.element_order(x) != 3 {
            return input(format!("{x} does not generate a subgroup of order 3"));
        }
        let mut s = self.conjugacy_class(x);
        if s.binary_search(&self.inverse(x)).is_err() {
            s.extend(self.conjugacy_class(&self.inverse(x)));
            s.sort_unstable();
        }
        Ok(s)
    }

    /// An involution and an element of order 3 generating the whole group,
    /// or `None` if no such pair exists.
    ///
    /// The involution is fixed up to conjugacy (one class in `PSL(2,q)`),
    /// and all elements of order 3 are tried against it.
    pub fn two_three_generation(&self) -> Option<(ProjMatrix, ProjMatrix)> {
        let f = &self.field;
        let (zero, one) = (f.zero(), f.one());
        let involution = if f.characteristic() == 2 {
            self.unipotent(one)
        } else {
            self.element(Mat2::new(zero, f.neg(one), one, zero)).unwrap()
        };
        let classes = self.order3_subgroup_classes().ok()?;
        let i_perm = self.to_permutation(&involution);
        let degree = self.degree();
        let target = self.order();
        for class in classes {
            for y in self.fixer_set(&class.generator).ok()? {
                let gens = [i_perm.clone(), self.to_permutation(&y)];
                if StabChain::new(degree, &gens, &[]).order() == Some(target) {
                    return Some((involution, y));
                }
            }
        }
        None
    }

    /// Map from induced permutations back to matrices for a set of elements.
    pub fn permutation_index(&self, elements: &[ProjMatrix]) -> FxHashMap<Permutation, ProjMatrix> {
        elements.iter().map(|m| (self.to_permutation(m), *m)).collect()
    }
}
