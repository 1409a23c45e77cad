use crate::error::{input, Result};
use crate::finitefield::Field;
use crate::permgroup::{PermGroup, Permutation};

/// `AGL(1,q)`: the maps `x ↦ ax + b` on `GF(q)`, as permutations of the
/// field indices.
#[derive(Clone, Debug)]
pub struct Agl1 {
    field: Field,
    sigma: Permutation,
    tau: Permutation,
}

impl Agl1 {
    /// Requires `q = p^e` with `p` odd and `e > 1`.
    pub fn new(q: u64) -> Result<Self> {
        let field = Field::with_order(q)?;
        if field.degree() == 1 || field.characteristic() == 2 {
            return input(format!(
                "AGL(1,q) here needs q = p^e with p odd and e > 1; got q = {q}"
            ));
        }
        let sigma = Self::affine_map(&field, field.one().index(), field.one().index());
        let a = field.primitive_element();
        let tau = Self::affine_map(&field, a.index(), 0);
        Ok(Agl1 { field, sigma, tau })
    }

    fn affine_map(field: &Field, a: u32, b: u32) -> Permutation {
        let (a, b) = (field.element(a), field.element(b));
        let images = field
            .elements()
            .map(|x| field.add(field.mul(a, x), b).index())
            .collect();
        Permutation::from_images_unchecked(images)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> u64 {
        let q = self.field.q() as u64;
        q * (q - 1)
    }

    /// `σ: x ↦ x + 1`.
    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// `τ: x ↦ ax` with `a` the primitive element.
    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// `x ↦ ax + b` for field indices `a ≠ 0` and `b`.
    pub fn map(&self, a: u32, b: u32) -> Result<Permutation> {
        if a == 0 || a >= self.field.q() || b >= self.field.q() {
            return input("x ↦ ax + b needs a nonzero a and both in the field");
        }
        Ok(Self::affine_map(&self.field, a, b))
    }

    /// All translations `x ↦ x + b`, identity first.
    pub fn translations(&self) -> Vec<Permutation> {
        (0..self.field.q())
            .map(|b| Self::affine_map(&self.field, 1, b))
            .collect()
    }

    /// Generated by the translations by a basis of the prime-field vector
    /// space together with `τ`.
    pub fn perm_group(&self) -> PermGroup {
        let p = self.field.characteristic();
        let mut gens: Vec<Permutation> = (0..self.field.degree())
            .map(|i| Self::affine_map(&self.field, 1, p.pow(i)))
            .collect();
        gens.push(self.tau.clone());
        PermGroup::new(gens).expect("generators act on the field")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (q, order) in [(9, 72), (25, 600), (27, 702)] {
            let g = Agl1::new(q).unwrap();
            assert_eq!(g.perm_group().order().unwrap(), order);
            assert_eq!(g.order(), order);
            assert_eq!(g.sigma().order(), g.field().characteristic() as u64);
        }
        assert!(Agl1::new(7).is_err());
        assert!(Agl1::new(8).is_err());
    }
}
