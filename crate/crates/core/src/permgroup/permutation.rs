use std::fmt;

use crate::error::{input, Result};

/// A bijection of `{0, …, degree-1}` stored as its image array.
///
/// Composition follows function notation: `p.compose(&q)` is `v ↦ p(q(v))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Validates that `images` is a bijection of `{0, …, len-1}`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return input("permutation must have degree at least 1");
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return input(format!("image array {images:?} is not a bijection on 0..{n}"));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        if degree == 0 {
            return input("permutation must have degree at least 1");
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree {
                    return input(format!("cycle point out of range for degree {degree}"));
                }
                if touched[a as usize] {
                    return input("cycles are not disjoint");
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.images[v as usize]
    }

    /// `self ∘ other`, checking degrees.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return input(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            ));
        }
        Ok(self.mul(other))
    }

    /// `self ∘ other` without the degree check.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `s ∘ self ∘ s⁻¹`.
    pub fn conjugate_by(&self, s: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (v, &w) in self.images.iter().enumerate() {
            out[s.images[v] as usize] = s.images[w as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(i, &x)| i as u32 == x)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = u32> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 == x)
            .map(|(i, _)| i as u32)
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start as u32];
            seen[start] = true;
            let mut v = self.images[start] as usize;
            while v != start {
                seen[v] = true;
                cycle.push(v as u32);
                v = self.images[v] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.mul(other) == other.mul(self)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// `p ∘ q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cs: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(n, cs).unwrap()
    }

    #[test]
    fn identity_composition() {
        let p = cyc(4, &[&[0, 2, 3]]);
        let id = Permutation::identity(4);
        assert_eq!(compose(&id, &p).unwrap(), p);
        assert_eq!(compose(&p, &p.inverse()).unwrap(), id);
    }

    #[test]
    fn transpositions_compose_to_three_cycle() {
        // by hand: v=0 -> (1 2) fixes 0 -> (0 1) sends it to 1; 1 -> 2 -> 2; 2 -> 1 -> 0
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        let c = compose(&a, &b).unwrap();
        assert_eq!(c.images(), &[1, 2, 0]);
        assert_eq!(c, cyc(3, &[&[0, 1, 2]]));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(compose(&a, &b).is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&Permutation::identity(5)), 1);
        assert_eq!(element_order(&cyc(3, &[&[0, 1, 2]])), 3);
        assert_eq!(element_order(&cyc(5, &[&[0, 1], &[2, 3, 4]])), 6);
    }

    #[test]
    fn conjugation_matches_definition() {
        let g = cyc(5, &[&[0, 1, 2]]);
        let s = cyc(5, &[&[0, 3], &[1, 4]]);
        let direct = s.mul(&g).mul(&s.inverse());
        assert_eq!(g.conjugate_by(&s), direct);
        assert_eq!(direct, cyc(5, &[&[3, 4, 2]]));
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(cyc(5, &[&[0, 1], &[2, 3, 4]]).to_string(), "(0 1)(2 3 4)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }
}
