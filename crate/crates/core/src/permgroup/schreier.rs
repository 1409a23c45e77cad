//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Used for group orders and membership when full enumeration is skipped,
//! and for point-stabilizer generators.

use super::permutation::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    generators: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `transversal[β]` maps the base point to `β`.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut level = Level {
            base,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base as usize] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            let u = self.transversal[beta as usize].clone().unwrap();
            for s in &self.generators {
                let gamma = s.apply(beta);
                if self.transversal[gamma as usize].is_none() {
                    self.transversal[gamma as usize] = Some(s.mul(&u));
                    self.orbit.push(gamma);
                }
            }
            i += 1;
        }
    }
}

/// A base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `base_prefix`.
    pub fn new(degree: usize, generators: &[Permutation], base_prefix: &[u32]) -> Self {
        let gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut base: Vec<u32> = Vec::new();
        for &b in base_prefix {
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                let moved = (0..degree as u32).find(|&v| g.apply(v) != v).unwrap();
                base.push(moved);
            }
        }
        let mut levels: Vec<Level> = base.iter().map(|&b| Level::new(b, degree)).collect();
        for (i, level) in levels.iter_mut().enumerate() {
            level.generators = gens
                .iter()
                .filter(|g| base[..i].iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            level.rebuild_orbit(degree);
        }
        let mut chain = StabChain { degree, levels };
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let level = i as usize;
            match self.find_missing(level) {
                Some((residue, j)) => {
                    if j == self.levels.len() {
                        let moved = (0..self.degree as u32)
                            .find(|&v| residue.apply(v) != v)
                            .unwrap();
                        self.levels.push(Level::new(moved, self.degree));
                    }
                    for l in (level + 1)..=j {
                        self.levels[l].generators.push(residue.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// First Schreier generator at `level` that does not sift through the
    /// levels below it.
    fn find_missing(&self, level: usize) -> Option<(Permutation, usize)> {
        let lv = &self.levels[level];
        for &beta in &lv.orbit {
            let u_beta = lv.transversal[beta as usize].as_ref().unwrap();
            for s in &lv.generators {
                let gamma = s.apply(beta);
                let u_gamma = lv.transversal[gamma as usize].as_ref().unwrap();
                let h = u_gamma.inverse().mul(&s.mul(u_beta));
                let (residue, j) = self.sift_from(h, level + 1);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base);
            match &level.transversal[beta as usize] {
                Some(u) => g = u.inverse().mul(&g),
                None => return (g, l),
            }
        }
        let len = self.levels.len();
        (g, len)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Product of the basic orbit lengths, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        self.levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g.clone(), 0).0.is_identity()
    }

    /// Strong generators of the pointwise stabilizer of the first `depth`
    /// base points. An empty list means the stabilizer is trivial.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.generators.clone())
            .unwrap_or_default()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }
}
