use serde::{Deserialize, Serialize};

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{input, Error, Result};
use crate::util::UnionFind;

/// A partition of the points into blocks of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSystem {
    blocks: Vec<Vec<u32>>,
    #[serde(skip)]
    block_of: Vec<u32>,
}

impl BlockSystem {
    /// Validates a disjoint cover of `{0, …, degree-1}` by equal-size blocks.
    /// Blocks are normalised: each sorted, ordered by smallest point.
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut blocks: Vec<Vec<u32>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        let Some(size) = blocks.first().map(Vec::len) else {
            return input("partition has no blocks");
        };
        if size == 0 || blocks.iter().any(|b| b.len() != size) {
            return input("blocks must be non-empty and of equal size");
        }
        let mut block_of = vec![u32::MAX; degree];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v as usize >= degree || block_of[v as usize] != u32::MAX {
                    return input("blocks are not a partition of the point set");
                }
                block_of[v as usize] = i as u32;
            }
        }
        if block_of.contains(&u32::MAX) {
            return input("blocks do not cover the point set");
        }
        Ok(BlockSystem { blocks, block_of })
    }

    pub fn singletons(degree: usize) -> Self {
        Self::from_blocks(degree, (0..degree as u32).map(|v| vec![v]).collect()).unwrap()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, v: u32) -> usize {
        self.block_of[v as usize] as usize
    }

    /// Whether every permutation maps blocks onto blocks.
    pub fn is_invariant_under(&self, perms: &[Permutation]) -> bool {
        perms.iter().all(|g| self.block_image(g).is_some())
    }

    /// The induced permutation of the blocks, if `g` respects the partition.
    pub fn block_image(&self, g: &Permutation) -> Option<Permutation> {
        if g.degree() != self.degree() {
            return None;
        }
        let mut images = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let target = self.block_of[g.apply(b[0]) as usize];
            if b.iter().any(|&v| self.block_of[g.apply(v) as usize] != target) {
                return None;
            }
            images.push(target);
        }
        Permutation::from_images(images).ok()
    }
}

/// The finest `G`-invariant partition with `u` and `v` in one block.
pub fn minimal_block_system(group: &PermGroup, u: u32, v: u32) -> Result<BlockSystem> {
    let n = group.degree();
    if u as usize >= n || v as usize >= n {
        return input("point out of range");
    }
    if u == v {
        return input("minimal block system needs two distinct points");
    }
    if !group.is_transitive() {
        return input("minimal block system needs a transitive group");
    }
    let mut uf = UnionFind::new(n);
    uf.union(u as usize, v as usize);
    let mut queue = vec![(u, v)];
    while let Some((a, b)) = queue.pop() {
        for s in group.generators() {
            let (x, y) = (s.apply(a), s.apply(b));
            let (rx, ry) = (uf.find(x as usize), uf.find(y as usize));
            if rx != ry {
                uf.union(rx, ry);
                queue.push((x, y));
            }
        }
    }
    let blocks = uf
        .classes()
        .into_iter()
        .map(|c| c.into_iter().map(|x| x as u32).collect())
        .collect();
    BlockSystem::from_blocks(n, blocks)
}

/// The action induced on the blocks.
#[derive(Clone, Debug)]
pub struct QuotientAction {
    pub group: PermGroup,
    pub order: u64,
    pub kernel_order: u64,
}

pub fn quotient_action(group: &PermGroup, blocks: &BlockSystem) -> Result<QuotientAction> {
    if blocks.degree() != group.degree() {
        return input("block system degree differs from group degree");
    }
    let mut images = Vec::with_capacity(group.generators().len());
    for g in group.generators() {
        match blocks.block_image(g) {
            Some(p) => images.push(p),
            None => return input("partition is not invariant under the group"),
        }
    }
    let quotient = PermGroup::new(images)?;
    let order = quotient.order()?;
    let full = group.order()?;
    if full % order != 0 {
        return Err(Error::CrossCheck(
            "quotient order does not divide group order".into(),
        ));
    }
    Ok(QuotientAction {
        group: quotient,
        order,
        kernel_order: full / order,
    })
}

/// Orbits of `⟨generators⟩` as a block system (equal sizes required).
pub fn orbit_partition(degree: usize, generators: &[Permutation]) -> Result<BlockSystem> {
    let orbits = super::group::orbits_under(degree, generators);
    BlockSystem::from_blocks(degree, orbits)
}
