//! Upper bounds on the density from semiregular subgroups and from block
//! quotients, next to the exact value.

use intersection_density::density::{
    intersection_density, quotient_upper_bound, semiregular_upper_bound, DensityOptions,
};
use intersection_density::permgroup::{PermGroup, Permutation, TransitiveAction};

fn main() -> intersection_density::Result<()> {
    // Z2 × D_p on 2p points: rotation i ↦ i+2 on both halves, the swap, a reflection
    for p in [3u32, 5, 7] {
        let n = 2 * p;
        let rotation = Permutation::from_images((0..n).map(|i| (i + 2) % n).collect())?;
        let swap = Permutation::from_images((0..n).map(|i| i ^ 1).collect())?;
        let reflection = Permutation::from_images((0..n).map(|i| (n - (i & !1)) % n | (i & 1)).collect())?;
        let group = PermGroup::new(vec![rotation.clone(), swap.clone(), reflection])?;
        let action = TransitiveAction::natural(format!("Z2 x D{}", 2 * p), group.clone(), 1000)?;
        let exact = intersection_density(&action, DensityOptions::sequential())?.rho;
        let semi = semiregular_upper_bound(&group, &[rotation.clone()], 1000)?;
        let two_blocks = quotient_upper_bound(&group, &[rotation], 1000, DensityOptions::sequential())?;
        println!(
            "degree {n}: rho = {exact}, semiregular bound = {semi}, quotient on {} blocks = {}",
            two_blocks.blocks.block_count(),
            two_blocks.bound
        );
        two_blocks.check(exact)?;
    }
    Ok(())
}
