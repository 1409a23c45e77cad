use num_rational::Ratio;

use super::compute::{intersection_density, DensityOptions};
use super::report::DensityReport;
use crate::error::{input, Error, Result};
use crate::permgroup::{
    generate_elements, orbit_partition, quotient_action, semiregularity, BlockSystem,
    MaterializedAction, PermGroup, Permutation, TransitiveAction,
};

/// The bound `ρ(G) ≤ k` from a semiregular subgroup `K = ⟨generators⟩` with
/// `k` orbits. `group` acts naturally on its points.
pub fn semiregular_upper_bound(
    group: &PermGroup,
    generators: &[Permutation],
    cap: usize,
) -> Result<Ratio<u64>> {
    let k = semiregular_subgroup(group, generators, cap)?;
    let (_, orbits) = semiregularity(group.degree(), &k);
    Ok(Ratio::from_integer(orbits as u64))
}

fn semiregular_subgroup(
    group: &PermGroup,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>> {
    if let Some(g) = generators.iter().find(|g| !group.contains(g)) {
        return input(format!("{g} is not an element of the group"));
    }
    let k = generate_elements(group.degree(), generators, cap)?;
    if !semiregularity(group.degree(), &k).0 {
        return Err(Error::Hypothesis("subgroup is not semiregular".into()));
    }
    Ok(k)
}

/// The bound `ρ(G) ≤ ρ(Ḡ)` where `Ḡ` is the action on the orbits of a
/// semiregular subgroup forming a block system.
#[derive(Clone, Debug)]
pub struct QuotientBound {
    pub blocks: BlockSystem,
    pub quotient_order: u64,
    pub bound: Ratio<u64>,
    /// Density report of `Ḡ`; absent when there is a single block.
    pub quotient: Option<DensityReport>,
}

impl QuotientBound {
    /// Errors if `rho` violates the bound.
    pub fn check(&self, rho: Ratio<u64>) -> Result<()> {
        if rho > self.bound {
            return Err(Error::CrossCheck(format!(
                "ρ(G) = {rho} exceeds the quotient bound {}",
                self.bound
            )));
        }
        Ok(())
    }
}

pub fn quotient_upper_bound(
    group: &PermGroup,
    generators: &[Permutation],
    cap: usize,
    options: DensityOptions,
) -> Result<QuotientBound> {
    if !group.is_transitive() {
        return input("group is not transitive");
    }
    semiregular_subgroup(group, generators, cap)?;
    let blocks = orbit_partition(group.degree(), generators)?;
    if !blocks.is_invariant_under(group.generators()) {
        return Err(Error::Hypothesis(
            "orbits of the subgroup are not blocks of the group".into(),
        ));
    }
    let q = quotient_action(group, &blocks)?;
    if blocks.block_count() == 1 {
        return Ok(QuotientBound {
            blocks,
            quotient_order: q.order,
            bound: Ratio::from_integer(1),
            quotient: None,
        });
    }
    let action = TransitiveAction::natural("quotient", q.group, cap)?;
    let report = intersection_density(&action, options)?;
    Ok(QuotientBound {
        blocks,
        quotient_order: q.order,
        bound: report.rho,
        quotient: Some(report),
    })
}

/// The permutation of the studied points induced by `g`.
pub fn on_points(action: &MaterializedAction, g: &Permutation) -> Result<Permutation> {
    match action.group.position(g) {
        Some(i) => Ok(action.point_image(i)),
        None => input(format!("{g} is not an element of the group")),
    }
}
