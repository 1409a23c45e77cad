//! Permutations and permutation groups.

pub mod action;
pub mod blocks;
pub mod group;
pub mod permutation;
pub mod schreier;
pub mod spec;

pub use action::{coset_action, ActionKind, CosetAction, MaterializedAction, TransitiveAction};
pub use blocks::{minimal_block_system, orbit_partition, quotient_action, BlockSystem, QuotientAction};
pub use group::{
    conjugacy_class_under, enumerate_group, generate_elements, semiregularity, subgroup_shape,
    FiniteGroup, PermGroup, SubgroupShape, DEFAULT_ENUMERATION_CAP,
};
pub use permutation::{compose, element_order, Permutation};
pub use schreier::StabChain;
pub use spec::{GroupSpec, SubgroupSpec};
