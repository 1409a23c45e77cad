//! Exact intersection density of finite transitive permutation groups.
//!
//! An intersecting set of a permutation group `G` is a subset in which every
//! two elements agree on at least one point. Its size divided by the order of
//! a point stabilizer is its density, and the intersection density `ρ(G)` is
//! the maximum over all intersecting sets. Intersecting sets are exactly the
//! cliques of the complement of the derangement graph, so `ρ(G)` is computed
//! here by exact maximum-clique search, usually on the neighbourhood of the
//! identity (the graph on the non-identity point-fixing elements).
//!
//! The crate is organised bottom-up:
//!
//! * [`permgroup`] permutations, group enumeration, stabilizer chains,
//!   coset actions and block systems;
//! * [`finitefield`] arithmetic in `GF(p^e)` and Paley graphs;
//! * [`psl2`] `PSL(2,q)` and `AGL(1,q)` as concrete groups;
//! * [`graph`] bitset graphs, derangement-graph complements and orbitals;
//! * [`clique`] the exact maximum-clique solver;
//! * [`density`] intersection density, EKR verdicts and the structural checks
//!   built on them;
//! * [`constructions`] one-call builders for the named group families;
//! * [`verify`] the reproduction table driven by the `ekr verify-paper`
//!   command.

pub mod clique;
pub mod constructions;
pub mod density;
pub mod error;
pub mod finitefield;
pub mod graph;
pub mod permgroup;
pub mod psl2;
pub mod verify;

mod util;

pub use error::{Error, Result};
