//! Bitset graphs and the graphs attached to a permutation group.

pub mod bitgraph;
pub mod cayley;
pub mod export;
pub mod orbital;

pub use bitgraph::BitGraph;
pub use cayley::{
    complement_derangement_graph, conjugation_inversion_orbits, fixer_neighborhood_graph,
    fixing_positions, inverse_map_is_automorphism, is_conjugation_invariant,
    left_translations_are_automorphisms, DEFAULT_EXPLICIT_GRAPH_CAP,
};
pub use export::{from_dimacs, orbital_to_dot, summary, to_dimacs, GraphSummary};
pub use orbital::{
    double_coset_graph, is_connected_orbital, is_self_paired, orbitals, quotient_graph,
    CosetDigraph, OrbitalDigraph,
};
