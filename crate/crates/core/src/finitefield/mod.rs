//! Arithmetic in `GF(p^e)` and the Paley graph.

pub mod field;
pub mod paley;
mod poly;

pub use field::{prime_power, Field, FieldElement, FieldSpec};
pub use paley::{paley_graph, paley_graph_over};
