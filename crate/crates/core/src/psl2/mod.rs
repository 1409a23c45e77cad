//! `PSL(2,q)` on the projective line, its order-3 subgroups and trace
//! identities, and the affine group `AGL(1,q)`.

pub mod agl1;
pub mod group;
pub mod matrix;
pub mod trace;

pub use agl1::Agl1;
pub use group::{Order3Class, Psl2, Psl2Elements};
pub use matrix::{Mat2, ProjMatrix};
pub use trace::{
    verify_neighbourhood_classification, verify_trace_table, NeighbourhoodReport,
    TraceTableReport,
};
