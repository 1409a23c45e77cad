//! Intersection density of transitive actions and the tools around it.

pub mod bounds;
pub mod compute;
pub mod extension;
pub mod order2;
pub mod report;

pub use bounds::{on_points, quotient_upper_bound, semiregular_upper_bound, QuotientBound};
pub use compute::{
    intersection_density, is_intersecting, is_intersecting_on_points, is_point_stabilizer,
    AgreementOracle, DensityOptions, IntersectingSet, RoutePreference,
};
pub use extension::{stabilizer_extension_analysis, ExtensionReport};
pub use order2::{
    character_sum_check, class_constant_a111, generates_elementary_abelian_2_group, CharSumReport,
    CharacterTable, ClassConstant, ClassInfo, CHARACTER_SUM_TOLERANCE,
};
pub use report::{ratio_string, DensityReport, Route, StrictEkr};
