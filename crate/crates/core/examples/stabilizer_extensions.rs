//! Extending an order-3 point stabilizer to a larger intersecting set.

use intersection_density::clique::SolverOptions;
use intersection_density::constructions::{build_psl2_char3, build_psl2_z3};
use intersection_density::density::stabilizer_extension_analysis;

fn main() -> intersection_density::Result<()> {
    let actions = vec![build_psl2_z3(4)?, build_psl2_z3(7)?, build_psl2_z3(13)?, build_psl2_char3(3, 1)?];
    for action in actions {
        let r = stabilizer_extension_analysis(&action, SolverOptions::default(), 100_000)?;
        println!(
            "{}: extenders {}, largest extension {:?}, closures intersecting {}, shapes {:?}",
            action.label(),
            r.extenders,
            r.max_extension,
            r.closures_intersecting,
            r.shapes
        );
        if r.omega == 4 {
            println!(
                "  {} maximum basic sets of size 4, elements in distinct stabilizers: {}",
                r.size_four_sets, r.distinct_stabilizers
            );
        }
    }
    Ok(())
}
