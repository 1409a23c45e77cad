//! Group specifications on disk: write a construction out as JSON, read it
//! back and recompute.
//!
//! Usage: `cargo run --example group_files -- [spec.json]`

use intersection_density::constructions::{build_e_rtimes_q, load_group};
use intersection_density::density::{intersection_density, DensityOptions};
use intersection_density::permgroup::{GroupSpec, DEFAULT_ENUMERATION_CAP};

fn main() -> intersection_density::Result<()> {
    let path = match std::env::args().nth(1) {
        Some(p) => std::path::PathBuf::from(p),
        None => {
            let action = build_e_rtimes_q(4)?;
            let path = std::env::temp_dir().join("e_rtimes_q4.json");
            GroupSpec::from_action(&action).save(&path)?;
            println!("wrote {}", path.display());
            path
        }
    };
    let action = load_group(&path, DEFAULT_ENUMERATION_CAP)?;
    let r = intersection_density(&action, DensityOptions::sequential())?;
    println!("{}", r.to_json());
    Ok(())
}
