//! `S_n` acting on the cosets of a 3-cycle: density `(n-1)/3`.
//!
//! Usage: `cargo run --release --example sym3_cosets -- [max_n]`

use intersection_density::constructions::build_sym3;
use intersection_density::density::{intersection_density, DensityOptions};

fn main() -> intersection_density::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for n in 4..=max_n {
        let action = build_sym3(n)?;
        let r = intersection_density(&action, DensityOptions::default())?;
        println!(
            "n = {n}: |S| = {:>4}, omega = {}, rho = {} (expected {}/3)",
            r.fixers,
            r.omega,
            r.rho_string(),
            n - 1
        );
    }
    Ok(())
}
