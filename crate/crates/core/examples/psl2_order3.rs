//! Intersection density of PSL(2,q) on the cosets of an order-3 subgroup.
//!
//! Usage: `cargo run --release --example psl2_order3 -- [q ...]`

use intersection_density::constructions::{build_psl2_char3, build_psl2_z3};
use intersection_density::density::{intersection_density, DensityOptions};

fn main() -> intersection_density::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let qs = if args.is_empty() { vec![4, 7, 13, 16, 27] } else { args };
    for q in qs {
        let actions = if q % 3 == 0 {
            let n = q.ilog(3);
            let classes: &[u8] = if n % 2 == 0 { &[1, 2] } else { &[1] };
            classes
                .iter()
                .map(|&c| build_psl2_char3(n, c))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            vec![build_psl2_z3(q)?]
        };
        for action in actions {
            let r = intersection_density(&action, DensityOptions::default())?;
            println!(
                "{:<36} |S| = {:<5} omega = {:<3} rho = {:<4} strict-EKR = {}  ({:.2}s)",
                r.group, r.fixers, r.omega, r.rho_string(), r.strict_ekr, r.elapsed_secs
            );
        }
    }
    Ok(())
}
