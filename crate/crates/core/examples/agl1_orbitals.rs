//! `AGL(1,q)` on the cosets of `⟨x ↦ x + 1⟩`: the translations give an
//! intersecting set of size `q`, and the orbital through `τ` is not
//! self-paired.

use intersection_density::constructions::build_agl1;
use intersection_density::density::{intersection_density, is_intersecting, DensityOptions};
use intersection_density::graph::{is_connected_orbital, is_self_paired, orbitals};
use intersection_density::permgroup::DEFAULT_ENUMERATION_CAP;
use intersection_density::psl2::Agl1;

fn main() -> intersection_density::Result<()> {
    let q = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    let agl = Agl1::new(q)?;
    let action = build_agl1(q)?;
    let translations = agl.translations();
    println!(
        "AGL(1,{q}): degree {}, translations intersecting: {}",
        action.degree(),
        is_intersecting(&action, &translations)?
    );
    let r = intersection_density(&action, DensityOptions::default())?;
    println!("omega = {}, rho = {}", r.omega, r.rho_string());

    let m = action.materialize(DEFAULT_ENUMERATION_CAP)?;
    let group = m.action_group();
    let tau = m.group.position(agl.tau()).expect("tau is in the group");
    let tau_coset = m.cosets.as_ref().expect("coset action").coset_of(tau);
    for o in orbitals(&group)?.iter().filter(|o| !o.is_trivial()) {
        let marker = if o.contains((0, tau_coset)) { "  <- H tau H" } else { "" };
        println!(
            "orbital {:?}: valency {}, self-paired {}, connected {}{marker}",
            o.representative(),
            o.valency(),
            is_self_paired(&group, o, DEFAULT_ENUMERATION_CAP)?,
            is_connected_orbital(&group, o)?
        );
    }
    Ok(())
}
