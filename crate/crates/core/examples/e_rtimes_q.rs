//! The group `Z₂ⁿ ⋊ Q` on the cosets of `⟨e₁⟩`: stabilizers of order 2,
//! maximum intersecting sets of size `n + 1`, and a nonzero class constant.

use intersection_density::constructions::build_e_rtimes_q;
use intersection_density::density::{
    class_constant_a111, generates_elementary_abelian_2_group, intersection_density, DensityOptions,
};
use intersection_density::permgroup::Permutation;

fn main() -> intersection_density::Result<()> {
    for n in 3..=6 {
        let action = build_e_rtimes_q(n)?;
        let r = intersection_density(&action, DensityOptions::sequential())?;
        let e1 = action.stabilizer()[1].clone();
        let c = class_constant_a111(&action, &e1)?;
        let witness: Vec<Permutation> = r
            .witness
            .iter()
            .map(|w| Permutation::from_images(w.clone()))
            .collect::<Result<_, _>>()?;
        println!(
            "n = {n}: |G| = {}, |Q| = {}, |class(e1)| = {}, omega = {}, rho = {}, a111 = {}, witness elementary abelian: {}",
            r.order,
            r.annotations["|Q|"],
            c.class_size,
            r.omega,
            r.rho_string(),
            c.a111,
            generates_elementary_abelian_2_group(&witness)
        );
    }
    Ok(())
}
