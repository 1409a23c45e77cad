//! Stabilizers of order 2: the class constant `a111` against the EKR
//! property, and the character-sum form of the same criterion.

use intersection_density::density::{
    character_sum_check, class_constant_a111, intersection_density, CharacterTable, DensityOptions,
};
use intersection_density::permgroup::{PermGroup, Permutation, TransitiveAction};

const S3_TABLE: &str = r#"{
  "classes": [{"size": 1, "rep_order": 1}, {"size": 3, "rep_order": 2}, {"size": 2, "rep_order": 3}],
  "chars": [[[1,0],[1,0],[1,0]], [[1,0],[-1,0],[1,0]], [[2,0],[0,0],[-1,0]]]
}"#;

fn dihedral(m: u32) -> intersection_density::Result<PermGroup> {
    let rotation = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect())?;
    let reflection = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
    PermGroup::new(vec![rotation, reflection])
}

fn main() -> intersection_density::Result<()> {
    for m in 3..=10 {
        let action = TransitiveAction::natural(format!("D{}", 2 * m), dihedral(m)?, 1000)?;
        let r = intersection_density(&action, DensityOptions::sequential())?;
        let c = class_constant_a111(&action, &action.stabilizer()[1])?;
        println!("{}: rho = {}, a111 = {}", r.group, r.rho_string(), c.a111);
    }
    let table = CharacterTable::from_json(S3_TABLE)?;
    let s = character_sum_check(&table, 1)?;
    println!(
        "S3, transpositions: sum = {:+.3}{:+.3}i, vanishes = {}, predicted a111 = {:.3}",
        s.sum[0], s.sum[1], s.vanishes, s.predicted_a111
    );
    Ok(())
}
