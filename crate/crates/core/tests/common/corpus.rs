//! Small group actions shared by the integration tests.

use intersection_density::constructions::{build_agl1, build_e_rtimes_q, build_psl2_z3, build_sym3};
use intersection_density::permgroup::{PermGroup, Permutation, TransitiveAction};
use intersection_density::psl2::{Agl1, Psl2};

pub fn perm(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

pub fn symmetric(n: usize) -> PermGroup {
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(vec![perm(n, &[&[0, 1]]), perm(n, &[&all])]).unwrap()
}

pub fn alternating4() -> PermGroup {
    PermGroup::new(vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])]).unwrap()
}

/// `D_{2m}` on the vertices of an `m`-gon.
pub fn dihedral(m: u32) -> PermGroup {
    let rot = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).unwrap();
    let refl = Permutation::from_images((0..m).map(|i| (m - i) % m).collect()).unwrap();
    PermGroup::new(vec![rot, refl]).unwrap()
}

/// `Z₂ × D_{2p}` on `2p` points `2k + b`; the `Z₂` factor swaps `b`.
pub fn z2_times_dihedral(p: u32) -> PermGroup {
    let n = 2 * p;
    let rot = Permutation::from_images((0..n).map(|i| (i + 2) % n).collect()).unwrap();
    let swap = Permutation::from_images((0..n).map(|i| i ^ 1).collect()).unwrap();
    let refl = Permutation::from_images((0..n).map(|i| ((n - (i & !1)) % n) | (i & 1)).collect()).unwrap();
    PermGroup::new(vec![rot, swap, refl]).unwrap()
}

pub fn natural(label: &str, g: PermGroup) -> TransitiveAction {
    TransitiveAction::natural(label, g, 1 << 20).unwrap()
}

/// Transitive actions with point stabilizers of order 2.
pub fn order_two_corpus() -> Vec<TransitiveAction> {
    let mut out = Vec::new();
    for m in 3..=9 {
        out.push(natural(&format!("D{} on {m} points", 2 * m), dihedral(m)));
    }
    for p in [3, 5, 7] {
        out.push(natural(&format!("Z2 x D{} on {} points", 2 * p, 2 * p), z2_times_dihedral(p)));
    }
    for n in 3..=5 {
        out.push(build_e_rtimes_q(n).unwrap());
    }
    let v = perm(4, &[&[0, 1], &[2, 3]]);
    out.push(TransitiveAction::on_cosets("S4 on <(01)(23)>", symmetric(4), &[v.clone()], 10).unwrap());
    out.push(TransitiveAction::on_cosets("A4 on <(01)(23)>", alternating4(), &[v], 10).unwrap());
    out
}

/// Transitive actions of prime-power degree.
pub fn prime_power_degree_corpus() -> Vec<TransitiveAction> {
    let mut out = vec![
        natural("S4", symmetric(4)),
        natural("D8", dihedral(4)),
        natural("D16", dihedral(8)),
        natural("A4", alternating4()),
        natural("S5", symmetric(5)),
        natural("AGL(1,9)", Agl1::new(9).unwrap().perm_group()),
        natural("AGL(1,25)", Agl1::new(25).unwrap().perm_group()),
    ];
    for q in [4, 7, 8, 16] {
        out.push(natural(&format!("PSL(2,{q})"), Psl2::new(q).unwrap().perm_group()));
    }
    let c9 = Permutation::from_images((0..9).map(|i| (i + 1) % 9).collect()).unwrap();
    out.push(natural("C9", PermGroup::new(vec![c9]).unwrap()));
    out
}

/// Every constructed action small enough to enumerate in full.
pub fn small_constructions() -> Vec<TransitiveAction> {
    let mut out = vec![
        build_sym3(4).unwrap(),
        build_sym3(5).unwrap(),
        build_sym3(6).unwrap(),
        build_psl2_z3(4).unwrap(),
        build_psl2_z3(7).unwrap(),
        build_psl2_z3(13).unwrap(),
        build_agl1(9).unwrap(),
    ];
    out.extend(order_two_corpus());
    out.extend(prime_power_degree_corpus());
    out
}
