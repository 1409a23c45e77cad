//! Property suites, each callable on its own or from the acceptance run.

use intersection_density::clique::{max_clique, SolverOptions};
use intersection_density::constructions::{build_psl2_char3, build_sym3, paley};
use intersection_density::density::{
    generates_elementary_abelian_2_group, intersection_density, AgreementOracle, DensityOptions,
};
use intersection_density::graph::{
    complement_derangement_graph, left_translations_are_automorphisms,
    conjugation_inversion_orbits, fixer_neighborhood_graph, inverse_map_is_automorphism,
    is_connected_orbital, is_self_paired, orbitals, BitGraph,
};
use intersection_density::permgroup::{Permutation, TransitiveAction, DEFAULT_ENUMERATION_CAP};
use intersection_density::psl2::{verify_trace_table, Psl2};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rustc_hash::FxHashSet;

use super::corpus::{order_two_corpus, prime_power_degree_corpus, small_constructions};
use super::oracle::{brute_force_omega, closure, is_prime_power};

/// The inverse map and left translations are automorphisms of the
/// complement of the derangement graph; for stabilizers of order 2 or 3 the
/// fixer set is a single orbit of conjugation and inversion.
pub fn inverse_map_automorphism() -> String {
    let mut checked = 0;
    for a in small_constructions() {
        if a.order() > 5000 {
            continue;
        }
        let m = a.materialize(DEFAULT_ENUMERATION_CAP).unwrap();
        let g = complement_derangement_graph(&m, 1 << 16).unwrap();
        assert!(inverse_map_is_automorphism(&m.group, &g), "{}", a.label());
        assert!(left_translations_are_automorphisms(&m.group, &g), "{}", a.label());
        if matches!(a.stabilizer_order(), 2 | 3) {
            let fixers = a.fixer_set();
            let orbits = conjugation_inversion_orbits(&fixers, a.group().generators()).unwrap();
            assert_eq!(orbits.len(), 1, "{}", a.label());
        }
        checked += 1;
    }
    assert!(checked >= 10);
    format!("{checked} graphs")
}

/// `HK` is intersecting whenever `H ∪ K` is, over random cyclic and
/// two-generated subgroups drawn from the fixers.
pub fn hk_closure() -> String {
    let mut rng = StdRng::seed_from_u64(51);
    let actions = vec![
        build_psl2_char3(3, 1).unwrap(),
        build_sym3(6).unwrap(),
        intersection_density::constructions::build_e_rtimes_q(4).unwrap(),
        intersection_density::constructions::build_agl1(9).unwrap(),
        intersection_density::constructions::build_psl2_z3(7).unwrap(),
    ];
    let (mut hypothesis, mut tried) = (0, 0);
    for a in &actions {
        let oracle = AgreementOracle::new(a);
        let fixers = a.fixer_set();
        let degree = a.group().degree();
        let gens = |rng: &mut StdRng| -> Vec<Permutation> {
            let k = rng.gen_range(1..=2);
            (0..k).map(|_| fixers.choose(rng).unwrap().clone()).collect()
        };
        let mut found = 0;
        while found < 40 && tried < 100_000 {
            tried += 1;
            let hg = gens(&mut rng);
            let h = closure(degree, &hg);
            // bias towards pairs satisfying the hypothesis: K commuting with a generator of H
            let k = if rng.gen_bool(0.5) {
                let x = hg[0].clone();
                let candidates: Vec<&Permutation> = fixers.iter().filter(|y| y.commutes_with(&x)).collect();
                closure(degree, &[(*candidates.choose(&mut rng).unwrap()).clone()])
            } else {
                closure(degree, &gens(&mut rng))
            };
            if h.len() > 200 || k.len() > 200 {
                continue;
            }
            let union: Vec<Permutation> = h.iter().chain(&k).cloned().collect::<FxHashSet<_>>().into_iter().collect();
            if !oracle.is_intersecting(&union) {
                continue;
            }
            let hk: Vec<Permutation> = h
                .iter()
                .flat_map(|x| k.iter().map(move |y| x.mul(y)))
                .collect::<FxHashSet<_>>()
                .into_iter()
                .collect();
            assert!(oracle.is_intersecting(&hk), "{}: HK not intersecting", a.label());
            found += 1;
            hypothesis += 1;
        }
    }
    assert!(hypothesis >= 100, "only {hypothesis} pairs met the hypothesis");
    format!("{hypothesis} pairs satisfying the hypothesis out of {tried}")
}

/// Greedy random basic intersecting set.
fn random_basic_set(a: &TransitiveAction, oracle: &AgreementOracle, rng: &mut StdRng) -> Vec<Permutation> {
    let mut fixers = a.fixer_set();
    fixers.shuffle(rng);
    let mut set = vec![Permutation::identity(a.group().degree())];
    for s in fixers {
        if set.iter().all(|g| oracle.agree(g, &s)) {
            set.push(s);
        }
    }
    set
}

/// With stabilizers of order 2 every basic intersecting set generates an
/// elementary abelian 2-group, and `{1, x, y}` always extends by `xy`.
pub fn elementary_abelian_witnesses() -> String {
    let mut rng = StdRng::seed_from_u64(31);
    let mut sets = 0;
    for a in order_two_corpus() {
        let r = intersection_density(&a, DensityOptions::sequential()).unwrap();
        let witness: Vec<Permutation> = r.witness.iter().map(|w| Permutation::from_images(w.clone()).unwrap()).collect();
        assert!(generates_elementary_abelian_2_group(&witness), "{}", a.label());
        let oracle = AgreementOracle::new(&a);
        for _ in 0..20 {
            let set = random_basic_set(&a, &oracle, &mut rng);
            assert!(generates_elementary_abelian_2_group(&set), "{}", a.label());
            sets += 1;
        }
        let fixers = a.fixer_set();
        let one = Permutation::identity(a.group().degree());
        for x in &fixers {
            for y in &fixers {
                if x < y && oracle.is_intersecting(&[one.clone(), x.clone(), y.clone()]) {
                    let xy = x.mul(y);
                    assert!(oracle.is_intersecting(&[one.clone(), x.clone(), y.clone(), xy]), "{}", a.label());
                }
            }
        }
    }
    format!("{sets} random sets plus all witnesses")
}

/// Self-pairedness and connectivity of every orbital agree between the
/// arc-set definition and the group-theoretic criterion.
pub fn orbital_criteria() -> String {
    let mut count = 0;
    let mut groups = 0;
    for a in small_constructions() {
        if a.degree() > 200 {
            continue;
        }
        let group = a.materialize(DEFAULT_ENUMERATION_CAP).unwrap().action_group();
        for o in orbitals(&group).unwrap().iter().filter(|o| !o.is_trivial()) {
            // both functions return a cross-check error on disagreement
            is_self_paired(&group, o, DEFAULT_ENUMERATION_CAP).unwrap();
            is_connected_orbital(&group, o).unwrap();
            count += 1;
        }
        groups += 1;
    }
    format!("{count} orbitals in {groups} groups")
}

/// A non-identity element of `PSL(2,q)` has order 3 exactly when its trace is
/// `±1`.
pub fn trace_order_test() -> String {
    let mut checked = 0usize;
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27] {
        let psl = Psl2::new(q).unwrap();
        let all = psl.enumerate(1 << 20).unwrap();
        for m in all.matrices.iter().filter(|m| !m.is_identity(psl.field())) {
            let by_trace = psl.order3_test_by_trace(m).unwrap();
            assert_eq!(by_trace, psl.element_order(m) == 3, "q = {q}, {m}");
            checked += 1;
        }
    }
    format!("{checked} elements")
}

/// The trace table, swept over all pairs.
pub fn trace_table() -> String {
    let mut entries = 0;
    for q in [4, 7, 13, 16, 19, 25, 31, 37, 43, 49, 61, 64] {
        let r = verify_trace_table(q).unwrap();
        assert!(r.full_sweep, "q = {q}");
        assert!(r.passed(), "q = {q}: {:?}", r.mismatches.first());
        entries += r.entries_checked;
    }
    format!("{entries} entries")
}

/// Every corpus graph with at most 24 vertices.
pub fn corpus_graphs() -> Vec<(String, BitGraph)> {
    let mut out = Vec::new();
    for q in [5, 9, 13, 17] {
        out.push((format!("P{q}"), paley(q).unwrap()));
    }
    for a in small_constructions() {
        let fixers = a.fixer_set();
        if fixers.len() <= 24 {
            out.push((format!("fixer graph of {}", a.label()), fixer_neighborhood_graph(&fixers).unwrap()));
        }
        if a.order() <= 24 {
            let m = a.materialize(1000).unwrap();
            out.push((format!("complement of the derangement graph of {}", a.label()), complement_derangement_graph(&m, 1000).unwrap()));
        }
    }
    let mut rng = StdRng::seed_from_u64(24);
    for i in 0..40 {
        let n = rng.gen_range(1..=24);
        let p = rng.gen_range(0.1..0.95);
        let mut g = BitGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        out.push((format!("random graph {i}"), g));
    }
    out
}

pub fn clique_vs_brute_force() -> String {
    let graphs = corpus_graphs();
    for (name, g) in &graphs {
        let expected = brute_force_omega(g);
        for threads in [Some(1), Some(3), None] {
            let r = max_clique(g, SolverOptions { threads, lower_hint: None });
            assert_eq!(r.omega, expected, "{name}, threads {threads:?}");
            assert!(g.is_clique(&r.witness), "{name}");
            assert_eq!(r.witness.len(), expected, "{name}");
        }
    }
    format!("{} graphs", graphs.len())
}

/// Transitive actions of prime-power degree have density 1.
pub fn prime_power_degree() -> String {
    let corpus = prime_power_degree_corpus();
    for a in &corpus {
        assert!(is_prime_power(a.degree()), "{}", a.label());
        let r = intersection_density(a, DensityOptions::default()).unwrap();
        assert_eq!(r.rho, num_rational::Ratio::from_integer(1), "{}", a.label());
    }
    assert!(corpus.len() >= 5);
    format!("{} actions", corpus.len())
}
