mod common;

use intersection_density::clique::{max_clique, SolverOptions};
use intersection_density::constructions::{
    build_agl1, build_psl2_char3, build_psl2_z3, build_sym3, load_group, unipotent_fixer_graph,
    ConstructionSpec,
};
use intersection_density::density::{intersection_density, DensityOptions, RoutePreference};
use intersection_density::finitefield::paley_graph;
use intersection_density::graph::{double_coset_graph, fixer_neighborhood_graph};
use intersection_density::permgroup::{GroupSpec, Permutation, DEFAULT_ENUMERATION_CAP};
use intersection_density::psl2::{Agl1, Mat2, Psl2};

#[test]
fn sym3_common_neighbourhood_structure() {
    for n in 4..=8usize {
        let a = build_sym3(n).unwrap();
        let fixers = a.fixer_set();
        let g = fixer_neighborhood_graph(&fixers).unwrap();
        let x = Permutation::from_cycles(n, &[&[0, 1, 2]]).unwrap();
        let xi = fixers.binary_search(&x).unwrap();
        let nbrs: Vec<usize> = g.neighbors(xi).collect();
        let sub = g.induced_subgraph(&nbrs);
        let mut sizes: Vec<usize> = sub.components().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        let mut expected = vec![1, n - 3, n - 3, n - 3];
        expected.sort_unstable();
        assert_eq!(sizes, expected, "n = {n}");
        for c in sub.components() {
            assert!(sub.is_clique(&c), "n = {n}");
            if c.len() == 1 && n > 4 {
                assert_eq!(fixers[nbrs[c[0]]], x.inverse());
            }
        }
    }
}

fn unipotent_perms(psl: &Psl2, lower: bool) -> Vec<Permutation> {
    let f = psl.field();
    f.units()
        .map(|t| {
            let (b, c) = if lower { (f.zero(), t) } else { (t, f.zero()) };
            psl.to_permutation(&psl.element(Mat2::new(f.one(), b, c, f.one())).unwrap())
        })
        .collect()
}

#[test]
fn char3_sylow_subgroup_structure() {
    let psl = Psl2::new(27).unwrap();
    let a = build_psl2_char3(3, 1).unwrap();
    let fixers = a.fixer_set();
    let g = fixer_neighborhood_graph(&fixers).unwrap();
    let index = |p: &Permutation| fixers.binary_search(p).unwrap();
    let k0: Vec<usize> = unipotent_perms(&psl, false).iter().map(index).collect();
    let k1: Vec<usize> = unipotent_perms(&psl, true).iter().map(index).collect();
    assert!(g.is_clique(&k0) && g.is_clique(&k1));
    let in_k0 = |v: usize| k0.contains(&v);
    for (i, &u) in k0.iter().enumerate() {
        for &v in &k0[i + 1..] {
            assert!(g.common_neighbors(&[u, v]).iter().all(|&w| in_k0(w)));
        }
    }
    // a clique through an edge between two Sylow conjugates has at most 6 vertices
    let mut edges = 0;
    for &u in &k0 {
        let across: Vec<usize> = k1.iter().copied().filter(|&v| g.has_edge(u, v)).collect();
        assert_eq!(across.len(), 1);
        for v in across {
            let common = g.common_neighbors(&[u, v]);
            assert!(common.len() <= 4);
            let omega = max_clique(&g.induced_subgraph(&common), SolverOptions::sequential()).omega;
            assert!(2 + omega <= 6);
            edges += 1;
        }
    }
    assert_eq!(edges, 26);
}

#[test]
fn char3_unipotent_graph_is_paley_for_even_degree() {
    let psl = Psl2::new(81).unwrap();
    let paley = paley_graph(81).unwrap();
    for class in [1, 2] {
        let a = build_psl2_char3(4, class).unwrap();
        let k = unipotent_fixer_graph(&psl, &a);
        let target = if class == 1 { paley.clone() } else { paley.complement() };
        assert_eq!(k.edges().collect::<Vec<_>>(), target.edges().collect::<Vec<_>>());
        assert_eq!(max_clique(&k, SolverOptions::default()).omega, 9);
    }
}

#[test]
fn psl2_order_three_elements_form_one_class() {
    for q in [4, 7, 13, 16, 19, 25] {
        let psl = Psl2::new(q).unwrap();
        let x = psl.order3_subgroup_classes().unwrap()[0].generator;
        let class = psl.conjugacy_class(&x);
        assert!(class.binary_search(&psl.inverse(&x)).is_ok(), "q = {q}");
        assert_eq!(class.len() as u64, q * (q + 1), "q = {q}");
        assert_eq!(build_psl2_z3(q).unwrap().fixer_set().len() as u64, q * (q + 1));
    }
}

#[test]
fn agl1_double_coset_valency() {
    for q in [9u64, 27] {
        let agl = Agl1::new(q).unwrap();
        let a = build_agl1(q).unwrap();
        let g = a.to_finite_group(DEFAULT_ENUMERATION_CAP).unwrap();
        let h = g.designated_subgroup().unwrap().to_vec();
        let tau = g.position(agl.tau()).unwrap();
        let directed = double_coset_graph(&g, &h, &[tau]).unwrap();
        let p = agl.field().characteristic() as usize;
        assert_eq!(directed.valency(), Some(p));
        assert!(!directed.is_symmetric());
        let both = double_coset_graph(&g, &h, &[tau, g.inverse_position(tau)]).unwrap();
        assert!(both.is_symmetric());
        assert_eq!(both.valency(), Some(2 * p));
        assert!(both.is_weakly_connected());
    }
}

#[test]
fn group_spec_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for spec in [
        ConstructionSpec::ERtimesQ { n: 3 },
        ConstructionSpec::Sym3 { n: 5 },
        ConstructionSpec::Agl1 { q: 9 },
    ] {
        let a = spec.build().unwrap().action().unwrap();
        let path = dir.path().join("g.json");
        GroupSpec::from_action(&a).save(&path).unwrap();
        let b = load_group(&path, DEFAULT_ENUMERATION_CAP).unwrap();
        let opts = DensityOptions::sequential();
        let (ra, rb) = (intersection_density(&a, opts).unwrap(), intersection_density(&b, opts).unwrap());
        assert_eq!((ra.order, ra.degree, ra.omega, ra.rho, ra.strict_ekr), (rb.order, rb.degree, rb.omega, rb.rho, rb.strict_ekr));
        assert_eq!(ra.witness, rb.witness);
    }
    let s3 = dir.path().join("s3.json");
    std::fs::write(&s3, r#"{"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}"#).unwrap();
    let a = load_group(&s3, 100).unwrap();
    assert_eq!(a.order(), 6);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"degree": 3, "generators": [[1, 0, 2]], "subgroup": [[0, 2, 1]]}"#).unwrap();
    assert!(load_group(&bad, 100).is_err());
}

#[test]
fn explicit_and_fixer_routes_agree() {
    for a in common::corpus::small_constructions() {
        if a.order() > 2000 {
            continue;
        }
        let fixer = intersection_density(&a, DensityOptions::sequential()).unwrap();
        let explicit = intersection_density(&a, DensityOptions::sequential().with_route(RoutePreference::Explicit)).unwrap();
        assert_eq!(fixer.omega, explicit.omega, "{}", a.label());
        assert_eq!(fixer.strict_ekr, explicit.strict_ekr, "{}", a.label());
        let unreduced = DensityOptions { orbit_reduction: false, ..DensityOptions::sequential() };
        let flat = intersection_density(&a, unreduced).unwrap();
        assert_eq!(flat.omega, fixer.omega, "{}", a.label());
        assert_eq!(flat.strict_ekr, fixer.strict_ekr, "{}", a.label());
    }
}
