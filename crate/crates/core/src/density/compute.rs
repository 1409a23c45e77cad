use std::collections::{BTreeMap, VecDeque};
use std::time::Instant;

use num_rational::Ratio;
use rustc_hash::FxHashSet;

use super::report::{DensityReport, Route, StrictEkr};
use crate::clique::{self, enumerate_maximum_cliques, max_clique, SolverOptions};
use crate::error::{input, Error, Result};
use crate::graph::{
    complement_derangement_graph, conjugation_inversion_orbits, fixer_neighborhood_graph, BitGraph,
    DEFAULT_EXPLICIT_GRAPH_CAP,
};
use crate::permgroup::group::DEFAULT_ENUMERATION_CAP;
use crate::permgroup::{ActionKind, MaterializedAction, Permutation, TransitiveAction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoutePreference {
    /// Fixer-neighbourhood route, the production path.
    Auto,
    Explicit,
    FixerNeighborhood,
}

#[derive(Clone, Copy, Debug)]
pub struct DensityOptions {
    pub threads: Option<usize>,
    pub route: RoutePreference,
    /// Search one representative per orbit of `⟨conjugation, inversion⟩` on
    /// the fixer set instead of the whole fixer graph.
    pub orbit_reduction: bool,
    /// Cap on maximum intersecting sets enumerated for the strict-EKR test.
    pub strict_cap: usize,
    pub explicit_cap: usize,
    pub enumeration_cap: usize,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions {
            threads: None,
            route: RoutePreference::Auto,
            orbit_reduction: true,
            strict_cap: clique::DEFAULT_ENUMERATION_CAP,
            explicit_cap: DEFAULT_EXPLICIT_GRAPH_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl DensityOptions {
    pub fn sequential() -> Self {
        DensityOptions {
            threads: Some(1),
            ..Self::default()
        }
    }

    pub fn with_route(mut self, route: RoutePreference) -> Self {
        self.route = route;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    fn solver(&self) -> SolverOptions {
        SolverOptions {
            threads: self.threads,
            lower_hint: None,
        }
    }
}

/// Decides whether two elements agree on a point of the studied action.
///
/// For natural actions this inspects the permutations. For coset actions
/// `g⁻¹h` must lie in a conjugate of `H`, tested against the explicit list
/// of point stabilizers when it is small and by conjugating into `H`
/// otherwise; neither uses the class-union fixer set.
pub struct AgreementOracle<'a> {
    action: &'a TransitiveAction,
    stabilizer: FxHashSet<Permutation>,
    stabilizers: Option<Vec<FxHashSet<Permutation>>>,
}

/// Point stabilizer lists are materialised only for groups up to this order.
const STABILIZER_LIST_CAP: u64 = 1 << 18;

impl<'a> AgreementOracle<'a> {
    pub fn new(action: &'a TransitiveAction) -> Self {
        let stabilizers = (action.kind() == ActionKind::Cosets && action.order() <= STABILIZER_LIST_CAP)
            .then(|| {
                action
                    .point_stabilizers()
                    .into_iter()
                    .map(|s| s.into_iter().collect())
                    .collect()
            });
        AgreementOracle {
            action,
            stabilizer: action.stabilizer().iter().cloned().collect(),
            stabilizers,
        }
    }

    /// Whether `x` fixes some point.
    pub fn fixes_a_point(&self, x: &Permutation) -> bool {
        match self.action.kind() {
            ActionKind::Natural => x.has_fixed_point(),
            ActionKind::Cosets => match &self.stabilizers {
                Some(list) => list.iter().any(|s| s.contains(x)),
                None => self.conjugates_into_stabilizer(x),
            },
        }
    }

    /// Breadth-first search over the conjugacy class of `x` for a member of
    /// `H`.
    fn conjugates_into_stabilizer(&self, x: &Permutation) -> bool {
        let gens = self.action.group().generators();
        let mut seen: FxHashSet<Permutation> = FxHashSet::default();
        seen.insert(x.clone());
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            if self.stabilizer.contains(&y) {
                return true;
            }
            for s in gens {
                let z = y.conjugate_by(s);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
        false
    }

    pub fn agree(&self, g: &Permutation, h: &Permutation) -> bool {
        let x = g.inverse().mul(h);
        x.is_identity() || self.fixes_a_point(&x)
    }

    pub fn is_intersecting(&self, set: &[Permutation]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, g)| set[i + 1..].iter().all(|h| self.agree(g, h)))
    }
}

/// Whether every two elements of `set` agree on a point. Errors if an
/// element is not in the group.
pub fn is_intersecting(action: &TransitiveAction, set: &[Permutation]) -> Result<bool> {
    let chain = action.group().stabilizer_chain(&[]);
    if let Some(g) = set.iter().find(|g| !chain.contains(g)) {
        return input(format!("{g} is not an element of the group"));
    }
    Ok(AgreementOracle::new(action).is_intersecting(set))
}

/// A validated intersecting set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectingSet {
    elements: Vec<Permutation>,
    basic: bool,
}

impl IntersectingSet {
    pub fn new(action: &TransitiveAction, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if !is_intersecting(action, &elements)? {
            return input("set is not intersecting");
        }
        let basic = elements.iter().any(|g| g.is_identity());
        Ok(IntersectingSet { elements, basic })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the set contains the identity.
    pub fn is_basic(&self) -> bool {
        self.basic
    }

    /// `f⁻¹F`, which is basic whenever `f ∈ F`.
    pub fn translate(&self, f: &Permutation) -> IntersectingSet {
        let inv = f.inverse();
        let mut elements: Vec<Permutation> = self.elements.iter().map(|g| inv.mul(g)).collect();
        elements.sort_unstable();
        let basic = elements.iter().any(|g| g.is_identity());
        IntersectingSet { elements, basic }
    }
}

/// Whether the elements at `positions` pairwise agree on a point of the
/// materialised action, checked on the induced permutations directly.
pub fn is_intersecting_on_points(action: &MaterializedAction, positions: &[usize]) -> bool {
    let images: Vec<Permutation> = positions.iter().map(|&i| action.point_image(i)).collect();
    images.iter().enumerate().all(|(i, g)| {
        images[i + 1..]
            .iter()
            .all(|h| g.images().iter().zip(h.images()).any(|(a, b)| a == b))
    })
}

/// Whether `set` is a full point stabilizer of the studied action.
pub fn is_point_stabilizer(action: &TransitiveAction, set: &[Permutation]) -> bool {
    if set.len() as u64 != action.stabilizer_order() {
        return false;
    }
    let members: FxHashSet<&Permutation> = set.iter().collect();
    let closed = set
        .iter()
        .all(|a| members.contains(&a.inverse()) && set.iter().all(|b| members.contains(&a.mul(b))));
    if !closed {
        return false;
    }
    match action.kind() {
        ActionKind::Natural => {
            (0..action.group().degree() as u32).any(|v| set.iter().all(|g| g.apply(v) == v))
        }
        ActionKind::Cosets => {
            // search the orbit of the set under conjugation for H itself
            let target: Vec<Permutation> = action.stabilizer().to_vec();
            let mut start = set.to_vec();
            start.sort_unstable();
            let mut seen: FxHashSet<Vec<Permutation>> = FxHashSet::default();
            seen.insert(start.clone());
            let mut queue = VecDeque::from([start]);
            while let Some(k) = queue.pop_front() {
                if k == target {
                    return true;
                }
                for s in action.group().generators() {
                    let mut c: Vec<Permutation> = k.iter().map(|x| x.conjugate_by(s)).collect();
                    c.sort_unstable();
                    if seen.insert(c.clone()) {
                        queue.push_back(c);
                    }
                }
            }
            false
        }
    }
}

/// Maximum cliques of the fixer graph, found through one representative per
/// vertex orbit of a known automorphism group.
struct FixerSearch {
    omega: usize,
    witness: Vec<usize>,
    nodes: u64,
}

fn search_fixer_graph(
    graph: &BitGraph,
    orbit_reps: &[usize],
    stabilizer_order: usize,
    solver: SolverOptions,
) -> FixerSearch {
    let mut best = FixerSearch {
        omega: 0,
        witness: Vec::new(),
        nodes: 0,
    };
    if graph.order() == 0 {
        return best;
    }
    for &r in orbit_reps {
        let nbrs: Vec<usize> = graph.neighbors(r).collect();
        let sub = graph.induced_subgraph(&nbrs);
        // a point stabilizer through r gives a clique of |H| - 2 neighbours
        let hint = (stabilizer_order.saturating_sub(2)).max(best.omega.saturating_sub(1)).max(1);
        let res = max_clique(&sub, solver.with_hint(hint));
        best.nodes += res.node_count;
        if res.omega + 1 > best.omega {
            best.omega = res.omega + 1;
            best.witness = std::iter::once(r).chain(res.witness.iter().map(|&i| nbrs[i])).collect();
            best.witness.sort_unstable();
        }
    }
    best
}

fn strict_ekr_fixer(
    action: &TransitiveAction,
    fixers: &[Permutation],
    graph: &BitGraph,
    orbit_reps: &[usize],
    omega_fixer: usize,
    cap: usize,
) -> StrictEkr {
    let identity = Permutation::identity(action.group().degree());
    let mut total = 0usize;
    let mut truncated = false;
    for &r in orbit_reps {
        let nbrs: Vec<usize> = graph.neighbors(r).collect();
        let sub = graph.induced_subgraph(&nbrs);
        let found = enumerate_maximum_cliques(&sub, omega_fixer - 1, cap.saturating_sub(total));
        total += found.cliques.len();
        truncated |= found.truncated;
        for c in found.cliques {
            let set: Vec<Permutation> = std::iter::once(identity.clone())
                .chain(std::iter::once(fixers[r].clone()))
                .chain(c.iter().map(|&i| fixers[nbrs[i]].clone()))
                .collect();
            if !is_point_stabilizer(action, &set) {
                return StrictEkr::False;
            }
        }
        if truncated {
            return StrictEkr::UnknownTruncated;
        }
    }
    StrictEkr::True
}

/// Exact intersection density of a transitive action.
///
/// The production route computes `ω = 1 + ω(Γ_S)` where `Γ_S` is the graph
/// on the fixer set `S` with `s ~ t` iff `s⁻¹t ∈ S`; left translations make
/// the complement of the derangement graph vertex-transitive, so some
/// maximum clique contains the identity. The explicit route builds that
/// complement on all of `G` instead.
pub fn intersection_density(action: &TransitiveAction, options: DensityOptions) -> Result<DensityReport> {
    let start = Instant::now();
    let h = action.stabilizer_order();
    if action.order() % h != 0 || action.degree() * h != action.order() {
        return Err(Error::CrossCheck("|G| ≠ degree × |G_v|".into()));
    }
    let route = match options.route {
        RoutePreference::Explicit => Route::ExplicitGraph,
        _ => Route::FixerNeighborhood,
    };
    let fixers = action.fixer_set();
    let deterministic = options.threads == Some(1);
    let (omega, witness, nodes, strict) = match route {
        Route::FixerNeighborhood => {
            let graph = fixer_neighborhood_graph(&fixers)?;
            let reps: Vec<usize> = if options.orbit_reduction {
                conjugation_inversion_orbits(&fixers, action.group().generators())?
                    .iter()
                    .map(|o| o[0])
                    .collect()
            } else {
                (0..fixers.len()).collect()
            };
            let found = if options.orbit_reduction {
                search_fixer_graph(&graph, &reps, h as usize, options.solver())
            } else {
                let res = max_clique(&graph, options.solver().with_hint((h as usize).saturating_sub(1)));
                FixerSearch {
                    omega: res.omega,
                    witness: res.witness,
                    nodes: res.node_count,
                }
            };
            let omega = found.omega as u64 + 1;
            let strict = if omega > h {
                StrictEkr::False
            } else if found.omega == 0 {
                StrictEkr::True
            } else if options.orbit_reduction {
                strict_ekr_fixer(action, &fixers, &graph, &reps, found.omega, options.strict_cap)
            } else {
                let e = enumerate_maximum_cliques(&graph, found.omega, options.strict_cap);
                strict_from_sets(
                    action,
                    e.truncated,
                    e.cliques.iter().map(|c| {
                        std::iter::once(Permutation::identity(action.group().degree()))
                            .chain(c.iter().map(|&i| fixers[i].clone()))
                            .collect()
                    }),
                )
            };
            let mut witness = vec![Permutation::identity(action.group().degree())];
            witness.extend(found.witness.iter().map(|&i| fixers[i].clone()));
            (omega, witness, found.nodes, strict)
        }
        Route::ExplicitGraph => {
            let m = action.materialize(options.enumeration_cap)?;
            let graph = complement_derangement_graph(&m, options.explicit_cap)?;
            let res = max_clique(&graph, options.solver().with_hint(h as usize));
            let omega = res.omega as u64;
            // translate so the witness contains the identity
            let f0 = res.witness[0];
            let f0inv = m.group.inverse_position(f0);
            let mut witness: Vec<Permutation> = res
                .witness
                .iter()
                .map(|&i| m.group.element(m.group.mul_positions(f0inv, i)).clone())
                .collect();
            witness.sort_unstable();
            let strict = if omega > h {
                StrictEkr::False
            } else {
                let e = enumerate_maximum_cliques(&graph, res.omega, options.strict_cap);
                strict_from_sets(
                    action,
                    e.truncated,
                    e.cliques
                        .iter()
                        .filter(|c| c.contains(&0))
                        .map(|c| c.iter().map(|&i| m.group.element(i).clone()).collect()),
                )
            };
            (omega, witness, res.node_count, strict)
        }
    };
    let oracle = AgreementOracle::new(action);
    if !oracle.is_intersecting(&witness) || witness.len() as u64 != omega {
        return Err(Error::CrossCheck(
            "the maximum clique found is not an intersecting set".into(),
        ));
    }
    let rho = Ratio::new(omega, h);
    let annotations: BTreeMap<String, String> = action.annotations().iter().cloned().collect();
    Ok(DensityReport {
        group: action.label().to_string(),
        order: action.order(),
        degree: action.degree(),
        stabilizer_order: h,
        omega,
        rho,
        witness: witness.iter().map(|g| g.images().to_vec()).collect(),
        witness_deterministic: deterministic,
        ekr: rho == Ratio::from_integer(1),
        strict_ekr: strict,
        route,
        fixers: fixers.len() as u64,
        node_count: nodes,
        elapsed_secs: start.elapsed().as_secs_f64(),
        annotations,
    })
}

fn strict_from_sets(
    action: &TransitiveAction,
    truncated: bool,
    sets: impl Iterator<Item = Vec<Permutation>>,
) -> StrictEkr {
    for s in sets {
        if !is_point_stabilizer(action, &s) {
            return StrictEkr::False;
        }
    }
    if truncated {
        StrictEkr::UnknownTruncated
    } else {
        StrictEkr::True
    }
}
