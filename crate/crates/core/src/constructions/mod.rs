//! One-call builders for the named group families.
//!
//! Every builder returns a [`TransitiveAction`] carrying the faithful
//! substrate group and the point stabilizer of the studied action, annotated
//! with the parameters that produced it.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::finitefield::{paley_graph_over, Field};
use crate::graph::BitGraph;
use crate::permgroup::{GroupSpec, PermGroup, Permutation, TransitiveAction, DEFAULT_ENUMERATION_CAP};
use crate::psl2::{Agl1, Psl2};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    Sym3 { n: usize },
    Psl2z3 { q: u64 },
    Psl2char3 { n: u32, class: u8 },
    Agl1 { q: u64 },
    #[serde(rename = "e_rtimes_q")]
    ERtimesQ { n: u32 },
    Paley { q: u64 },
    File { path: PathBuf },
}

/// What a construction produces: a group action, or for the Paley family a
/// bare graph.
#[derive(Clone, Debug)]
pub enum Built {
    Action(TransitiveAction),
    Graph(BitGraph),
}

impl Built {
    pub fn action(self) -> Result<TransitiveAction> {
        match self {
            Built::Action(a) => Ok(a),
            Built::Graph(_) => input("this construction is a graph, not a group action"),
        }
    }
}

impl ConstructionSpec {
    pub fn id(&self) -> String {
        match self {
            ConstructionSpec::Sym3 { n } => format!("sym3(n={n})"),
            ConstructionSpec::Psl2z3 { q } => format!("psl2z3(q={q})"),
            ConstructionSpec::Psl2char3 { n, class } => format!("psl2char3(n={n},class={class})"),
            ConstructionSpec::Agl1 { q } => format!("agl1(q={q})"),
            ConstructionSpec::ERtimesQ { n } => format!("e_rtimes_q(n={n})"),
            ConstructionSpec::Paley { q } => format!("paley(q={q})"),
            ConstructionSpec::File { path } => format!("file({})", path.display()),
        }
    }

    pub fn build(&self) -> Result<Built> {
        Ok(match self {
            ConstructionSpec::Sym3 { n } => Built::Action(build_sym3(*n)?),
            ConstructionSpec::Psl2z3 { q } => Built::Action(build_psl2_z3(*q)?),
            ConstructionSpec::Psl2char3 { n, class } => Built::Action(build_psl2_char3(*n, *class)?),
            ConstructionSpec::Agl1 { q } => Built::Action(build_agl1(*q)?),
            ConstructionSpec::ERtimesQ { n } => Built::Action(build_e_rtimes_q(*n)?),
            ConstructionSpec::Paley { q } => Built::Graph(paley(*q)?),
            ConstructionSpec::File { path } => {
                Built::Action(load_group(path, DEFAULT_ENUMERATION_CAP)?)
            }
        })
    }
}

fn cycle(n: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(n, &[points]).expect("points are distinct and in range")
}

/// `Sₙ` on the cosets of `⟨(0 1 2)⟩`, with the degree-`n` representation
/// as substrate.
pub fn build_sym3(n: usize) -> Result<TransitiveAction> {
    if n < 4 {
        return input(format!("sym3 needs n ≥ 4, got {n}"));
    }
    let all: Vec<u32> = (0..n as u32).collect();
    let group = PermGroup::new(vec![cycle(n, &[0, 1]), cycle(n, &all)])?;
    let action = TransitiveAction::on_cosets(format!("S{n} on <(0 1 2)>-cosets"), group, &[cycle(n, &[0, 1, 2])], 3)?;
    let s = action.fixer_set().len();
    let expected = n * (n - 1) * (n - 2) / 3;
    if s != expected {
        return Err(Error::CrossCheck(format!("{s} fixers, expected {expected} 3-cycles")));
    }
    Ok(action.annotate("n", n.to_string()).annotate("|S|", s.to_string()))
}

/// `PSL(2,q)` on the cosets of an order-3 subgroup, `q ≡ 1 (mod 3)`.
pub fn build_psl2_z3(q: u64) -> Result<TransitiveAction> {
    if q % 3 != 1 {
        return input(format!("psl2z3 needs q ≡ 1 (mod 3), got {q}"));
    }
    let psl = Psl2::new(q)?;
    let class = psl.order3_subgroup_classes()?[0];
    let action = psl2_on_order3_cosets(&psl, &class.generator.clone(), format!("PSL(2,{q}) on Z3-cosets"))?;
    let s = action.fixer_set().len() as u64;
    if s != q * (q + 1) {
        return Err(Error::CrossCheck(format!(
            "{s} fixers but PSL(2,{q}) has q(q+1) = {} elements of order 3",
            q * (q + 1)
        )));
    }
    Ok(action)
}

fn psl2_on_order3_cosets(
    psl: &Psl2,
    x: &crate::psl2::ProjMatrix,
    label: String,
) -> Result<TransitiveAction> {
    let h = psl.to_permutation(x);
    let action = TransitiveAction::on_cosets(label, psl.perm_group(), &[h], 3)?;
    if action.order() != psl.order() {
        return Err(Error::CrossCheck(format!(
            "generated group has order {}, expected {}",
            action.order(),
            psl.order()
        )));
    }
    let s = action.fixer_set().len();
    let by_matrices = psl.fixer_set(x)?.len();
    if s != by_matrices {
        return Err(Error::CrossCheck(format!(
            "fixer set has {s} permutations but {by_matrices} matrices"
        )));
    }
    let f = psl.field();
    Ok(action
        .annotate("q", psl.q().to_string())
        .annotate("modulus", f.spec().modulus_string())
        .annotate("generator", x.to_string())
        .annotate("|S|", s.to_string()))
}

/// `PSL(2,3ⁿ)` on the cosets of `⟨[1 t; 0 1]⟩` with `t = 1` (class 1) or `t`
/// the first non-square (class 2, `n` even only).
///
/// The graph on the unipotent subgroup `K = {[1 t; 0 1]}` joining `u(s)`
/// and `u(t)` when `u(s)⁻¹u(t)` fixes a coset is checked to be complete for
/// `n` odd and the Paley graph `P_q` (up to `t ↦ νt`) for `n` even.
pub fn build_psl2_char3(n: u32, class: u8) -> Result<TransitiveAction> {
    if n < 3 {
        return input(format!("psl2char3 needs n ≥ 3, got {n}"));
    }
    let q = 3u64.pow(n);
    let psl = Psl2::new(q)?;
    let classes = psl.order3_subgroup_classes()?;
    let chosen = classes
        .iter()
        .find(|c| c.selector == class)
        .ok_or_else(|| {
            Error::Input(format!(
                "PSL(2,{q}) has {} class(es) of order-3 subgroups; selector {class} is invalid",
                classes.len()
            ))
        })?;
    let action = psl2_on_order3_cosets(&psl, &chosen.generator, format!("PSL(2,{q}) on Z3-cosets, class {class}"))?;
    let k_graph = unipotent_fixer_graph(&psl, &action);
    let f = psl.field();
    let expected = if n % 2 == 1 {
        BitGraph::complete(q as usize)
    } else {
        let paley = paley_graph_over(f)?;
        if class == 1 {
            paley
        } else {
            paley.complement()
        }
    };
    if k_graph.edges().collect::<Vec<_>>() != expected.edges().collect::<Vec<_>>() {
        return Err(Error::CrossCheck(format!(
            "fixer graph on the unipotent subgroup of PSL(2,{q}) has unexpected structure"
        )));
    }
    Ok(action.annotate("n", n.to_string()).annotate("class", class.to_string()))
}

/// The graph on `GF(q)` joining `s` and `t` when `u(t - s)` lies in the fixer
/// set, `u(t) = [1 t; 0 1]`.
pub fn unipotent_fixer_graph(psl: &Psl2, action: &TransitiveAction) -> BitGraph {
    let f = psl.field();
    let fixers = action.fixer_set();
    let in_s: Vec<bool> = f
        .elements()
        .map(|t| fixers.binary_search(&psl.to_permutation(&psl.unipotent(t))).is_ok())
        .collect();
    let q = f.q() as usize;
    let mut g = BitGraph::new(q);
    for s in f.elements() {
        for t in f.elements() {
            if s.index() < t.index() && in_s[f.sub(t, s).index() as usize] {
                g.add_edge(s.index() as usize, t.index() as usize);
            }
        }
    }
    g
}

/// `AGL(1,q)` on the cosets of `H = ⟨σ⟩`, `σ: x ↦ x + 1`.
pub fn build_agl1(q: u64) -> Result<TransitiveAction> {
    let agl = Agl1::new(q)?;
    let action = TransitiveAction::on_cosets(
        format!("AGL(1,{q}) on <sigma>-cosets"),
        agl.perm_group(),
        &[agl.sigma().clone()],
        q as usize,
    )?;
    let f = agl.field();
    let s = action.fixer_set().len();
    Ok(action
        .annotate("q", q.to_string())
        .annotate("modulus", f.spec().modulus_string())
        .annotate("|S|", s.to_string()))
}

/// `E ⋊ Q` with `E = Z₂ⁿ` acting on itself by translation and
/// `Q = ⟨a, b⟩`, on the cosets of `⟨e₁⟩`.
///
/// Vectors are encoded as integers, `e_i` being bit `i - 1`;
/// `a: e_i ↦ e_{i+1}` (indices mod `n`) and `b: e_i ↦ e_i + e_n` for
/// `i < n`, `b(e_n) = e_n`.
pub fn build_e_rtimes_q(n: u32) -> Result<TransitiveAction> {
    if !(3..=12).contains(&n) {
        return input(format!("e_rtimes_q needs 3 ≤ n ≤ 12, got {n}"));
    }
    let size = 1u32 << n;
    let map = |f: &dyn Fn(u32) -> u32| Permutation::from_images((0..size).map(f).collect());
    let mut gens = Vec::new();
    for i in 0..n {
        gens.push(map(&|v| v ^ (1 << i))?);
    }
    let mask = size - 1;
    let top = 1 << (n - 1);
    gens.push(map(&|v| ((v << 1) | (v >> (n - 1))) & mask)?);
    gens.push(map(&|v| if (v & (top - 1)).count_ones() % 2 == 1 { v ^ top } else { v })?);
    let e1 = gens[0].clone();
    let action = TransitiveAction::on_cosets(
        format!("E x| Q (n={n}) on <e1>-cosets"),
        PermGroup::new(gens)?,
        &[e1],
        2,
    )?;
    let q_order = action.order() / size as u64;
    let s = action.fixer_set().len();
    Ok(action
        .annotate("n", n.to_string())
        .annotate("|Q|", q_order.to_string())
        .annotate("|S|", s.to_string()))
}

pub fn paley(q: u64) -> Result<BitGraph> {
    paley_graph_over(&Field::with_order(q)?)
}

/// Reads a JSON group specification and resolves its designated subgroup.
pub fn load_group(path: impl AsRef<std::path::Path>, cap: usize) -> Result<TransitiveAction> {
    let path = path.as_ref();
    let spec = GroupSpec::load(path)?;
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "file".into());
    Ok(spec.into_action(label, cap)?.annotate("path", path.display().to_string()))
}
