//! The reproduction table: every closed-form density result recomputed from
//! scratch and compared exactly.

use std::collections::BTreeMap;
use std::time::Instant;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::clique::{max_clique, SolverOptions};
use crate::constructions::ConstructionSpec;
use crate::density::report::ratio_string;
use crate::density::{intersection_density, DensityOptions};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scale {
    /// Everything except `PSL(2,25)` and `PSL(2,81)`.
    Quick,
    Full,
}

/// What a row compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Rho,
    /// Clique number of a graph.
    Omega,
    /// A lower bound on `ρ`.
    RhoAtLeast,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub id: String,
    pub quantity: Quantity,
    #[serde(with = "ratio_string")]
    pub expected: Ratio<u64>,
    pub citation: String,
    #[serde(with = "ratio_string")]
    pub computed: Ratio<u64>,
    pub matched: bool,
    pub runtime_secs: f64,
}

impl VerifyRow {
    pub const CSV_HEADER: &'static str = "id,quantity,expected,computed,matched,runtime_secs,citation";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},\"{}\"",
            self.id,
            serde_json::to_value(self.quantity).unwrap().as_str().unwrap(),
            ratio_string::format(&self.expected),
            ratio_string::format(&self.computed),
            self.matched,
            self.runtime_secs,
            self.citation
        )
    }
}

/// One planned row before it is computed.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub spec: ConstructionSpec,
    pub quantity: Quantity,
    pub expected: Ratio<u64>,
    pub citation: &'static str,
}

fn rho(spec: ConstructionSpec, num: u64, den: u64, citation: &'static str) -> Expectation {
    Expectation {
        spec,
        quantity: Quantity::Rho,
        expected: Ratio::new(num, den),
        citation,
    }
}

/// The rows run at `scale`, in order.
pub fn expectations(scale: Scale) -> Vec<Expectation> {
    use ConstructionSpec::*;
    const Z3: &str = "PSL(2,q) on Z3-cosets, q = 1 mod 3: 4/3 unless p = 5, then 2";
    const CHAR3: &str = "PSL(2,3^n) on Z3-cosets: 3^(n-1) for n odd, 3^(n/2-1) for n even";
    const SYM3: &str = "S_n on <(1 2 3)>-cosets: (n-1)/3";
    const PALEY: &str = "clique number of the Paley graph P_q with q square: sqrt(q)";
    const ERQ: &str = "E x| Q on <e1>-cosets: maximum intersecting sets have size n+1";
    let mut rows = Vec::new();
    for q in [4, 7, 13, 16] {
        rows.push(rho(Psl2z3 { q }, 4, 3, Z3));
    }
    if scale == Scale::Full {
        rows.push(rho(Psl2z3 { q: 25 }, 2, 1, Z3));
    }
    rows.push(rho(Psl2char3 { n: 3, class: 1 }, 9, 1, CHAR3));
    if scale == Scale::Full {
        for class in [1, 2] {
            rows.push(rho(Psl2char3 { n: 4, class }, 3, 1, CHAR3));
        }
    }
    for n in 4..=7u64 {
        rows.push(rho(Sym3 { n: n as usize }, n - 1, 3, SYM3));
    }
    for (q, root) in [(9, 3), (25, 5), (49, 7), (81, 9)] {
        rows.push(Expectation {
            spec: Paley { q },
            quantity: Quantity::Omega,
            expected: Ratio::from_integer(root),
            citation: PALEY,
        });
    }
    for n in 3..=5u64 {
        rows.push(rho(ERtimesQ { n: n as u32 }, n + 1, 2, ERQ));
    }
    rows.push(Expectation {
        spec: Agl1 { q: 9 },
        quantity: Quantity::RhoAtLeast,
        expected: Ratio::from_integer(3),
        citation: "AGL(1,q) on <x+1>-cosets: the translations form an intersecting set of size q",
    });
    rows
}

/// Computes one row. `expected_override` replaces the expected value, which
/// is how the harness is checked to fail on a wrong expectation.
pub fn run_row(
    e: &Expectation,
    options: DensityOptions,
    expected_override: Option<Ratio<u64>>,
) -> Result<VerifyRow> {
    let start = Instant::now();
    let computed = match e.quantity {
        Quantity::Omega => {
            let g = e.spec.build()?;
            let graph = match g {
                crate::constructions::Built::Graph(g) => g,
                crate::constructions::Built::Action(_) => {
                    return crate::error::input("omega rows need a graph construction")
                }
            };
            let solver = SolverOptions {
                threads: options.threads,
                lower_hint: None,
            };
            Ratio::from_integer(max_clique(&graph, solver).omega as u64)
        }
        Quantity::Rho | Quantity::RhoAtLeast => {
            let action = e.spec.build()?.action()?;
            intersection_density(&action, options)?.rho
        }
    };
    let expected = expected_override.unwrap_or(e.expected);
    let matched = match e.quantity {
        Quantity::RhoAtLeast => computed >= expected,
        _ => computed == expected,
    };
    Ok(VerifyRow {
        id: e.spec.id(),
        quantity: e.quantity,
        expected,
        citation: e.citation.to_string(),
        computed,
        matched,
        runtime_secs: start.elapsed().as_secs_f64(),
    })
}

/// Runs every row at `scale`. `overrides` maps row ids to replacement
/// expected values.
pub fn verify_paper(
    scale: Scale,
    options: DensityOptions,
    overrides: &BTreeMap<String, Ratio<u64>>,
) -> Result<Vec<VerifyRow>> {
    expectations(scale)
        .iter()
        .map(|e| run_row(e, options, overrides.get(&e.spec.id()).copied()))
        .collect()
}
