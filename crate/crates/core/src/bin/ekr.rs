use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

use intersection_density::clique::{enumerate_maximum_cliques, max_clique, SolverOptions};
use intersection_density::constructions::{Built, ConstructionSpec};
use intersection_density::density::report::ratio_string;
use intersection_density::density::{
    character_sum_check, class_constant_a111, intersection_density, CharacterTable, DensityOptions,
    DensityReport, RoutePreference,
};
use intersection_density::graph::{from_dimacs, is_connected_orbital, is_self_paired, orbitals, summary, to_dimacs};
use intersection_density::permgroup::{GroupSpec, Permutation, TransitiveAction};
use intersection_density::verify::{verify_paper, Scale, VerifyRow};
use intersection_density::{Error, Result};

#[derive(Parser)]
#[command(name = "ekr", version, about = "Exact intersection density of transitive permutation groups")]
struct Cli {
    /// Worker threads for clique search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection density and EKR verdicts of a group action.
    Density(DensityArgs),
    /// Maximum clique of a DIMACS graph or a Paley graph.
    Clique(CliqueArgs),
    /// Orbital digraphs with self-paired and connectivity flags.
    Orbitals(OrbitalsArgs),
    /// Build a construction and emit it as a group spec (or DIMACS graph).
    Construct(SourceArgs),
    /// The class constant a111 of an order-2 stabilizer action.
    A111(A111Args),
    /// Character-sum criterion from a character table file.
    Charsum(CharsumArgs),
    /// Recompute the table of closed-form results.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Sym3,
    Psl2z3,
    Psl2char3,
    Agl1,
    Erq,
    Paley,
    File,
}

#[derive(Args, Clone)]
struct SourceArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    q: Option<u64>,
    /// Order-3 class selector for psl2char3.
    #[arg(long, default_value_t = 1)]
    class: u8,
    #[arg(long)]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Auto,
    Explicit,
    Fixer,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value = "auto")]
    route: RouteArg,
    /// Search the whole fixer graph rather than one vertex per orbit.
    #[arg(long)]
    no_orbit_reduction: bool,
    /// Cap on maximum intersecting sets enumerated for strict EKR.
    #[arg(long, default_value_t = intersection_density::clique::DEFAULT_ENUMERATION_CAP)]
    strict_cap: usize,
    /// Vertex cap for the explicit complement-of-derangement graph.
    #[arg(long, default_value_t = intersection_density::graph::DEFAULT_EXPLICIT_GRAPH_CAP)]
    explicit_cap: usize,
    /// Element cap for group enumeration.
    #[arg(long, default_value_t = intersection_density::permgroup::DEFAULT_ENUMERATION_CAP)]
    group_cap: usize,
    /// Emit a CSV row instead of JSON.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CliqueArgs {
    /// DIMACS graph file.
    #[arg(long, conflicts_with = "paley")]
    dimacs: Option<PathBuf>,
    /// Paley graph of order q.
    #[arg(long)]
    paley: Option<u64>,
    /// Also enumerate maximum cliques up to this many.
    #[arg(long)]
    enumerate: Option<usize>,
}

#[derive(Args)]
struct OrbitalsArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, default_value_t = 2000)]
    max_degree: usize,
    #[arg(long, default_value_t = intersection_density::permgroup::DEFAULT_ENUMERATION_CAP)]
    group_cap: usize,
}

#[derive(Args)]
struct A111Args {
    #[command(flatten)]
    source: SourceArgs,
    /// Images of the point-fixer; defaults to the involution in the
    /// stabilizer.
    #[arg(long, value_delimiter = ',')]
    element: Option<Vec<u32>>,
}

#[derive(Args)]
struct CharsumArgs {
    #[arg(long)]
    table: PathBuf,
    /// Index of the involution class in the table.
    #[arg(long)]
    involution_class: usize,
    /// Group to cross-check against by counting a111.
    #[command(flatten)]
    source: SourceArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "quick")]
    scale: ScaleArg,
    /// Replace an expected value, as `id=value`.
    #[arg(long = "expect")]
    overrides: Vec<String>,
    /// Also write the table as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Quick,
    Full,
}

/// Why a command failed: bad flags exit with 2, domain errors with 1.
enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl SourceArgs {
    fn spec(&self) -> CliResult<ConstructionSpec> {
        let n = || self.n.ok_or_else(|| usage("this family needs --n"));
        let q = || self.q.ok_or_else(|| usage("this family needs --q"));
        let family = self.family.ok_or_else(|| usage("--family is required"))?;
        Ok(match family {
            Family::Sym3 => ConstructionSpec::Sym3 { n: n()? as usize },
            Family::Psl2z3 => ConstructionSpec::Psl2z3 { q: q()? },
            Family::Psl2char3 => ConstructionSpec::Psl2char3 {
                n: n()?,
                class: self.class,
            },
            Family::Agl1 => ConstructionSpec::Agl1 { q: q()? },
            Family::Erq => ConstructionSpec::ERtimesQ { n: n()? },
            Family::Paley => ConstructionSpec::Paley { q: q()? },
            Family::File => ConstructionSpec::File {
                path: self.path.clone().ok_or_else(|| usage("--family file needs --path"))?,
            },
        })
    }

    fn action(&self) -> CliResult<TransitiveAction> {
        Ok(self.spec()?.build()?.action()?)
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{text}");
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serialises")
}

#[derive(Serialize)]
struct OrbitalRow {
    representative: (u32, u32),
    valency: usize,
    self_paired: bool,
    connected: bool,
}

fn run(cli: Cli) -> CliResult<bool> {
    let solver = SolverOptions {
        threads: cli.threads,
        lower_hint: None,
    };
    match cli.command {
        Command::Density(args) => {
            let action = args.source.action()?;
            let options = DensityOptions {
                threads: cli.threads,
                route: match args.route {
                    RouteArg::Auto => RoutePreference::Auto,
                    RouteArg::Explicit => RoutePreference::Explicit,
                    RouteArg::Fixer => RoutePreference::FixerNeighborhood,
                },
                orbit_reduction: !args.no_orbit_reduction,
                strict_cap: args.strict_cap,
                explicit_cap: args.explicit_cap,
                enumeration_cap: args.group_cap,
            };
            let report = intersection_density(&action, options)?;
            let text = if args.csv {
                format!("{}\n{}", DensityReport::CSV_HEADER, report.csv_row())
            } else {
                report.to_json()
            };
            emit(&cli.out, &text)?;
        }
        Command::Clique(args) => {
            let graph = match (&args.dimacs, args.paley) {
                (Some(path), _) => from_dimacs(&std::fs::read_to_string(path)?)?,
                (None, Some(q)) => intersection_density::constructions::paley(q)?,
                (None, None) => return Err(usage("clique needs --dimacs or --paley")),
            };
            let result = max_clique(&graph, solver);
            let mut value = json!({ "graph": summary(&graph), "result": result });
            if let Some(cap) = args.enumerate {
                let e = enumerate_maximum_cliques(&graph, result.omega, cap);
                value["maximum_cliques"] = json!(e.cliques.len());
                value["truncated"] = json!(e.truncated);
            }
            emit(&cli.out, &to_json(&value))?;
        }
        Command::Orbitals(args) => {
            let action = args.source.action()?;
            if action.degree() > args.max_degree as u64 {
                return Err(usage(format!(
                    "degree {} exceeds --max-degree {}",
                    action.degree(),
                    args.max_degree
                )));
            }
            let group = action.materialize(args.group_cap)?.action_group();
            let mut rows = Vec::new();
            for o in orbitals(&group)?.iter().filter(|o| !o.is_trivial()) {
                rows.push(OrbitalRow {
                    representative: o.representative(),
                    valency: o.valency(),
                    self_paired: is_self_paired(&group, o, args.group_cap)?,
                    connected: is_connected_orbital(&group, o)?,
                });
            }
            let value = json!({
                "group": action.label(),
                "degree": action.degree(),
                "rank": rows.len() + 1,
                "orbitals": rows,
            });
            emit(&cli.out, &to_json(&value))?;
        }
        Command::Construct(source) => match source.spec()?.build()? {
            Built::Graph(g) => emit(&cli.out, &to_dimacs(&g))?,
            Built::Action(a) => {
                eprintln!(
                    "{}: |G| = {}, degree = {}, |Gv| = {}, |S| = {}",
                    a.label(),
                    a.order(),
                    a.degree(),
                    a.stabilizer_order(),
                    a.fixer_set().len()
                );
                emit(&cli.out, &GroupSpec::from_action(&a).to_json())?
            }
        },
        Command::A111(args) => {
            let action = args.source.action()?;
            let g = match args.element {
                Some(images) => Permutation::from_images(images)?,
                None => action
                    .stabilizer()
                    .iter()
                    .find(|h| !h.is_identity())
                    .cloned()
                    .ok_or_else(|| usage("the stabilizer is trivial"))?,
            };
            let c = class_constant_a111(&action, &g)?;
            emit(&cli.out, &to_json(&c))?;
        }
        Command::Charsum(args) => {
            let table = CharacterTable::load(&args.table)?;
            let report = character_sum_check(&table, args.involution_class)?;
            let mut value = json!({ "report": report });
            if args.source.family.is_some() {
                let action = args.source.action()?;
                let g = action
                    .stabilizer()
                    .iter()
                    .find(|h| !h.is_identity())
                    .cloned()
                    .ok_or_else(|| usage("the stabilizer is trivial"))?;
                let counted = class_constant_a111(&action, &g)?;
                report.cross_check(&counted)?;
                value["a111"] = json!(counted);
            }
            emit(&cli.out, &to_json(&value))?;
        }
        Command::VerifyPaper(args) => {
            let scale = match args.scale {
                ScaleArg::Quick => Scale::Quick,
                ScaleArg::Full => Scale::Full,
            };
            let mut overrides = BTreeMap::new();
            for o in &args.overrides {
                let (id, value) = o
                    .rsplit_once('=')
                    .ok_or_else(|| usage(format!("--expect wants id=value, got {o:?}")))?;
                let r: Ratio<u64> = ratio_string::parse(value)
                    .ok_or_else(|| usage(format!("not a rational: {value:?}")))?;
                overrides.insert(id.to_string(), r);
            }
            let options = DensityOptions::default().with_threads(cli.threads);
            let rows = verify_paper(scale, options, &overrides)?;
            for r in &rows {
                eprintln!(
                    "{} {:<28} expected {:<5} computed {:<5} {:.2}s",
                    if r.matched { "MATCH" } else { "MISMATCH" },
                    r.id,
                    ratio_string::format(&r.expected),
                    ratio_string::format(&r.computed),
                    r.runtime_secs
                );
            }
            if let Some(path) = &args.csv {
                let mut text = String::from(VerifyRow::CSV_HEADER);
                for r in &rows {
                    text.push('\n');
                    text.push_str(&r.csv_row());
                }
                text.push('\n');
                std::fs::write(path, text)?;
            }
            emit(&cli.out, &to_json(&rows))?;
            return Ok(rows.iter().all(|r| r.matched));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
    }
}
