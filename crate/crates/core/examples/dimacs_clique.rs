//! Maximum clique of a DIMACS graph, or of a random graph when no file is
//! given, with the maximum cliques enumerated.
//!
//! Usage: `cargo run --release --example dimacs_clique -- [graph.col]`

use intersection_density::clique::{enumerate_maximum_cliques, max_clique, SolverOptions};
use intersection_density::graph::{from_dimacs, BitGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> intersection_density::Result<()> {
    let graph = match std::env::args().nth(1) {
        Some(path) => from_dimacs(&std::fs::read_to_string(path)?)?,
        None => {
            let mut rng = StdRng::seed_from_u64(7);
            let n = 200;
            let mut g = BitGraph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.7) {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
    };
    let r = max_clique(&graph, SolverOptions::default());
    let all = enumerate_maximum_cliques(&graph, r.omega, 1000);
    println!(
        "{} vertices, {} edges: omega = {}, {} nodes, {:.3}s, {}{} maximum cliques",
        graph.order(),
        graph.edge_count(),
        r.omega,
        r.node_count,
        r.elapsed.as_secs_f64(),
        all.cliques.len(),
        if all.truncated { "+" } else { "" }
    );
    Ok(())
}
