//! Clique numbers of Paley graphs; for square `q` the clique number is `√q`.

use intersection_density::clique::{max_clique, SolverOptions};
use intersection_density::constructions::paley;
use intersection_density::graph::summary;

fn main() -> intersection_density::Result<()> {
    for q in [5, 9, 13, 17, 25, 29, 37, 41, 49, 81, 121, 169] {
        let g = paley(q)?;
        let s = summary(&g);
        let r = max_clique(&g, SolverOptions::default());
        println!(
            "P_{q:<4} {} vertices, {}-regular, omega = {:<2} witness {:?}",
            s.n,
            s.regular_degree.unwrap_or(0),
            r.omega,
            r.witness
        );
    }
    Ok(())
}
