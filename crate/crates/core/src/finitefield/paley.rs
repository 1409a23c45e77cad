use super::field::Field;
use crate::error::{input, Result};
use crate::graph::BitGraph;

/// The Paley graph on `GF(q)`: `x ~ y` iff `x - y` is a nonzero square.
/// Vertex `i` is the field element with index `i`.
pub fn paley_graph(q: u64) -> Result<BitGraph> {
    if q % 4 != 1 {
        return input(format!(
            "the Paley graph needs q ≡ 1 (mod 4) so that -1 is a square; got q = {q}"
        ));
    }
    let field = Field::with_order(q)?;
    paley_graph_over(&field)
}

pub fn paley_graph_over(field: &Field) -> Result<BitGraph> {
    let q = field.q() as usize;
    if q % 4 != 1 {
        return input(format!("the Paley graph needs q ≡ 1 (mod 4); got q = {q}"));
    }
    let mut g = BitGraph::new(q);
    for x in field.elements() {
        for y in field.elements().filter(|y| y.index() > x.index()) {
            if field.is_nonzero_square(field.sub(x, y)) {
                g.add_edge(x.index() as usize, y.index() as usize);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley_five_is_the_pentagon() {
        let g = paley_graph(5).unwrap();
        let expected = BitGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn paley_is_regular_with_quarter_edges() {
        for q in [9u64, 13, 25, 49] {
            let g = paley_graph(q).unwrap();
            assert_eq!(g.regular_degree(), Some((q as usize - 1) / 2));
            assert_eq!(g.edge_count() as u64, q * (q - 1) / 4);
        }
        assert!(paley_graph(7).is_err());
        assert!(paley_graph(21).is_err());
    }
}
