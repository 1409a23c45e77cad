//! Graph file formats: DIMACS edge lists, JSON summaries and DOT.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::bitgraph::BitGraph;
use super::orbital::OrbitalDigraph;
use crate::error::{input, Error, Result};

/// DIMACS `edge` format: a `p edge n m` line, then `e u v` per edge with
/// 1-based vertices.
pub fn to_dimacs(graph: &BitGraph) -> String {
    let mut out = format!("p edge {} {}\n", graph.order(), graph.edge_count());
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses the DIMACS `edge` format. Comment lines (`c`) are skipped and
/// repeated edges are merged.
pub fn from_dimacs(text: &str) -> Result<BitGraph> {
    let mut graph: Option<BitGraph> = None;
    for (lineno, line) in text.lines().enumerate() {
        let bad = || Error::Input(format!("line {}: cannot parse {line:?}", lineno + 1));
        let mut words = line.split_whitespace();
        match words.next() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return input(format!("line {}: second problem line", lineno + 1));
                }
                let _format = words.next().ok_or_else(bad)?;
                let n: usize = words.next().and_then(|w| w.parse().ok()).ok_or_else(bad)?;
                graph = Some(BitGraph::new(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| {
                    Error::Input(format!("line {}: edge before problem line", lineno + 1))
                })?;
                let mut endpoint = || -> Result<usize> {
                    let v: usize = words.next().and_then(|w| w.parse().ok()).ok_or_else(bad)?;
                    if v == 0 || v > g.order() {
                        return input(format!("line {}: vertex {v} out of range", lineno + 1));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (endpoint()?, endpoint()?);
                if u == v {
                    return input(format!("line {}: self-loop", lineno + 1));
                }
                g.add_edge(u, v);
            }
            Some(_) => return Err(bad()),
        }
    }
    graph.ok_or_else(|| Error::Input("missing problem line".into()))
}

/// Compact description of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    /// Common degree, `null` when the graph is not regular.
    pub regular_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
}

pub fn summary(graph: &BitGraph) -> GraphSummary {
    GraphSummary {
        n: graph.order(),
        m: graph.edge_count(),
        regular_degree: graph.regular_degree(),
        labels: graph.labels().map(<[usize]>::to_vec),
    }
}

/// Graphviz digraph of an orbital; pairs of opposite arcs are kept as two
/// arcs.
pub fn orbital_to_dot(orbital: &OrbitalDigraph, name: &str) -> String {
    let mut out = format!("digraph \"{name}\" {{\n");
    for v in 0..orbital.degree() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in orbital.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let g = BitGraph::from_edges(4, &[(0, 1), (2, 3), (1, 3)]).unwrap();
        let text = to_dimacs(&g);
        assert!(text.starts_with("p edge 4 3\n"));
        assert_eq!(from_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_rejects_bad_input() {
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(from_dimacs("c nothing\n").is_err());
        let g = from_dimacs("c hi\np edge 3 1\ne 3 1\n").unwrap();
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn summary_json() {
        let g = BitGraph::complete(3);
        let s = summary(&g);
        assert_eq!(s.regular_degree, Some(2));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"n":3,"m":3,"regular_degree":2}"#);
    }
}
