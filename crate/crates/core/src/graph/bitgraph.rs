use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// Words of 64 bits needed for a row of `n` bits.
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterates the set bits of a packed bitset in increasing order.
pub fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + b)
        })
    })
}

/// Dense undirected simple graph stored as packed adjacency rows.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<usize>>,
}

impl BitGraph {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitGraph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = BitGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = BitGraph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) outside {n} vertices"));
            }
            if u == v {
                return input(format!("self-loop at {u}"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex rows computed independently, then
    /// checks symmetry.
    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        let g = BitGraph {
            n,
            words: words_for(n),
            rows,
            labels: None,
        };
        for u in 0..n {
            if g.has_edge(u, u) {
                return input(format!("self-loop at {u}"));
            }
            for v in g.neighbors(u) {
                if !g.has_edge(v, u) {
                    return input(format!("adjacency is not symmetric at ({u}, {v})"));
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn words_per_row(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn complement(&self) -> BitGraph {
        let mut g = BitGraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Subgraph induced on `vertices` (in the given order). Labels of the
    /// result map back to the original vertex ids, or to the original labels
    /// if present.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> BitGraph {
        let mut g = BitGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g.labels = Some(vertices.iter().map(|&v| self.label(v)).collect());
        g
    }

    pub fn labels(&self) -> Option<&[usize]> {
        self.labels.as_deref()
    }

    /// The label of `v`, or `v` itself when the graph is unlabelled.
    pub fn label(&self, v: usize) -> usize {
        self.labels.as_ref().map_or(v, |l| l[v])
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.n {
            return input(format!("{} labels for {} vertices", labels.len(), self.n));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Vertices adjacent to every vertex of `set`.
    pub fn common_neighbors(&self, set: &[usize]) -> Vec<usize> {
        let mut acc = vec![u64::MAX; self.words];
        for &v in set {
            for (a, r) in acc.iter_mut().zip(self.row(v)) {
                *a &= r;
            }
        }
        iter_bits(&acc).filter(|&v| v < self.n).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl std::fmt::Debug for BitGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BitGraph")
            .field("n", &self.n)
            .field("m", &self.edge_count())
            .finish()
    }
}
