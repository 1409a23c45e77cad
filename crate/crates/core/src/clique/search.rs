use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;

use super::{CliqueResult, SolverOptions};
use crate::graph::bitgraph::words_for;
use crate::graph::BitGraph;

/// The graph relabelled so that vertex `i` is `order[i]` of the original,
/// with a degeneracy ordering: vertices removed last come first.
struct Relabelled {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    order: Vec<usize>,
}

impl Relabelled {
    fn new(graph: &BitGraph) -> Self {
        let n = graph.order();
        let mut deg: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut removal = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            removed[v] = true;
            removal.push(v);
            for u in graph.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        removal.reverse();
        let order = removal;
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        for (i, &v) in order.iter().enumerate() {
            for u in graph.neighbors(v) {
                let j = position[u];
                rows[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        Relabelled {
            n,
            words,
            rows,
            order,
        }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    fn full_set(&self) -> Vec<u64> {
        let mut s = vec![u64::MAX; self.words];
        if self.n % 64 != 0 {
            if let Some(last) = s.last_mut() {
                *last = (1u64 << (self.n % 64)) - 1;
            }
        }
        s
    }

    fn original(&self, clique: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = clique.iter().map(|&v| self.order[v]).collect();
        out.sort_unstable();
        out
    }
}

fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

/// Greedy sequential colouring of `candidates`. Returns the vertices whose
/// colour is at least `min_color`, in colouring order, with their colours;
/// vertices of smaller colour cannot complete a large enough clique.
fn color_candidates(
    g: &Relabelled,
    candidates: &[u64],
    min_color: usize,
    uncolored: &mut Vec<u64>,
    class: &mut Vec<u64>,
    out: &mut Vec<(usize, usize)>,
) {
    out.clear();
    uncolored.clear();
    uncolored.extend_from_slice(candidates);
    let mut color = 0;
    while !is_empty(uncolored) {
        color += 1;
        class.clear();
        class.extend_from_slice(uncolored);
        let mut w = 0;
        while w < class.len() {
            if class[w] == 0 {
                w += 1;
                continue;
            }
            let v = w * 64 + class[w].trailing_zeros() as usize;
            class[w] &= class[w] - 1;
            uncolored[w] &= !(1u64 << (v % 64));
            for (c, r) in class.iter_mut().zip(g.row(v)) {
                *c &= !r;
            }
            if color >= min_color {
                out.push((v, color));
            }
        }
    }
}

/// Per-worker search state.
struct Worker<'a> {
    g: &'a Relabelled,
    best: &'a AtomicUsize,
    witness: &'a Mutex<Vec<usize>>,
    clique: Vec<usize>,
    nodes: u64,
    scratch: Vec<(Vec<u64>, Vec<(usize, usize)>)>,
    uncolored: Vec<u64>,
    class: Vec<u64>,
}

impl<'a> Worker<'a> {
    fn new(g: &'a Relabelled, best: &'a AtomicUsize, witness: &'a Mutex<Vec<usize>>) -> Self {
        Worker {
            g,
            best,
            witness,
            clique: Vec::new(),
            nodes: 0,
            scratch: Vec::new(),
            uncolored: Vec::new(),
            class: Vec::new(),
        }
    }

    fn record(&mut self) {
        let size = self.clique.len();
        if size <= self.best.load(Ordering::Relaxed) {
            return;
        }
        let mut w = self.witness.lock().unwrap();
        if size > self.best.load(Ordering::Relaxed) {
            self.best.store(size, Ordering::Relaxed);
            *w = self.clique.clone();
        }
    }

    fn expand(&mut self, candidates: &[u64], depth: usize) {
        self.nodes += 1;
        if self.scratch.len() <= depth {
            self.scratch.push((Vec::new(), Vec::new()));
        }
        let (mut p, mut list) = std::mem::take(&mut self.scratch[depth]);
        p.clear();
        p.extend_from_slice(candidates);
        let best = self.best.load(Ordering::Relaxed);
        let min_color = (best + 1).saturating_sub(self.clique.len()).max(1);
        color_candidates(self.g, &p, min_color, &mut self.uncolored, &mut self.class, &mut list);
        let mut next = vec![0u64; self.g.words];
        for i in (0..list.len()).rev() {
            let (v, color) = list[i];
            if self.clique.len() + color <= self.best.load(Ordering::Relaxed) {
                break;
            }
            self.clique.push(v);
            for ((n, a), b) in next.iter_mut().zip(&p).zip(self.g.row(v)) {
                *n = a & b;
            }
            if is_empty(&next) {
                self.record();
            } else {
                self.expand(&next, depth + 1);
            }
            self.clique.pop();
            p[v / 64] &= !(1u64 << (v % 64));
        }
        self.scratch[depth] = (p, list);
    }
}

fn run(g: &Relabelled, floor: usize, threads: Option<usize>) -> (usize, Vec<usize>, u64) {
    let best = AtomicUsize::new(floor);
    let witness = Mutex::new(Vec::new());
    let nodes = AtomicU64::new(1);
    let all = g.full_set();
    let mut root = Vec::new();
    color_candidates(g, &all, floor + 1, &mut Vec::new(), &mut Vec::new(), &mut root);

    // branch i sees the candidates not yet consumed by the branches after it
    let mut later = vec![0u64; g.words];
    let mut branches: Vec<(usize, usize, Vec<u64>)> = Vec::with_capacity(root.len());
    for &(v, color) in root.iter().rev() {
        let cand: Vec<u64> = all
            .iter()
            .zip(&later)
            .zip(g.row(v))
            .map(|((a, l), r)| a & !l & r)
            .collect();
        branches.push((v, color, cand));
        later[v / 64] |= 1 << (v % 64);
    }

    let branch = |w: &mut Worker, (v, color, cand): &(usize, usize, Vec<u64>)| {
        if *color <= w.best.load(Ordering::Relaxed) {
            return;
        }
        w.clique.clear();
        w.clique.push(*v);
        if is_empty(cand) {
            w.record();
        } else {
            w.expand(cand, 0);
        }
    };

    match threads {
        Some(1) => {
            let mut w = Worker::new(g, &best, &witness);
            for b in &branches {
                branch(&mut w, b);
            }
            nodes.fetch_add(w.nodes, Ordering::Relaxed);
        }
        _ => {
            let search = || {
                branches.par_iter().for_each_init(
                    || Worker::new(g, &best, &witness),
                    |w, b| {
                        let before = w.nodes;
                        branch(w, b);
                        nodes.fetch_add(w.nodes - before, Ordering::Relaxed);
                    },
                )
            };
            match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .expect("thread pool")
                    .install(search),
                None => search(),
            }
        }
    }
    let w = witness.into_inner().unwrap();
    (best.into_inner(), w, nodes.into_inner())
}

/// Exact clique number with a witness.
pub fn max_clique(graph: &BitGraph, options: SolverOptions) -> CliqueResult {
    let start = Instant::now();
    let g = Relabelled::new(graph);
    if g.n == 0 {
        return CliqueResult {
            omega: 0,
            witness: Vec::new(),
            node_count: 0,
            elapsed: start.elapsed(),
        };
    }
    let floor = options.lower_hint.map_or(0, |h| h.saturating_sub(1)).min(g.n);
    let (mut omega, mut witness, mut nodes) = run(&g, floor, options.threads);
    if witness.is_empty() {
        let (o, w, extra) = run(&g, 0, options.threads);
        omega = o;
        witness = w;
        nodes += extra;
    }
    let witness = g.original(&witness);
    debug_assert!(graph.is_clique(&witness) && witness.len() == omega);
    CliqueResult {
        omega,
        witness,
        node_count: nodes,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueEnumeration {
    /// Cliques of the requested size, each sorted, in lexicographic order.
    pub cliques: Vec<Vec<usize>>,
    /// Set when more cliques exist than the cap allowed to collect.
    pub truncated: bool,
}

/// All cliques of exactly `omega` vertices, up to `cap` of them. `omega`
/// should be the clique number; larger cliques are not reported.
pub fn enumerate_maximum_cliques(graph: &BitGraph, omega: usize, cap: usize) -> CliqueEnumeration {
    let g = Relabelled::new(graph);
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut truncated = false;
    if omega == 0 {
        return CliqueEnumeration {
            cliques: vec![Vec::new()],
            truncated: false,
        };
    }

    fn walk(
        g: &Relabelled,
        clique: &mut Vec<usize>,
        candidates: Vec<u64>,
        omega: usize,
        cap: usize,
        found: &mut Vec<Vec<usize>>,
        truncated: &mut bool,
    ) {
        if *truncated {
            return;
        }
        if clique.len() == omega {
            if found.len() == cap {
                *truncated = true;
            } else {
                found.push(g.original(clique));
            }
            return;
        }
        let mut list = Vec::new();
        let need = omega - clique.len();
        color_candidates(g, &candidates, need, &mut Vec::new(), &mut Vec::new(), &mut list);
        let mut p = candidates;
        for i in (0..list.len()).rev() {
            let (v, color) = list[i];
            if color < need {
                break;
            }
            clique.push(v);
            let next: Vec<u64> = p.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
            walk(g, clique, next, omega, cap, found, truncated);
            clique.pop();
            p[v / 64] &= !(1u64 << (v % 64));
            if *truncated {
                return;
            }
        }
    }

    walk(&g, &mut Vec::new(), g.full_set(), omega, cap, &mut found, &mut truncated);
    found.sort();
    CliqueEnumeration {
        cliques: found,
        truncated,
    }
}
