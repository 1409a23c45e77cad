//! Independent reference computations used only by tests.

use intersection_density::graph::BitGraph;
use intersection_density::permgroup::Permutation;
use rustc_hash::FxHashSet;

/// Clique number by Bron–Kerbosch on 32-bit masks; `n ≤ 32`.
pub fn brute_force_omega(g: &BitGraph) -> usize {
    let n = g.order();
    assert!(n <= 32);
    let adj: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect();
    fn bk(adj: &[u32], size: usize, p: u32, x: u32, best: &mut usize) {
        if p == 0 {
            if x == 0 {
                *best = (*best).max(size);
            }
            return;
        }
        if size + (p.count_ones() as usize) <= *best {
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        let (mut p, mut x) = (p, x);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            bk(adj, size + 1, p & adj[v], x & adj[v], best);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    bk(&adj, 0, all, 0, &mut best);
    best
}

/// Every element of the group generated by `gens`, by naive closure.
pub fn closure(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: FxHashSet<Permutation> = FxHashSet::default();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = s.mul(&g);
            if seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    out
}

/// Agreement in the action on cosets of `h`: `g⁻¹k` lies in some conjugate
/// `xHx⁻¹`, tried for every `x` in `group`.
pub fn agree_on_cosets(group: &[Permutation], h: &FxHashSet<Permutation>, g: &Permutation, k: &Permutation) -> bool {
    let d = g.inverse().mul(k);
    group.iter().any(|x| h.contains(&x.inverse().mul(&d).mul(x)))
}

pub fn intersecting_on_cosets(group: &[Permutation], h: &[Permutation], set: &[Permutation]) -> bool {
    let h: FxHashSet<Permutation> = h.iter().cloned().collect();
    set.iter()
        .enumerate()
        .all(|(i, a)| set[i + 1..].iter().all(|b| agree_on_cosets(group, &h, a, b)))
}

/// Agreement in the natural action: some point has the same image.
pub fn agree_on_points(g: &Permutation, k: &Permutation) -> bool {
    g.images().iter().zip(k.images()).any(|(a, b)| a == b)
}

pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|d| n % d == 0).unwrap();
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}
