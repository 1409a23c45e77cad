//! Dense polynomials over GF(p), coefficients low degree first.

pub(crate) type Poly = Vec<u32>;

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mod_inv(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u32, mut k: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        k >>= 1;
    }
    a = acc as u32;
    a
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo a nonzero `m`.
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> Poly {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let lead_inv = mod_inv(*m.last().expect("nonzero modulus"), p) as u64;
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv) % p as u64;
        for (i, &c) in m.iter().enumerate() {
            let t = (factor * c as u64) % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - t) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `base^(p^k)` reduced modulo `m`, by repeated p-th powers.
fn frobenius_power(base: &[u32], k: u32, m: &[u32], p: u32) -> Poly {
    let mut h = rem(base, m, p);
    for _ in 0..k {
        let mut acc: Poly = vec![1];
        for _ in 0..p {
            acc = rem(&mul(&acc, &h, p), m, p);
        }
        h = acc;
    }
    h
}

/// Monic `f` of degree `e ≥ 1` is irreducible over GF(p) iff
/// `gcd(f, x^(p^k) - x) = 1` for every `1 ≤ k ≤ e/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let e = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    let x: Poly = vec![0, 1];
    for k in 1..=(e / 2) as u32 {
        let h = frobenius_power(&x, k, &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
