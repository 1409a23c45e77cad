use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly;
use crate::error::{input, Error, Result};

/// Largest field order supported; arithmetic tables are `O(q)`.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

/// The characteristic, degree and modulus that define `GF(p^e)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    /// Monic irreducible of degree `e`, low degree first (length `e + 1`).
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    /// The lexicographically smallest monic irreducible of degree `e`,
    /// comparing coefficients from the constant term up.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return input(format!("{p} is not prime"));
        }
        if e == 0 {
            return input("extension degree must be at least 1");
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(q) = q else {
            return input(format!("GF({p}^{e}) exceeds the supported order {MAX_FIELD_ORDER}"));
        };
        // the lower coefficients, read as a base-p number with the constant
        // term most significant, enumerate candidates in the required order
        for rank in 0..q {
            let mut lower = vec![0u32; e as usize];
            let mut r = rank;
            for i in (0..e as usize).rev() {
                lower[i] = (r % p as u64) as u32;
                r /= p as u64;
            }
            let mut f = lower;
            f.push(1);
            if poly::is_irreducible(&f, p) {
                return Ok(FieldSpec { p, e, modulus: f });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.e)
    }

    /// The modulus written in `x`, e.g. `x^2 + 1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        terms.join(" + ")
    }
}

/// An element of `GF(p^e)`, stored as its enumeration index
/// `Σ cᵢ pⁱ` where `cᵢ` are the polynomial coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic in `GF(p^e)` with log/antilog tables for multiplication.
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    primitive: FieldElement,
}

impl Field {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        Self::from_spec(FieldSpec::new(p, e)?)
    }

    /// Field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Self> {
        match prime_power(q) {
            Some((p, e)) => Self::new(p, e),
            None => input(format!("{q} is not a prime power")),
        }
    }

    /// Parses `"p^e"` or a plain prime power such as `"81"`.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        match name.split_once('^') {
            Some((p, e)) => {
                let p: u32 = p.trim().parse().map_err(|_| Error::Input(format!("bad field {name}")))?;
                let e: u32 = e.trim().parse().map_err(|_| Error::Input(format!("bad field {name}")))?;
                Self::new(p, e)
            }
            None => {
                let q: u64 = name.parse().map_err(|_| Error::Input(format!("bad field {name}")))?;
                Self::with_order(q)
            }
        }
    }

    pub fn from_spec(spec: FieldSpec) -> Result<Self> {
        let (p, e) = (spec.p, spec.e);
        if spec.modulus.len() != e as usize + 1 || spec.modulus.last() != Some(&1) {
            return input("modulus must be monic of degree e");
        }
        if !poly::is_irreducible(&spec.modulus, p) {
            return input(format!("{} is reducible over GF({p})", spec.modulus_string()));
        }
        let q = spec.order() as u32;
        let mut field = Field {
            spec,
            q,
            exp: Vec::new(),
            log: Vec::new(),
            primitive: FieldElement(1),
        };
        field.primitive = field.find_primitive();
        let g = field.primitive;
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = FieldElement(1);
        for k in 0..q - 1 {
            exp.push(x.0);
            log[x.0 as usize] = k;
            x = field.slow_mul(x, g);
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    fn digits(&self, x: FieldElement) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.spec.e as usize);
        let mut v = x.0;
        for _ in 0..self.spec.e {
            d.push(v % self.spec.p);
            v /= self.spec.p;
        }
        d
    }

    fn from_digits(&self, d: &[u32]) -> FieldElement {
        let mut v = 0u32;
        for &c in d.iter().rev() {
            v = v * self.spec.p + c;
        }
        FieldElement(v)
    }

    fn slow_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly::mul(&poly::trim(self.digits(a)), &poly::trim(self.digits(b)), self.spec.p);
        let r = poly::rem(&prod, &self.spec.modulus, self.spec.p);
        self.from_digits(&r)
    }

    fn slow_pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut acc = FieldElement(1);
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> FieldElement {
        let n = self.q as u64 - 1;
        let primes = prime_factors(n);
        (1..self.q)
            .map(FieldElement)
            .find(|&x| primes.iter().all(|&r| self.slow_pow(x, n / r) != FieldElement(1)))
            .expect("the multiplicative group is cyclic")
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.e
    }

    pub fn name(&self) -> String {
        if self.spec.e == 1 {
            format!("GF({})", self.q)
        } else {
            format!("GF({}^{})", self.spec.p, self.spec.e)
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.q, "index {index} outside GF({})", self.q);
        FieldElement(index)
    }

    /// Elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.spec.p as i64) as u32)
    }

    pub fn coefficients(&self, x: FieldElement) -> Vec<u32> {
        self.digits(x)
    }

    pub fn from_coefficients(&self, c: &[u32]) -> Result<FieldElement> {
        if c.len() != self.spec.e as usize || c.iter().any(|&d| d >= self.spec.p) {
            return input("coefficient vector does not describe a field element");
        }
        Ok(self.from_digits(c))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.e == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut v, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.spec.e {
            v += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(v)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.spec.p;
        if self.spec.e == 1 {
            return FieldElement((p - a.0) % p);
        }
        let (mut x, mut v, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.spec.e {
            v += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        FieldElement(v)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let n = self.q - 1;
        let k = (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % n as u64;
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero(self.q as u64));
        }
        let n = self.q - 1;
        Ok(FieldElement(self.exp[((n - self.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement(1);
        }
        if a.0 == 0 {
            return FieldElement(0);
        }
        let n = (self.q - 1) as u64;
        let e = (self.log[a.0 as usize] as u64 * (k % n)) % n;
        FieldElement(self.exp[e as usize])
    }

    /// The first element in enumeration order of multiplicative order `q-1`.
    pub fn primitive_element(&self) -> FieldElement {
        self.primitive
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Some(n / crate::permgroup::permutation::gcd(n, l))
    }

    pub fn is_nonzero_square(&self, a: FieldElement) -> bool {
        if a.0 == 0 {
            return false;
        }
        self.spec.p == 2 || self.log[a.0 as usize] % 2 == 0
    }

    /// `{x² : x ≠ 0}` in enumeration order.
    pub fn squares(&self) -> Vec<FieldElement> {
        let mut s: Vec<FieldElement> = self.units().map(|x| self.mul(x, x)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// The first non-square in enumeration order (odd `q` only).
    pub fn first_non_square(&self) -> Option<FieldElement> {
        self.units().find(|&x| !self.is_nonzero_square(x))
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, e)` with `q = p^e`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let primes = prime_factors(q);
    if primes.len() != 1 {
        return None;
    }
    let p = primes[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p as u32, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_uses_x2_plus_1() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.spec().modulus, vec![1, 0, 1]);
        assert_eq!(f.spec().modulus_string(), "x^2 + 1");
        // x · x = x² ≡ -1 = 2
        let x = f.from_coefficients(&[0, 1]).unwrap();
        assert_eq!(f.mul(x, x), f.from_int(2));
        assert_eq!(f.mul(x, x), f.from_int(-1));
    }

    #[test]
    fn additive_identity_and_inverses() {
        let f = Field::new(2, 4).unwrap();
        for x in f.elements() {
            assert_eq!(f.add(x, f.zero()), x);
            assert_eq!(f.add(x, f.neg(x)), f.zero());
            if !x.is_zero() {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
            }
        }
        assert!(matches!(f.inv(f.zero()), Err(Error::DivisionByZero(16))));
    }

    #[test]
    fn table_multiplication_matches_polynomial_multiplication() {
        for (p, e) in [(2, 3), (3, 3), (5, 2), (7, 1), (3, 4)] {
            let f = Field::new(p, e).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                }
            }
        }
    }

    #[test]
    fn primitive_elements() {
        assert_eq!(Field::new(2, 1).unwrap().primitive_element().index(), 1);
        assert_eq!(Field::new(7, 1).unwrap().primitive_element().index(), 3);
        // brute force over GF(9): first unit of order 8
        let f = Field::new(3, 2).unwrap();
        let brute = f
            .units()
            .find(|&x| (1..8).all(|k| f.slow_pow(x, k) != f.one()))
            .unwrap();
        assert_eq!(f.primitive_element(), brute);
        assert_eq!(f.multiplicative_order(brute), Some(8));
    }

    #[test]
    fn squares() {
        let f5 = Field::new(5, 1).unwrap();
        let s: Vec<u32> = f5.squares().iter().map(|x| x.index()).collect();
        assert_eq!(s, vec![1, 4]);
        assert_eq!(Field::new(3, 2).unwrap().squares().len(), 4);
        assert_eq!(Field::new(2, 2).unwrap().squares().len(), 3);
    }

    #[test]
    fn parse_and_prime_powers() {
        assert_eq!(Field::parse("3^4").unwrap().q(), 81);
        assert_eq!(Field::parse("25").unwrap().spec().e, 2);
        assert!(Field::parse("12").is_err());
        assert!(Field::new(4, 1).is_err());
        assert_eq!(prime_power(1024), Some((2, 10)));
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn moduli_are_smallest_irreducibles() {
        // brute force: scan monic degree-e polynomials in the required order
        for (p, e) in [(2u32, 2u32), (2, 3), (2, 4), (3, 3), (5, 2), (7, 2)] {
            let spec = FieldSpec::new(p, e).unwrap();
            let q = p.pow(e);
            let mut first = None;
            'outer: for rank in 0..q {
                let mut lower = vec![0u32; e as usize];
                let mut r = rank;
                for i in (0..e as usize).rev() {
                    lower[i] = r % p;
                    r /= p;
                }
                // no root and, for degree 4, no quadratic factor
                let mut f = lower.clone();
                f.push(1);
                for a in 0..p {
                    let v = f.iter().rev().fold(0u64, |acc, &c| (acc * a as u64 + c as u64) % p as u64);
                    if v == 0 {
                        continue 'outer;
                    }
                }
                if e == 4 {
                    for c0 in 0..p {
                        for c1 in 0..p {
                            if poly::rem(&f, &[c0, c1, 1], p).is_empty() {
                                continue 'outer;
                            }
                        }
                    }
                }
                first = Some(f);
                break;
            }
            assert_eq!(Some(spec.modulus), first, "GF({p}^{e})");
        }
    }
}
