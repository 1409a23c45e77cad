use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::finitefield::{Field, FieldElement};

/// A 2×2 matrix over a finite field, entries `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity(f: &Field) -> Self {
        Mat2::new(f.one(), f.zero(), f.zero(), f.one())
    }

    pub fn entries(&self) -> [FieldElement; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn det(&self, f: &Field) -> FieldElement {
        f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
    }

    pub fn trace(&self, f: &Field) -> FieldElement {
        f.add(self.a, self.d)
    }

    pub fn mul(&self, other: &Mat2, f: &Field) -> Mat2 {
        let dot = |x: FieldElement, y: FieldElement, z: FieldElement, w: FieldElement| {
            f.add(f.mul(x, y), f.mul(z, w))
        };
        Mat2 {
            a: dot(self.a, other.a, self.b, other.c),
            b: dot(self.a, other.b, self.b, other.d),
            c: dot(self.c, other.a, self.d, other.c),
            d: dot(self.c, other.b, self.d, other.d),
        }
    }

    /// Inverse of a determinant-1 matrix (the adjugate).
    pub fn inverse_sl(&self, f: &Field) -> Mat2 {
        Mat2::new(self.d, f.neg(self.b), f.neg(self.c), self.a)
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.a, self.c, self.b, self.d)
    }

    pub fn neg(&self, f: &Field) -> Mat2 {
        Mat2::new(f.neg(self.a), f.neg(self.b), f.neg(self.c), f.neg(self.d))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

/// An element of `PSL(2,q)`: a determinant-1 matrix in canonical sign form.
///
/// For odd `q` the first nonzero entry in the order `a, b, c, d` is the
/// smaller (by field index) of `t` and `-t`, so `M` and `-M` share one
/// representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjMatrix(Mat2);

impl ProjMatrix {
    pub fn canonical(m: Mat2, f: &Field) -> Result<Self> {
        if m.det(f) != f.one() {
            return input(format!("{m} does not have determinant 1"));
        }
        Ok(Self::canonical_unchecked(m, f))
    }

    pub(crate) fn canonical_unchecked(m: Mat2, f: &Field) -> Self {
        let t = m.entries().into_iter().find(|x| !x.is_zero()).expect("nonzero matrix");
        if f.neg(t) < t {
            ProjMatrix(m.neg(f))
        } else {
            ProjMatrix(m)
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.0
    }

    pub fn is_identity(&self, f: &Field) -> bool {
        self.0 == Mat2::identity(f)
    }

    /// Trace of the canonical representative; only defined up to sign in
    /// `PSL(2,q)`.
    pub fn trace(&self, f: &Field) -> FieldElement {
        self.0.trace(f)
    }

    pub fn mul(&self, other: &ProjMatrix, f: &Field) -> ProjMatrix {
        Self::canonical_unchecked(self.0.mul(&other.0, f), f)
    }

    pub fn inverse(&self, f: &Field) -> ProjMatrix {
        Self::canonical_unchecked(self.0.inverse_sl(f), f)
    }

    pub fn transpose(&self, f: &Field) -> ProjMatrix {
        Self::canonical_unchecked(self.0.transpose(), f)
    }

    /// `s·self·s⁻¹`.
    pub fn conjugate_by(&self, s: &ProjMatrix, f: &Field) -> ProjMatrix {
        s.mul(self, f).mul(&s.inverse(f), f)
    }

    pub fn order(&self, f: &Field) -> u64 {
        let mut x = *self;
        let mut k = 1;
        while !x.is_identity(f) {
            x = x.mul(self, f);
            k += 1;
        }
        k
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
