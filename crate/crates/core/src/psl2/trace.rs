//! The neighbourhood of `diag(r, r²)` among elements of order 3 when
//! `q ≡ 1 (mod 3)`, and the traces of products of its members.

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::group::Psl2;
use super::matrix::{Mat2, ProjMatrix};
use crate::error::{input, Error, Result};
use crate::finitefield::{Field, FieldElement};

/// Fields up to this order are swept over all pairs `(x, y)`.
pub const FULL_SWEEP_MAX_Q: u64 = 64;
pub const SAMPLED_PAIRS: usize = 10_000;

/// The matrices `A_x = [-r² x; 0 -r]` and
/// `B_x = [r/(r-1) -2x; 1/(3x) -1/(r-1)]` in `SL(2,q)`.
#[derive(Clone, Debug)]
pub struct TraceFamilies {
    field: Field,
    r: FieldElement,
}

impl TraceFamilies {
    pub fn new(field: Field) -> Result<Self> {
        let r = Psl2::over(field.clone())
            .cube_root_of_unity()
            .ok_or_else(|| Error::Hypothesis(format!("{} has no cube root of unity other than 1", field.name())))?;
        Ok(TraceFamilies { field, r })
    }

    pub fn r(&self) -> FieldElement {
        self.r
    }

    /// `B_x` needs `1/3` and `1/(r-1)`, so it exists only in odd characteristic.
    pub fn has_b_family(&self) -> bool {
        self.field.characteristic() != 2
    }

    pub fn a0(&self) -> Mat2 {
        let f = &self.field;
        Mat2::new(self.r, f.zero(), f.zero(), f.mul(self.r, self.r))
    }

    pub fn a(&self, x: FieldElement) -> Mat2 {
        let f = &self.field;
        let r = self.r;
        Mat2::new(f.neg(f.mul(r, r)), x, f.zero(), f.neg(r))
    }

    pub fn b(&self, x: FieldElement) -> Result<Mat2> {
        let f = &self.field;
        let r = self.r;
        let rm1 = f.sub(r, f.one());
        let three = f.from_int(3);
        Ok(Mat2::new(
            f.div(r, rm1)?,
            f.neg(f.mul(f.from_int(2), x)),
            f.inv(f.mul(three, x))?,
            f.neg(f.inv(rm1)?),
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceRow {
    AInv,
    ATransposeInv,
    BInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceColumn {
    A,
    ATranspose,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceMismatch {
    pub row: TraceRow,
    pub column: TraceColumn,
    pub x: u32,
    pub y: u32,
    pub expected: u32,
    pub computed: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceTableReport {
    pub q: u64,
    pub full_sweep: bool,
    pub pairs_checked: u64,
    pub entries_checked: u64,
    pub mismatches: Vec<TraceMismatch>,
}

impl TraceTableReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// The closed-form traces `Tr(XY)` for `X ∈ {A_x⁻¹, (A_xᵀ)⁻¹, B_x⁻¹}` and
/// `Y ∈ {A_y, A_yᵀ, B_y}`.
fn expected_trace(
    f: &Field,
    row: TraceRow,
    column: TraceColumn,
    x: FieldElement,
    y: FieldElement,
) -> Result<FieldElement> {
    use TraceColumn as C;
    use TraceRow as R;
    let two = f.from_int(2);
    let three = f.from_int(3);
    let xy = f.mul(x, y);
    Ok(match (row, column) {
        (R::AInv, C::A) | (R::ATransposeInv, C::ATranspose) => two,
        (R::AInv, C::ATranspose) | (R::ATransposeInv, C::A) => f.sub(two, xy),
        (R::AInv, C::B) => f.neg(f.div(x, f.mul(three, y))?),
        (R::BInv, C::A) => f.neg(f.div(y, f.mul(three, x))?),
        (R::ATransposeInv, C::B) | (R::BInv, C::ATranspose) => f.mul(two, xy),
        (R::BInv, C::B) => {
            let s = f.add(f.add(f.one(), f.div(x, y)?), f.div(y, x)?);
            f.mul(f.div(two, three)?, s)
        }
    })
}

fn check_pair(fam: &TraceFamilies, x: FieldElement, y: FieldElement) -> Result<(u64, Vec<TraceMismatch>)> {
    let f = &fam.field;
    let mut rows = vec![
        (TraceRow::AInv, fam.a(x).inverse_sl(f)),
        (TraceRow::ATransposeInv, fam.a(x).transpose().inverse_sl(f)),
    ];
    let mut cols = vec![(TraceColumn::A, fam.a(y)), (TraceColumn::ATranspose, fam.a(y).transpose())];
    if fam.has_b_family() {
        rows.push((TraceRow::BInv, fam.b(x)?.inverse_sl(f)));
        cols.push((TraceColumn::B, fam.b(y)?));
    }
    let mut checked = 0;
    let mut bad = Vec::new();
    for &(row, xm) in &rows {
        for &(column, ym) in &cols {
            checked += 1;
            let computed = xm.mul(&ym, f).trace(f);
            let expected = expected_trace(f, row, column, x, y)?;
            if computed != expected {
                bad.push(TraceMismatch {
                    row,
                    column,
                    x: x.index(),
                    y: y.index(),
                    expected: expected.index(),
                    computed: computed.index(),
                });
            }
        }
    }
    Ok((checked, bad))
}

/// Checks the trace table over all pairs of units for `q ≤ 64`, and over
/// 10⁴ pairs drawn from a fixed-seed generator otherwise. In characteristic
/// 2 only the four `A`-entries exist.
pub fn verify_trace_table(q: u64) -> Result<TraceTableReport> {
    if q % 3 != 1 {
        return input(format!("the trace families need q ≡ 1 (mod 3); got q = {q}"));
    }
    let field = Field::with_order(q)?;
    let fam = TraceFamilies::new(field.clone())?;
    for x in field.units() {
        for m in [fam.a(x)].into_iter().chain(fam.has_b_family().then(|| fam.b(x)).transpose()?) {
            if m.det(&field) != field.one() {
                return Err(Error::CrossCheck(format!("{m} does not have determinant 1")));
            }
        }
    }
    let full_sweep = q <= FULL_SWEEP_MAX_Q;
    let pairs: Vec<(FieldElement, FieldElement)> = if full_sweep {
        field.units().flat_map(|x| field.units().map(move |y| (x, y))).collect()
    } else {
        let mut rng = rand::rngs::StdRng::seed_from_u64(q);
        (0..SAMPLED_PAIRS)
            .map(|_| {
                let x = field.element(rng.gen_range(1..field.q()));
                let y = field.element(rng.gen_range(1..field.q()));
                (x, y)
            })
            .collect()
    };
    let results: Vec<(u64, Vec<TraceMismatch>)> = pairs
        .par_iter()
        .map(|&(x, y)| check_pair(&fam, x, y))
        .collect::<Result<_>>()?;
    let mut report = TraceTableReport {
        q,
        full_sweep,
        pairs_checked: pairs.len() as u64,
        entries_checked: 0,
        mismatches: Vec::new(),
    };
    for (n, bad) in results {
        report.entries_checked += n;
        report.mismatches.extend(bad);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighbourhoodReport {
    pub q: u64,
    /// Elements of order 3 `A` with `A₀⁻¹A` also of order 3.
    pub neighbourhood_size: usize,
    /// `|{A₀⁻¹} ∪ O₁ ∪ O₁' ∪ O₂|` with `O₂ = ∅` in characteristic 2.
    pub predicted_size: usize,
    pub o2_size: usize,
    pub matches: bool,
}

/// Compares the neighbourhood of `A₀ = diag(r, r²)` in the graph on
/// elements of order 3 (adjacent when `A⁻¹B` has order 3) with the union
/// of `{A₀⁻¹}`, `O₁ = {A_x}`, `O₁' = {A_xᵀ}` and `O₂ = {B_x}`, by
/// enumerating the whole group.
pub fn verify_neighbourhood_classification(q: u64, cap: usize) -> Result<NeighbourhoodReport> {
    if q % 3 != 1 {
        return input(format!("the neighbourhood classification needs q ≡ 1 (mod 3); got q = {q}"));
    }
    let g = Psl2::new(q)?;
    let f = g.field().clone();
    let fam = TraceFamilies::new(f.clone())?;
    let elements = g.enumerate(cap)?;
    let a0 = g.element(fam.a0())?;
    let a0inv = g.inverse(&a0);
    let mut actual: Vec<ProjMatrix> = elements
        .matrices
        .iter()
        .filter(|m| g.element_order(m) == 3 && g.element_order(&g.mul(&a0inv, m)) == 3)
        .copied()
        .collect();
    actual.sort_unstable();
    let mut predicted = vec![a0inv];
    let mut o2 = Vec::new();
    for x in f.units() {
        predicted.push(g.element(fam.a(x))?);
        predicted.push(g.element(fam.a(x).transpose())?);
        if fam.has_b_family() {
            o2.push(g.element(fam.b(x)?)?);
        }
    }
    o2.sort_unstable();
    o2.dedup();
    predicted.extend(&o2);
    predicted.sort_unstable();
    predicted.dedup();
    Ok(NeighbourhoodReport {
        q,
        neighbourhood_size: actual.len(),
        predicted_size: predicted.len(),
        o2_size: o2.len(),
        matches: actual == predicted,
    })
}
