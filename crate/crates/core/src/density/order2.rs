use std::path::Path;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::permgroup::{conjugacy_class_under, Permutation, TransitiveAction};

/// Tolerance on floating-point character sums.
pub const CHARACTER_SUM_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassConstant {
    pub class_size: u64,
    /// `#{(x, y) ∈ C × C : xy = g}` for the class `C` of `g`.
    pub a111: u64,
    /// Whether the action has the EKR property, i.e. `a111 = 0`.
    pub ekr: bool,
}

/// Counts products of two class members equal to `g`, for a non-identity
/// point-fixer `g` of an action with point stabilizers of order 2.
pub fn class_constant_a111(action: &TransitiveAction, g: &Permutation) -> Result<ClassConstant> {
    if action.stabilizer_order() != 2 {
        return Err(Error::Hypothesis(format!(
            "point stabilizers have order {}, not 2",
            action.stabilizer_order()
        )));
    }
    let fixers = action.fixer_set();
    if fixers.binary_search(g).is_err() {
        return input(format!("{g} is not a non-identity point-fixer"));
    }
    let class = conjugacy_class_under(action.group().generators(), g);
    let members: FxHashSet<&Permutation> = class.iter().collect();
    let a111 = class
        .iter()
        .filter(|x| members.contains(&x.inverse().mul(g)))
        .count() as u64;
    Ok(ClassConstant {
        class_size: class.len() as u64,
        a111,
        ekr: a111 == 0,
    })
}

/// Whether `set` generates an elementary abelian 2-group.
pub fn generates_elementary_abelian_2_group(set: &[Permutation]) -> bool {
    set.iter().all(|x| x.mul(x).is_identity())
        && set
            .iter()
            .enumerate()
            .all(|(i, a)| set[i + 1..].iter().all(|b| a.commutes_with(b)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub size: u64,
    pub rep_order: u64,
}

/// Character values as read from JSON: one row per irreducible character,
/// one `[re, im]` pair per class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub classes: Vec<ClassInfo>,
    pub chars: Vec<Vec<[f64; 2]>>,
}

impl CharacterTable {
    pub fn from_json(text: &str) -> Result<Self> {
        let table: CharacterTable = serde_json::from_str(text)?;
        table.validate()?;
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn group_order(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    fn identity_class(&self) -> Result<usize> {
        match self.classes.iter().position(|c| c.rep_order == 1) {
            Some(i) if self.classes[i].size == 1 => Ok(i),
            _ => input("character table has no identity class of size 1"),
        }
    }

    fn validate(&self) -> Result<()> {
        let k = self.classes.len();
        if k == 0 {
            return input("character table has no classes");
        }
        if self.chars.len() != k {
            return input(format!(
                "character table has {} characters but {k} classes",
                self.chars.len()
            ));
        }
        if let Some(row) = self.chars.iter().find(|r| r.len() != k) {
            return input(format!("a character row has {} values, expected {k}", row.len()));
        }
        if self.chars.iter().flatten().flatten().any(|v| !v.is_finite()) {
            return input("character table contains a non-finite value");
        }
        let one = self.identity_class()?;
        let mut degrees = 0.0;
        for row in &self.chars {
            let [re, im] = row[one];
            if re < 1.0 - CHARACTER_SUM_TOLERANCE || im.abs() > CHARACTER_SUM_TOLERANCE {
                return input("character degree is not a positive real");
            }
            degrees += re * re;
        }
        let order = self.group_order() as f64;
        if (degrees - order).abs() > CHARACTER_SUM_TOLERANCE * order {
            return input(format!(
                "squared degrees sum to {degrees}, not the group order {order}"
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharSumReport {
    pub class: usize,
    /// `Σ_χ χ(g)³ / χ(1)` as `[re, im]`.
    pub sum: [f64; 2],
    pub vanishes: bool,
    /// The class constant predicted by the class algebra formula.
    pub predicted_a111: f64,
}

impl CharSumReport {
    /// Errors unless the predicted class constant is within tolerance of
    /// the counted one.
    pub fn cross_check(&self, counted: &ClassConstant) -> Result<()> {
        if (self.predicted_a111 - counted.a111 as f64).abs() > 1e-4 {
            return Err(Error::CrossCheck(format!(
                "character sum predicts a111 = {}, counted {}",
                self.predicted_a111, counted.a111
            )));
        }
        Ok(())
    }
}

/// Evaluates `Σ_χ χ(g)² conj(χ(g)) / χ(1)` over the class `class` of an
/// involution.
pub fn character_sum_check(table: &CharacterTable, class: usize) -> Result<CharSumReport> {
    table.validate()?;
    let info = table
        .classes
        .get(class)
        .ok_or_else(|| Error::Input(format!("class index {class} out of range")))?;
    if info.rep_order != 2 {
        return input(format!(
            "class {class} has representatives of order {}, not 2",
            info.rep_order
        ));
    }
    let one = table.identity_class()?;
    let (mut re, mut im) = (0.0, 0.0);
    for row in &table.chars {
        let [a, b] = row[class];
        let deg = row[one][0];
        // (a+bi)² (a−bi) = (a² + b²)(a + bi)
        let norm = a * a + b * b;
        re += norm * a / deg;
        im += norm * b / deg;
    }
    let size = info.size as f64;
    Ok(CharSumReport {
        class,
        sum: [re, im],
        vanishes: re.hypot(im) < CHARACTER_SUM_TOLERANCE,
        predicted_a111: size * size / table.group_order() as f64 * re,
    })
}
