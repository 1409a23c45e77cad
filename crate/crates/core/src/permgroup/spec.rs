//! JSON group specification:
//!
//! ```json
//! { "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]],
//!   "subgroup": [[1, 0, 2]] }
//! ```
//!
//! `subgroup` is optional and is either a list of generators or
//! `{"point": v, "order": k}`, which selects an order-`k` subgroup of the
//! stabilizer of `v`. Without it the natural action is studied.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::action::{ActionKind, TransitiveAction};
use super::group::{generate_elements, PermGroup};
use super::permutation::Permutation;
use crate::error::{input, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupSpec {
    Generators(Vec<Vec<u32>>),
    Stabilizer { point: u32, order: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSpec>,
}

fn perms(degree: usize, arrays: &[Vec<u32>]) -> Result<Vec<Permutation>> {
    arrays
        .iter()
        .map(|a| {
            if a.len() != degree {
                return input(format!(
                    "generator has {} images but degree is {degree}",
                    a.len()
                ));
            }
            Permutation::from_images(a.clone())
        })
        .collect()
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("group spec serialises")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    /// Describes an action so that [`GroupSpec::into_action`] rebuilds it.
    pub fn from_action(action: &TransitiveAction) -> Self {
        let group = action.group();
        let subgroup = match action.kind() {
            ActionKind::Natural => None,
            ActionKind::Cosets => Some(SubgroupSpec::Generators(
                action
                    .stabilizer_generators()
                    .iter()
                    .map(|g| g.images().to_vec())
                    .collect(),
            )),
        };
        GroupSpec {
            degree: group.degree(),
            generators: group.generators().iter().map(|g| g.images().to_vec()).collect(),
            subgroup,
        }
    }

    pub fn into_action(&self, label: impl Into<String>, cap: usize) -> Result<TransitiveAction> {
        if self.degree == 0 {
            return input("degree must be at least 1");
        }
        let gens = perms(self.degree, &self.generators)?;
        let group = PermGroup::new(gens)?;
        match &self.subgroup {
            None => TransitiveAction::natural(label, group, cap),
            Some(SubgroupSpec::Generators(h)) => {
                let h = perms(self.degree, h)?;
                if h.is_empty() {
                    return input("subgroup generator list is empty");
                }
                TransitiveAction::on_cosets(label, group, &h, cap)
            }
            Some(SubgroupSpec::Stabilizer { point, order }) => {
                let stab = group.point_stabilizer(*point, cap)?;
                let h = select_subgroup(self.degree, &stab, *order, cap)?;
                TransitiveAction::on_cosets(label, group, &h, cap)
            }
        }
    }
}

/// Generators of the first order-`k` subgroup of `ambient` found by trying
/// the whole group, then cyclic subgroups, then 2-generated ones, in
/// element order.
fn select_subgroup(
    degree: usize,
    ambient: &[Permutation],
    k: u64,
    cap: usize,
) -> Result<Vec<Permutation>> {
    if k == 0 || ambient.len() as u64 % k != 0 {
        return input(format!(
            "no subgroup of order {k} in a stabilizer of order {}",
            ambient.len()
        ));
    }
    if ambient.len() as u64 == k {
        let nontrivial: Vec<Permutation> =
            ambient.iter().filter(|g| !g.is_identity()).cloned().collect();
        return Ok(if nontrivial.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            nontrivial
        });
    }
    if k == 1 {
        return Ok(vec![Permutation::identity(degree)]);
    }
    if let Some(g) = ambient.iter().find(|g| g.order() == k) {
        return Ok(vec![g.clone()]);
    }
    for (i, a) in ambient.iter().enumerate() {
        for b in &ambient[i + 1..] {
            let gens = vec![a.clone(), b.clone()];
            if generate_elements(degree, &gens, cap)?.len() as u64 == k {
                return Ok(gens);
            }
        }
    }
    input(format!("no subgroup of order {k} found in the stabilizer"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_natural() {
        let spec = GroupSpec::from_json(r#"{"degree":3,"generators":[[1,0,2],[1,2,0]]}"#).unwrap();
        let a = spec.into_action("s3", 1000).unwrap();
        assert_eq!(a.order(), 6);
        assert_eq!(a.kind(), ActionKind::Natural);
        assert_eq!(a.stabilizer_order(), 2);
    }

    #[test]
    fn stabilizer_selector() {
        let spec = GroupSpec::from_json(
            r#"{"degree":4,"generators":[[1,0,2,3],[1,2,3,0]],"subgroup":{"point":3,"order":3}}"#,
        )
        .unwrap();
        let a = spec.into_action("s4/z3", 1000).unwrap();
        assert_eq!(a.degree(), 8);
        assert_eq!(a.stabilizer_order(), 3);
        assert!(a.stabilizer().iter().all(|g| g.apply(3) == 3));
    }

    #[test]
    fn round_trip_through_json() {
        let spec = GroupSpec::from_json(
            r#"{"degree":4,"generators":[[1,0,2,3],[1,2,3,0]],"subgroup":[[1,2,0,3]]}"#,
        )
        .unwrap();
        let a = spec.into_action("x", 1000).unwrap();
        let again = GroupSpec::from_json(&GroupSpec::from_action(&a).to_json()).unwrap();
        let b = again.into_action("x", 1000).unwrap();
        assert_eq!(a.stabilizer(), b.stabilizer());
        assert_eq!(a.order(), b.order());
    }

    #[test]
    fn malformed_specs() {
        assert!(GroupSpec::from_json("{").is_err());
        let wrong_len = GroupSpec::from_json(r#"{"degree":3,"generators":[[1,0]]}"#).unwrap();
        assert!(wrong_len.into_action("x", 10).is_err());
        let not_sub = GroupSpec::from_json(
            r#"{"degree":4,"generators":[[1,2,3,0]],"subgroup":[[1,0,2,3]]}"#,
        )
        .unwrap();
        assert!(not_sub.into_action("x", 100).is_err());
    }
}
