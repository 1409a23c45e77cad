use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Verdict on the strict-EKR property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrictEkr {
    True,
    False,
    /// Maximum intersecting sets were too many to enumerate within the cap.
    UnknownTruncated,
}

impl fmt::Display for StrictEkr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StrictEkr::True => "true",
            StrictEkr::False => "false",
            StrictEkr::UnknownTruncated => "unknown-truncated",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Clique search on the complement of the derangement graph on all of G.
    ExplicitGraph,
    /// Clique search on the neighbourhood of the identity.
    FixerNeighborhood,
}

/// Exact rationals serialise as `"p/q"`, or `"p"` when integral.
pub mod ratio_string {
    use num_rational::Ratio;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn format(r: &Ratio<u64>) -> String {
        if *r.denom() == 1 {
            r.numer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    pub fn parse(s: &str) -> Option<Ratio<u64>> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
            None => (s.trim().parse().ok()?, 1),
        };
        (d != 0).then(|| Ratio::new(n, d))
    }

    pub fn serialize<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<u64>, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).ok_or_else(|| D::Error::custom(format!("not a rational: {s:?}")))
    }
}

/// The outcome of an intersection-density computation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub group: String,
    pub order: u64,
    pub degree: u64,
    pub stabilizer_order: u64,
    /// Size of a maximum intersecting set.
    pub omega: u64,
    #[serde(with = "ratio_string")]
    pub rho: Ratio<u64>,
    /// A maximum basic intersecting set (contains the identity), as image
    /// arrays on the substrate points.
    pub witness: Vec<Vec<u32>>,
    /// True when the search ran on one worker, so the witness is the first
    /// maximum set in the deterministic search order; otherwise it is just
    /// one maximum set.
    pub witness_deterministic: bool,
    pub ekr: bool,
    pub strict_ekr: StrictEkr,
    pub route: Route,
    /// `|S|`, the number of non-identity elements fixing a point.
    pub fixers: u64,
    pub node_count: u64,
    pub elapsed_secs: f64,
    #[serde(default)]
    pub annotations: BTreeMap<String, String>,
}

impl DensityReport {
    pub fn rho_string(&self) -> String {
        ratio_string::format(&self.rho)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub const CSV_HEADER: &'static str = "group,|G|,degree,|Gv|,omega,rho_num,rho_den,ekr,strict_ekr";

    pub fn csv_row(&self) -> String {
        let group = if self.group.contains(',') || self.group.contains('"') {
            format!("\"{}\"", self.group.replace('"', "\"\""))
        } else {
            self.group.clone()
        };
        format!(
            "{},{},{},{},{},{},{},{},{}",
            group,
            self.order,
            self.degree,
            self.stabilizer_order,
            self.omega,
            self.rho.numer(),
            self.rho.denom(),
            self.ekr,
            self.strict_ekr
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_strings() {
        assert_eq!(ratio_string::format(&Ratio::new(8, 6)), "4/3");
        assert_eq!(ratio_string::format(&Ratio::new(6, 3)), "2");
        assert_eq!(ratio_string::parse("4/3"), Some(Ratio::new(4, 3)));
        assert_eq!(ratio_string::parse("9"), Some(Ratio::new(9, 1)));
        assert_eq!(ratio_string::parse("1/0"), None);
    }

    #[test]
    fn json_round_trip_and_csv() {
        let r = DensityReport {
            group: "S5 on cosets of <(0 1 2)>".into(),
            order: 120,
            degree: 40,
            stabilizer_order: 3,
            omega: 4,
            rho: Ratio::new(4, 3),
            witness: vec![vec![0, 1, 2, 3, 4]],
            witness_deterministic: true,
            ekr: false,
            strict_ekr: StrictEkr::False,
            route: Route::FixerNeighborhood,
            fixers: 20,
            node_count: 10,
            elapsed_secs: 0.5,
            annotations: BTreeMap::new(),
        };
        let json = r.to_json();
        assert!(json.contains("\"rho\": \"4/3\""));
        assert!(json.contains("\"strict_ekr\": \"false\""));
        assert_eq!(DensityReport::from_json(&json).unwrap(), r);
        assert_eq!(r.csv_row(), "S5 on cosets of <(0 1 2)>,120,40,3,4,4,3,false,false");
    }
}
