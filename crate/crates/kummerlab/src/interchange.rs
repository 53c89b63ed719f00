//! JSON interchange for divisor classes and node sets.
//!
//! A divisor class is written against an explicit basis, with every
//! coordinate as a reduced `["num", "den"]` pair of decimal strings:
//!
//! ```json
//! {"basis": ["L", "E0"], "coords": [["1", "2"], ["-3", "1"]]}
//! ```
//!
//! A node set is a sorted list of node labels such as `["E0", "E12"]`.

use std::collections::BTreeSet;
use std::str::FromStr;

use kummerlab_core::code::NodeSet;
use kummerlab_core::labels::NodeLabel;
use kummerlab_core::lattice::{DivisorClass, QuadraticSpace, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClassJson {
    pub basis: Vec<String>,
    pub coords: Vec<[String; 2]>,
}

pub fn encode_rational(x: &Rational) -> [String; 2] {
    [x.numer().to_string(), x.denom().to_string()]
}

pub fn decode_rational(pair: &[String; 2]) -> Result<Rational> {
    let bad = || Error::BadRational(format!("{}/{}", pair[0], pair[1]));
    let num = BigInt::from_str(&pair[0]).map_err(|_| bad())?;
    let den = BigInt::from_str(&pair[1]).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl DivisorClassJson {
    pub fn encode(space: &QuadraticSpace, class: &DivisorClass) -> Result<Self> {
        if class.dim() != space.dim() {
            return Err(kummerlab_core::Error::DimensionMismatch {
                expected: space.dim(),
                found: class.dim(),
            }
            .into());
        }
        Ok(Self {
            basis: space.labels().to_vec(),
            coords: class.coords().iter().map(encode_rational).collect(),
        })
    }

    pub fn decode(&self) -> Result<(Vec<String>, DivisorClass)> {
        if self.basis.len() != self.coords.len() {
            return Err(Error::LengthMismatch {
                basis: self.basis.len(),
                coords: self.coords.len(),
            });
        }
        let coords = self
            .coords
            .iter()
            .map(decode_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok((self.basis.clone(), DivisorClass::new(coords)))
    }

    /// Decodes a class written against the basis of `space`.
    pub fn decode_in(&self, space: &QuadraticSpace) -> Result<DivisorClass> {
        let (basis, class) = self.decode()?;
        if basis != space.labels() {
            return Err(Error::BasisMismatch {
                expected: space.labels().to_vec(),
                found: basis,
            });
        }
        Ok(class)
    }
}

pub fn class_to_string(space: &QuadraticSpace, class: &DivisorClass) -> Result<String> {
    Ok(serde_json::to_string(&DivisorClassJson::encode(
        space, class,
    )?)?)
}

pub fn class_from_str(space: &QuadraticSpace, json: &str) -> Result<DivisorClass> {
    serde_json::from_str::<DivisorClassJson>(json)?.decode_in(space)
}

/// Serde adapter writing a [`NodeSet`] as its sorted label list, for use with
/// `#[serde(with = "node_set")]`.
pub mod node_set {
    use super::*;

    pub fn labels(set: NodeSet) -> Vec<String> {
        let mut out: Vec<String> = set.nodes().map(|n| n.to_string()).collect();
        out.sort();
        out
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<NodeSet> {
        let mut seen = BTreeSet::new();
        for l in labels {
            let node = NodeLabel::from_str(l.as_ref())?;
            if !seen.insert(node) {
                return Err(Error::DuplicateNode(node.to_string()));
            }
        }
        Ok(NodeSet::from_nodes(seen))
    }

    pub fn serialize<S: Serializer>(set: &NodeSet, serializer: S) -> Result<S::Ok, S::Error> {
        labels(*set).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<NodeSet, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        from_labels(&raw).map_err(serde::de::Error::custom)
    }
}

/// A [`NodeSet`] that serializes as a sorted label list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Nodes(#[serde(with = "node_set")] pub NodeSet);
