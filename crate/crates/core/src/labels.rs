//! Names of the sixteen nodes and sixteen tropes.
//!
//! Nodes are `E0` and `Eij` (1 ≤ i < j ≤ 6); tropes are `C0` and `Cij`
//! (1 ≤ i < j ≤ 6). Both sets are ordered canonically: the distinguished
//! label first, then pairs lexicographically.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// The fifteen pairs `(i, j)` with `1 ≤ i < j ≤ 6`, lexicographic.
pub fn pairs() -> impl Iterator<Item = (u8, u8)> + Clone {
    (1..=6u8).flat_map(|i| (i + 1..=6).map(move |j| (i, j)))
}

fn pair_index(i: u8, j: u8) -> usize {
    pairs().position(|p| p == (i, j)).expect("validated pair")
}

fn check_pair(i: u8, j: u8) -> Result<(), Error> {
    if 1 <= i && i < j && j <= 6 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "index pair ({i}, {j}) must satisfy 1 <= i < j <= 6"
        )))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeLabel {
    E0,
    E(u8, u8),
}

impl NodeLabel {
    pub fn e(i: u8, j: u8) -> Result<Self, Error> {
        let (i, j) = (i.min(j), i.max(j));
        check_pair(i, j)?;
        Ok(Self::E(i, j))
    }

    /// All sixteen nodes in canonical order.
    pub fn all() -> Vec<NodeLabel> {
        core::iter::once(Self::E0)
            .chain(pairs().map(|(i, j)| Self::E(i, j)))
            .collect()
    }

    /// Position in the canonical order; also the bit of a [`NodeSet`](crate::NodeSet).
    pub fn index(self) -> usize {
        match self {
            Self::E0 => 0,
            Self::E(i, j) => 1 + pair_index(i, j),
        }
    }

    pub fn from_index(index: usize) -> Option<Self> {
        match index {
            0 => Some(Self::E0),
            1..=15 => pairs().nth(index - 1).map(|(i, j)| Self::E(i, j)),
            _ => None,
        }
    }

    /// Whether index `k` is one of the two subscripts.
    pub fn involves(self, k: u8) -> bool {
        matches!(self, Self::E(i, j) if i == k || j == k)
    }
}

impl fmt::Display for NodeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::E0 => f.write_str("E0"),
            Self::E(i, j) => write!(f, "E{i}{j}"),
        }
    }
}

impl FromStr for NodeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_label(s, 'E').and_then(|p| match p {
            None => Ok(Self::E0),
            Some((i, j)) => Self::e(i, j),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropeLabel {
    C0,
    C(u8, u8),
}

impl TropeLabel {
    /// `Cij`, with `C11` read as `C0`.
    pub fn c(i: u8, j: u8) -> Result<Self, Error> {
        if i == 1 && j == 1 {
            return Ok(Self::C0);
        }
        let (i, j) = (i.min(j), i.max(j));
        check_pair(i, j)?;
        Ok(Self::C(i, j))
    }

    pub fn all() -> Vec<TropeLabel> {
        core::iter::once(Self::C0)
            .chain(pairs().map(|(i, j)| Self::C(i, j)))
            .collect()
    }

    pub fn index(self) -> usize {
        match self {
            Self::C0 => 0,
            Self::C(i, j) => 1 + pair_index(i, j),
        }
    }
}

impl fmt::Display for TropeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::C0 => f.write_str("C0"),
            Self::C(i, j) => write!(f, "C{i}{j}"),
        }
    }
}

impl FromStr for TropeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_label(s, 'C').and_then(|p| match p {
            None => Ok(Self::C0),
            Some((i, j)) => Self::c(i, j),
        })
    }
}

fn parse_label(s: &str, prefix: char) -> Result<Option<(u8, u8)>, Error> {
    let bad = || Error::UnknownLabel(String::from(s));
    let rest = s.strip_prefix(prefix).ok_or_else(bad)?;
    let digits: Vec<u8> = rest
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as u8))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    match digits[..] {
        [0] => Ok(None),
        [i, j] => Ok(Some((i, j))),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn sixteen_of_each() {
        assert_eq!(NodeLabel::all().len(), 16);
        assert_eq!(TropeLabel::all().len(), 16);
        for (k, n) in NodeLabel::all().into_iter().enumerate() {
            assert_eq!(n.index(), k);
            assert_eq!(NodeLabel::from_index(k), Some(n));
        }
        assert_eq!(NodeLabel::from_index(16), None);
    }

    #[test]
    fn canonical_order() {
        let names: Vec<_> = NodeLabel::all().iter().map(ToString::to_string).collect();
        assert_eq!(names[..4], ["E0", "E12", "E13", "E14"]);
        assert_eq!(names[15], "E56");
    }

    #[test]
    fn parse_round_trip_and_aliases() {
        for n in NodeLabel::all() {
            assert_eq!(n.to_string().parse::<NodeLabel>().unwrap(), n);
        }
        for t in TropeLabel::all() {
            assert_eq!(t.to_string().parse::<TropeLabel>().unwrap(), t);
        }
        assert_eq!(TropeLabel::c(1, 1).unwrap(), TropeLabel::C0);
        assert_eq!("C11".parse::<TropeLabel>().unwrap(), TropeLabel::C0);
        assert!("E11".parse::<NodeLabel>().is_err());
        assert!("E17".parse::<NodeLabel>().is_err());
        assert!("X12".parse::<NodeLabel>().is_err());
        assert_eq!(NodeLabel::e(4, 2).unwrap(), NodeLabel::E(2, 4));
    }
}
