//! The Nikulin lattice: eight orthogonal (−2)-vectors together with their
//! half-sum.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::code::NodeSet;
use crate::error::{Error, Result};
use crate::lattice::{int, QuadraticSpace, Rational, RationalVector, SublatticeModel};
use crate::naruki::NarukiModel;

pub const RANK: usize = 8;

#[derive(Debug, Clone)]
pub struct NikulinLattice {
    space: QuadraticSpace,
    lattice: SublatticeModel,
}

impl Default for NikulinLattice {
    fn default() -> Self {
        Self::new()
    }
}

impl NikulinLattice {
    pub fn new() -> Self {
        let labels: Vec<String> = (1..=RANK).map(|i| format!("c{i}")).collect();
        let space = QuadraticSpace::diagonal(&labels, &[-2; RANK]).expect("distinct labels");
        let mut generators: Vec<RationalVector> =
            (0..RANK).map(|i| RationalVector::unit(RANK, i)).collect();
        generators.push(half_sum());
        let lattice = SublatticeModel::new(space.clone(), generators).expect("dim 8");
        Self { space, lattice }
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn lattice(&self) -> &SublatticeModel {
        &self.lattice
    }

    /// `d = ½ Σ cᵢ`.
    pub fn d(&self) -> RationalVector {
        half_sum()
    }

    /// The ℤ-basis `{c1, …, c7, d}`.
    pub fn canonical_basis(&self) -> Vec<RationalVector> {
        let mut basis: Vec<RationalVector> = (0..RANK - 1)
            .map(|i| RationalVector::unit(RANK, i))
            .collect();
        basis.push(half_sum());
        basis
    }

    pub fn canonical_gram(&self) -> Vec<Vec<Rational>> {
        self.space
            .gram_of(&self.canonical_basis())
            .expect("basis lives in the space")
    }

    /// Norm −2 vectors `Σ λᵢcᵢ + εd` with the given `ε ∈ {0, 1}`.
    ///
    /// Such a vector equals `Σ (λᵢ + ε/2) cᵢ`, so norm −2 means
    /// `Σ (2λᵢ + ε)² = 4` and every `|λᵢ + ε/2| ≤ 1`. The box searched below
    /// is exactly that bound, so the enumeration is complete.
    pub fn roots_with_parity(&self, epsilon: u8) -> Vec<RationalVector> {
        assert!(epsilon <= 1, "epsilon is 0 or 1");
        let eps = i64::from(epsilon);
        let choices: &[i64] = if epsilon == 0 { &[-1, 0, 1] } else { &[-1, 0] };
        let d = half_sum().scale_int(eps);
        let mut found = Vec::new();
        let mut lambda = [0usize; RANK];
        loop {
            let coeffs: Vec<i64> = lambda.iter().map(|&k| choices[k]).collect();
            let doubled: i64 = coeffs.iter().map(|&c| (2 * c + eps) * (2 * c + eps)).sum();
            if doubled == 4 {
                let v = RationalVector::from_ints(&coeffs) + &d;
                debug_assert_eq!(self.space.norm(&v).expect("dim 8"), int(-2));
                found.push(v);
            }
            // odometer over the box
            let mut pos = 0;
            loop {
                if pos == RANK {
                    found.sort();
                    return found;
                }
                lambda[pos] += 1;
                if lambda[pos] < choices.len() {
                    break;
                }
                lambda[pos] = 0;
                pos += 1;
            }
        }
    }

    /// All lattice vectors of norm −2.
    pub fn roots(&self) -> Vec<RationalVector> {
        let mut all = self.roots_with_parity(0);
        all.extend(self.roots_with_parity(1));
        all.sort();
        all
    }

    pub fn discriminant_order(&self) -> BigInt {
        self.lattice
            .discriminant_group()
            .expect("negative definite")
            .order()
    }
}

fn half_sum() -> RationalVector {
    RationalVector::from_ints(&[1; RANK]).half()
}

/// The primitive hull of the span of an even eight inside the lattice.
#[derive(Debug, Clone)]
pub struct EvenEightSaturation {
    /// Index of the node span in its saturation.
    pub index: usize,
    /// Node subsets `S` of the eight whose half-sum lies in the lattice; the
    /// saturation is the node span plus these half-sums.
    pub even_subsets: Vec<NodeSet>,
    /// Gram matrix of `{n1, …, n7, ½ Σ nᵢ}` for the eight nodes in order.
    pub gram: Vec<Vec<Rational>>,
}

impl EvenEightSaturation {
    /// Whether the saturation is isometric to the Nikulin lattice via the
    /// canonical bases.
    pub fn matches(&self, nikulin: &NikulinLattice) -> bool {
        self.index == 2 && self.gram == nikulin.canonical_gram()
    }
}

/// Saturates the span of the eight node classes of `eight` in the lattice.
///
/// The lattice lies in `½ℤ¹⁷`, so every vector of the saturation is a node
/// combination with coefficients in `½ℤ`; the saturation is determined by the
/// subsets of the eight whose half-sum is a lattice vector.
pub fn saturation(eight: NodeSet, model: &NarukiModel) -> Result<EvenEightSaturation> {
    if eight.weight() != 8 {
        return Err(Error::InvalidArgument(format!(
            "expected eight nodes, got {}",
            eight.weight()
        )));
    }
    if !model.is_even(eight) {
        return Err(Error::NotEven);
    }
    if model.ns().denominator() != &BigInt::from(2) {
        return Err(Error::IdentityFailed(String::from(
            "lattice is not contained in half-integral vectors",
        )));
    }
    let members: Vec<_> = eight.nodes().collect();
    let mut even_subsets = Vec::new();
    for mask in 0u16..(1 << 8) {
        let subset = NodeSet::from_nodes(
            members
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, n)| *n),
        );
        if model.is_even(subset) {
            even_subsets.push(subset);
        }
    }
    even_subsets.sort();
    if even_subsets != [NodeSet::EMPTY, eight] {
        return Err(Error::IdentityFailed(format!(
            "saturation of {eight:?} has {} even subsets",
            even_subsets.len()
        )));
    }
    let mut basis: Vec<RationalVector> =
        members[..7].iter().map(|&n| model.node_class(n)).collect();
    basis.push(model.node_sum(eight).half());
    let gram = model.space().gram_of(&basis)?;
    Ok(EvenEightSaturation {
        index: even_subsets.len(),
        even_subsets,
        gram,
    })
}

pub fn saturation_index(eight: NodeSet, model: &NarukiModel) -> Result<usize> {
    saturation(eight, model).map(|s| s.index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::NodeLabel;
    use crate::naruki::delta;

    #[test]
    fn d_has_norm_minus_four() {
        let n = NikulinLattice::new();
        assert_eq!(n.space().norm(&n.d()).unwrap(), int(-4));
        assert!(n.lattice().contains(&n.d()).unwrap());
        assert_eq!(n.lattice().rank(), 8);
    }

    #[test]
    fn half_branch_has_no_roots() {
        assert!(NikulinLattice::new().roots_with_parity(1).is_empty());
    }

    #[test]
    fn roots_are_plus_minus_basis() {
        let roots = NikulinLattice::new().roots();
        assert_eq!(roots.len(), 16);
        for v in &roots {
            let nonzero: Vec<_> = v.coords().iter().filter(|x| **x != int(0)).collect();
            assert_eq!(nonzero.len(), 1);
            assert!(*nonzero[0] == int(1) || *nonzero[0] == int(-1));
            assert!(roots.contains(&-v));
        }
    }

    #[test]
    fn discriminant_of_order_64() {
        assert_eq!(NikulinLattice::new().discriminant_order(), BigInt::from(64));
    }

    #[test]
    fn saturation_of_delta() {
        let model = NarukiModel::new();
        let nikulin = NikulinLattice::new();
        let s = saturation(delta(1, 2).unwrap(), &model).unwrap();
        assert_eq!(s.index, 2);
        let s = saturation(delta(3, 4).unwrap(), &model).unwrap();
        assert!(s.matches(&nikulin));
    }

    #[test]
    fn non_even_eight_is_rejected() {
        let model = NarukiModel::new();
        let odd = NodeSet::from_nodes((0..8).map(|k| NodeLabel::from_index(k).unwrap()));
        assert_eq!(saturation_index(odd, &model), Err(Error::NotEven));
        assert!(matches!(
            saturation_index(NodeSet(0b111), &model),
            Err(Error::InvalidArgument(_))
        ));
    }
}
