//! Néron–Severi lattice of a generic jacobian Kummer surface in Naruki's
//! presentation.
//!
//! The ambient space has basis `L, E0, E12, …, E56` with Gram matrix
//! `diag(4, -2, …, -2)`. Tropes are half-integer vectors in that basis and
//! the lattice `ns` is spanned by the seventeen basis vectors together with
//! the sixteen tropes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::code::NodeSet;
use crate::error::{Error, Result};
use crate::labels::{pairs, NodeLabel, TropeLabel};
use crate::lattice::{int, ratio, QuadraticSpace, Rational, RationalVector, SublatticeModel};

pub const DIM: usize = 17;

/// `(l, m, n)`: the complement of `{1, j, k}` in `{1, …, 6}`, increasing.
pub fn complement_triple(j: u8, k: u8) -> [u8; 3] {
    let mut out = [0u8; 3];
    let rest = (2..=6u8).filter(|&x| x != j && x != k);
    for (slot, x) in out.iter_mut().zip(rest) {
        *slot = x;
    }
    out
}

/// Exact integer value of a rational, if it is one.
pub fn as_integer(x: &Rational) -> Option<i64> {
    x.is_integer().then(|| x.to_integer().to_i64()).flatten()
}

#[derive(Debug, Clone)]
pub struct NarukiModel {
    space: QuadraticSpace,
    ns: SublatticeModel,
}

impl Default for NarukiModel {
    fn default() -> Self {
        Self::new()
    }
}

impl NarukiModel {
    pub fn new() -> Self {
        let labels: Vec<String> = core::iter::once("L".to_string())
            .chain(NodeLabel::all().iter().map(ToString::to_string))
            .collect();
        let mut diag = [-2i64; DIM];
        diag[0] = 4;
        let space = QuadraticSpace::diagonal(&labels, &diag).expect("17 distinct labels");
        let mut generators: Vec<RationalVector> =
            (0..DIM).map(|i| RationalVector::unit(DIM, i)).collect();
        generators.extend(TropeLabel::all().into_iter().map(trope_vector));
        let ns = SublatticeModel::new(space.clone(), generators).expect("generators have dim 17");
        Self { space, ns }
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn ns(&self) -> &SublatticeModel {
        &self.ns
    }

    pub fn l_class(&self) -> RationalVector {
        RationalVector::unit(DIM, 0)
    }

    pub fn node_class(&self, node: NodeLabel) -> RationalVector {
        node_vector(node)
    }

    pub fn trope_class(&self, trope: TropeLabel) -> RationalVector {
        trope_vector(trope)
    }

    pub fn inner(&self, v: &RationalVector, w: &RationalVector) -> Result<Rational> {
        self.space.inner(v, w)
    }

    /// Sum of the node classes in `set`.
    pub fn node_sum(&self, set: NodeSet) -> RationalVector {
        set.nodes()
            .fold(RationalVector::zero(DIM), |acc, n| acc + node_vector(n))
    }

    /// Trope/node incidence: entry `[t][n]` is `⟨trope t, node n⟩`.
    pub fn incidence_matrix(&self) -> [[i64; 16]; 16] {
        let mut m = [[0i64; 16]; 16];
        for t in TropeLabel::all() {
            let tv = trope_vector(t);
            for n in NodeLabel::all() {
                let x = self.space.inner(&tv, &node_vector(n)).expect("same space");
                m[t.index()][n.index()] = as_integer(&x).expect("tropes meet nodes integrally");
            }
        }
        m
    }

    /// Images of the ambient basis under the covering involution `α`.
    pub fn alpha_images(&self) -> BTreeMap<String, RationalVector> {
        let labels = self.space.labels();
        let mut images = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            let image = match i {
                // α(L) = 3L − 4E0, α(E0) = 2L − 3E0
                0 => RationalVector::from_ints(&unit_pair(3, -4)),
                1 => RationalVector::from_ints(&unit_pair(2, -3)),
                _ => RationalVector::unit(DIM, i),
            };
            images.insert(label.clone(), image);
        }
        images
    }

    pub fn alpha(&self, v: &RationalVector) -> Result<RationalVector> {
        if v.dim() != DIM {
            return Err(Error::DimensionMismatch {
                expected: DIM,
                found: v.dim(),
            });
        }
        let c = v.coords();
        let mut coords = c.to_vec();
        coords[0] = &c[0] * int(3) + &c[1] * int(2);
        coords[1] = -(&c[0] * int(4)) - &c[1] * int(3);
        Ok(RationalVector::new(coords))
    }

    /// The even eight `Δij`: the nodes `Eab` with exactly one of `a, b` in
    /// `{i, j}`.
    pub fn delta(&self, i: u8, j: u8) -> Result<NodeSet> {
        delta(i, j)
    }

    /// Whether `½ Σ_{n ∈ set} n` lies in the lattice.
    pub fn is_even(&self, set: NodeSet) -> bool {
        let (half_den, rem) = self.ns.denominator().div_rem(&BigInt::from(2));
        if !rem.is_zero() {
            return self
                .ns
                .contains(&self.node_sum(set).half())
                .expect("node sums live in the ambient space");
        }
        // denominator · ½ · Σ nodes, computed directly over ℤ
        let mut scaled = alloc::vec![BigInt::zero(); DIM];
        for n in set.nodes() {
            scaled[1 + n.index()] = half_den.clone();
        }
        self.ns.contains_scaled(scaled).expect("dim 17")
    }

    /// Every subset of the sixteen nodes whose half-sum is a lattice vector.
    pub fn scan_even_sets(&self) -> Vec<NodeSet> {
        (0..=u16::MAX)
            .map(NodeSet)
            .filter(|&s| self.is_even(s))
            .collect()
    }

    /// The weight-8 members of the even-set family.
    pub fn even_eights(&self) -> Vec<NodeSet> {
        self.even_eights_containing(NodeSet::EMPTY)
    }

    /// Even eights that contain every node of `s`.
    pub fn even_eights_containing(&self, s: NodeSet) -> Vec<NodeSet> {
        (0..=u16::MAX)
            .map(NodeSet)
            .filter(|w| w.weight() == 8 && w.is_superset_of(s))
            .filter(|&w| self.is_even(w))
            .collect()
    }

    /// Left side `2C1i + 2C1j − 2(L − E0) + 2Eij` of the even-eight identity
    /// (with `C11 = C0`).
    pub fn even_eight_lhs(&self, i: u8, j: u8) -> Result<RationalVector> {
        delta(i, j)?;
        let c_i = trope_vector(TropeLabel::c(1, i)?);
        let c_j = trope_vector(TropeLabel::c(1, j)?);
        let l_minus_e0 = RationalVector::from_ints(&unit_pair(1, -1));
        let e_ij = node_vector(NodeLabel::e(i, j)?);
        Ok(c_i.scale_int(2) + c_j.scale_int(2) - l_minus_e0.scale_int(2) + e_ij.scale_int(2))
    }

    /// Checks `2C1i + 2C1j − 2(L − E0) + 2Eij = −Σ_{n ∈ Δij} n`.
    ///
    /// This is the rearrangement of `2C1i + 2C1j = 2(L − E0) − (Σ_{Δij} n + 2Eij)`;
    /// it exhibits `Σ_{Δij} n` as twice a lattice vector.
    pub fn even_eight_identity(&self, i: u8, j: u8) -> Result<bool> {
        let lhs = self.even_eight_lhs(i, j)?;
        Ok(lhs == -self.node_sum(delta(i, j)?))
    }

    /// The two half-node-sums used against the discriminant group, and
    /// whether each of them and their sum is a nonzero dual class.
    pub fn discriminant_elements(&self) -> DiscriminantElements {
        let first = half_sum(&[(1, 3), (1, 4), (2, 3), (2, 4)]);
        let second = half_sum(&[(1, 2), (2, 3), (1, 5), (3, 5)]);
        let sum = &first + &second;
        let probe = |v: &RationalVector| DualProbe {
            in_dual: self.ns.in_dual(v).expect("dim 17"),
            in_lattice: self.ns.contains(v).expect("dim 17"),
        };
        DiscriminantElements {
            first: probe(&first),
            second: probe(&second),
            sum: probe(&sum),
            vectors: [first, second],
        }
    }

    pub fn discriminant_elements_check(&self) -> bool {
        self.discriminant_elements().independent()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualProbe {
    pub in_dual: bool,
    pub in_lattice: bool,
}

impl DualProbe {
    /// Represents a nonzero class of `L*/L`.
    pub fn nonzero_class(self) -> bool {
        self.in_dual && !self.in_lattice
    }
}

#[derive(Debug, Clone)]
pub struct DiscriminantElements {
    pub vectors: [RationalVector; 2],
    pub first: DualProbe,
    pub second: DualProbe,
    pub sum: DualProbe,
}

impl DiscriminantElements {
    /// Both classes are nonzero and distinct; as both have order two this is
    /// independence over F₂.
    pub fn independent(&self) -> bool {
        self.first.nonzero_class() && self.second.nonzero_class() && self.sum.nonzero_class()
    }
}

fn unit_pair(l: i64, e0: i64) -> [i64; DIM] {
    let mut c = [0i64; DIM];
    c[0] = l;
    c[1] = e0;
    c
}

fn node_vector(node: NodeLabel) -> RationalVector {
    RationalVector::unit(DIM, 1 + node.index())
}

fn half_sum(pairs: &[(u8, u8)]) -> RationalVector {
    let mut v = RationalVector::zero(DIM);
    for &(i, j) in pairs {
        v += node_vector(NodeLabel::E(i, j));
    }
    v.half()
}

/// Nodes occurring in the trope's defining relation, so that the trope is
/// `½(L − Σ nodes)`.
pub fn trope_nodes(trope: TropeLabel) -> NodeSet {
    let nodes: Vec<NodeLabel> = match trope {
        TropeLabel::C0 => core::iter::once(NodeLabel::E0)
            .chain((2..=6).map(|k| NodeLabel::E(1, k)))
            .collect(),
        TropeLabel::C(1, j) => core::iter::once(NodeLabel::E0)
            .chain(
                (1..=6u8)
                    .filter(|&k| k != j)
                    .map(|k| NodeLabel::e(k, j).expect("k != j")),
            )
            .collect(),
        TropeLabel::C(j, k) => {
            let [l, m, n] = complement_triple(j, k);
            [(1, j), (1, k), (j, k), (l, m), (l, n), (m, n)]
                .into_iter()
                .map(|(a, b)| NodeLabel::E(a, b))
                .collect()
        }
    };
    NodeSet::from_nodes(nodes)
}

fn trope_vector(trope: TropeLabel) -> RationalVector {
    let mut coords = alloc::vec![Rational::from_integer(0.into()); DIM];
    coords[0] = ratio(1, 2);
    for n in trope_nodes(trope).nodes() {
        coords[1 + n.index()] = ratio(-1, 2);
    }
    RationalVector::new(coords)
}

pub fn delta(i: u8, j: u8) -> Result<NodeSet> {
    if !(1 <= i && i < j && j <= 6) {
        return Err(Error::InvalidArgument(format!(
            "delta({i}, {j}) needs 1 <= i < j <= 6"
        )));
    }
    let nodes = pairs()
        .filter(|&(a, b)| (a == i || a == j || b == i || b == j) && (a, b) != (i, j))
        .map(|(a, b)| NodeLabel::E(a, b));
    Ok(NodeSet::from_nodes(nodes))
}

/// All fifteen `Δij`, ordered by `(i, j)`.
pub fn all_deltas() -> Vec<((u8, u8), NodeSet)> {
    pairs()
        .map(|(i, j)| ((i, j), delta(i, j).expect("valid pair")))
        .collect()
}
